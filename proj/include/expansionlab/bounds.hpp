#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "expansionlab/expansion.hpp"
#include "expansionlab/polynomial.hpp"
#include "expansionlab/tuple_calculus.hpp"

namespace explab {

// Comparisons in certificates allow this relative rounding slack.
inline constexpr double kCertificateSlack = 1e-12;

/// Upper-bound chain |integral| <= (#B - 1) sqrt(n) M max_gap for one
/// boundary, with the empirical constants it implies.
struct BoundCertificate {
    double integral = 0.0;      // signed boundary integral
    double integral_abs = 0.0;  // |integral|
    std::size_t boundary_count = 0;
    std::size_t tuple_dim = 0;
    double M_global = 0.0;
    std::vector<double> M_per_pair;
    std::vector<double> R_per_pair;
    std::vector<double> gaps;
    double max_gap = 0.0;
    double min_gap = 0.0;
    double chain_bound = 0.0;  // (#B - 1) sqrt(n) M max_gap
    double implied_delta = 0.0;
    bool holds = false;
    // Measured only: does the closest consecutive pair also exceed delta?
    bool closest_pair_exceeds_delta = false;
};

/// Certificate for an explicit integrand and norm-sorted point list.
/// Throws InsufficientPoints (< 2 points) and DegenerateM.
BoundCertificate certify(const PolyTuple& integrand, std::span<const PointTuple> sorted,
                         const ExpansionConfig& cfg = {});

/// Certificate for the boundary integral of f at phase m.
BoundCertificate forward_certificate(const Polynomial& f, int m, const ExpansionConfig& cfg = {});

struct PairCheck {
    std::size_t index = 0;
    double R_pair = 0.0;  // min_j inf |g_j| on [a_j, b_j]
    double M_pair = 0.0;  // max_j sup |g_j| on [a_j, b_j]
    double gap = 0.0;
    double delta_norm = 0.0;
    double lower = 0.0;  // R_pair * gap
    double upper = 0.0;  // M_pair * sqrt(n) * gap
    double cos_alpha = 0.0;
    bool holds = false;
};

struct ReverseReport {
    std::vector<PairCheck> pairs;
    bool all_hold = true;
    // The aggregate lower bound needs cos(alpha) of one sign on every pair.
    bool cos_sign_uniform = true;
    bool aggregate_certified = false;
};

ReverseReport reverse_pairs(const PolyTuple& integrand, std::span<const PointTuple> sorted,
                            const ExpansionConfig& cfg = {});
ReverseReport reverse_pair_check(const Polynomial& f, int m, const ExpansionConfig& cfg = {});

/// Diagnostic for the small-integral => stable-boundary claim. Nothing here
/// is asserted; the flags just describe what was observed.
struct StabilityReport {
    double integral_abs = 0.0;
    bool hypothesis_met = false;  // |integral| < 1
    double norm_spread = 0.0;     // max_i | ||S_i+1|| - ||S_i|| |
    double norm_range = 0.0;      // max norm - min norm
    // Any permutation is stable at eps iff norm_range <= eps.
    bool every_rotation_stable_at_spread = false;
    bool identity_stable = true;
    double cyclic_shift_deviation = 0.0;
    bool cyclic_shift_stable = false;
    double eps_stab = 0.0;
};

/// Throws DegreeTooLow for degree < 3.
StabilityReport stability_report(const Polynomial& f, int m, const ExpansionConfig& cfg = {},
                                 double eps_stab = 1e-6);

enum class ConstantTarget { delta, epsilon };

/// delta: |integral| / ((#B - 1) M sqrt(n) max_gap), in (0, 1] for a valid
/// certificate. epsilon: the measured |integral|.
double empirical_constant(const BoundCertificate& cert, ConstantTarget target);
double empirical_constant(const Polynomial& f, int m, ConstantTarget target, const ExpansionConfig& cfg = {});

}  // namespace explab
