#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "expansionlab/polynomial.hpp"
#include "expansionlab/tuple_calculus.hpp"

namespace explab {

struct ExpansionConfig {
    std::size_t max_boundary_size = 10000;
    double tau_root = 1e-12;
    // Scaled by (1 + max|coeff|) of the component being checked.
    double tau_eval = 1e-9;
    // Relative tolerance under which two norms count as tied.
    double tau_norm = 1e-12;
    bool include_tied_pairs = true;

    /// Throws InvalidArgument on a non-positive tolerance or zero size cap.
    void validate() const;
};

/// Boundary points of the phase-m expansion, sorted by norm with
/// lexicographic tie-breaking.
struct BoundarySet {
    std::vector<PointTuple> points;
    PolyTuple source;  // E^m(S)
    int phase = 0;
    std::vector<std::vector<RealRoot>> component_roots;

    std::size_t size() const noexcept { return points.size(); }
    bool empty() const noexcept { return points.empty(); }
};

/// Component i becomes the sum of the derivatives of every other component,
/// i.e. the hollow all-ones matrix applied to the derivative stack.
/// Throws InvalidArgument for tuples shorter than 2.
PolyTuple expand(const PolyTuple& s);

/// m-fold expand; m = 0 is the identity.
PolyTuple expand_iter(const PolyTuple& s, int m);

/// Sorts ascending by norm. Norms within cfg.tau_norm (relative) of their
/// neighbour form a tie cluster, ordered lexicographically by coordinates.
void sort_by_norm(std::vector<PointTuple>& points, double tau_norm);

bool norms_tied(double a, double b, double tau_norm) noexcept;

/// Cartesian product of the distinct real roots of each component of
/// E^m(S). An empty result means some component has no real root.
/// Throws DegenerateComponent, BoundaryTooLarge, InvalidArgument (m < 1).
BoundarySet boundary(const PolyTuple& s, int m, const ExpansionConfig& cfg = {});

/// Largest |E^m(S)_i(root)| / (1 + max|coeff|) over all component roots;
/// every boundary coordinate satisfies residual <= cfg.tau_eval.
double max_boundary_residual(const BoundarySet& b);

struct PairIntegral {
    std::size_t index = 0;  // pair (index, index + 1) in sorted order
    PointTuple delta;       // componentwise integrals of the integrand
    double value = 0.0;     // delta . (1, ..., 1)
    double gap = 0.0;       // ||S_index - S_index+1||
    bool tied = false;
};

struct PairBreakdown {
    std::vector<PairIntegral> pairs;  // only the pairs that were summed
    std::size_t skipped_tied = 0;
    double total = 0.0;
};

/// Integrates `integrand` between consecutive entries of `sorted` and dots
/// each result with the all-ones tuple. The total is reduced in pair order.
PairBreakdown integrate_consecutive(const PolyTuple& integrand, std::span<const PointTuple> sorted,
                                    const ExpansionConfig& cfg = {});

struct BoundaryIntegral {
    Polynomial f;
    PolyTuple representation;  // S_f
    BoundarySet boundary;
    PairBreakdown breakdown;

    double total() const noexcept { return breakdown.total; }
};

/// Throws PhaseTooHigh (m >= degree), EmptyBoundary, InsufficientPoints
/// (#B < 2) and whatever boundary() throws.
BoundaryIntegral boundary_integral(const Polynomial& f, int m, const ExpansionConfig& cfg = {});

/// Throws InsufficientPoints for fewer than two points.
std::vector<double> consecutive_gaps(std::span<const PointTuple> sorted);
std::vector<double> consecutive_gaps(const BoundarySet& b);

struct SearchOptions {
    int k = 2;
    int phase = 1;
    std::size_t budget = 10000;
    std::uint64_t seed = 1;
    ExpansionConfig config{};
};

/// Seeded random search over degrees phase+1 .. phase+6 and integer
/// coefficients in [-9, 9] for f with #B^phase(S_f) == k.
std::optional<Polynomial> find_poly_with_boundary_size(const SearchOptions& opts);

/// Integer polynomial with the given degree, coefficients uniform in
/// [-9, 9] and a nonzero leading coefficient. Stable across platforms.
template <class Engine>
Polynomial random_integer_polynomial(Engine& rng, int degree) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = static_cast<double>(static_cast<int>(rng() % 19) - 9);
    while (c.back() == 0.0) c.back() = static_cast<double>(static_cast<int>(rng() % 19) - 9);
    return Polynomial(std::move(c));
}

}  // namespace explab
