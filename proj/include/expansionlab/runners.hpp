#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace explab {

/// chord: 2|sin(dtheta/2)| on the unit circle. arc: shortest angle.
/// normalized: arc / 2pi, in [0, 1/2].
enum class Metric { chord, arc, normalized };

std::string_view metric_name(Metric m) noexcept;
/// Throws InvalidArgument for an unknown name.
Metric parse_metric(std::string_view name);

/// Distance between two angles (radians) under the given metric.
double circle_distance(double theta_a, double theta_b, Metric metric) noexcept;

struct RunnerConfig {
    std::vector<double> speeds;  // radians per unit time, pairwise distinct
    Metric metric = Metric::chord;
    double start_angle = 0.0;
    // Consecutive runners by angular position at t instead of input order.
    bool sort_by_angle = false;

    /// Throws InvalidRunnerConfig (k < 2, repeated speeds, non-finite values).
    void validate() const;
    std::size_t k() const noexcept { return speeds.size(); }
};

struct RunnerSnapshot {
    double time = 0.0;
    std::vector<double> angles;     // in [0, 2pi), input order
    std::vector<std::size_t> order; // runner indices in "consecutive" order
    std::vector<double> gaps;       // gaps[i] = d(order[i], order[i+1])
};

RunnerSnapshot positions_at(const RunnerConfig& cfg, double t);

/// max_i |gaps[i] - gaps[0]|; zero for k = 2.
double equal_gap_residual(const RunnerSnapshot& s) noexcept;

struct EqualGapOptions {
    double t0 = 0.0;
    double t1 = 1.0;
    double tol = 1e-6;
    std::size_t grid = 10000;
    std::optional<double> after;  // keep only t > after
};

/// Grid scan of the window plus bisection on sign changes of
/// gaps[1] - gaps[0]. Grid points already within tol are returned as-is, so
/// speed sets whose gaps agree identically return the whole grid.
std::vector<double> equal_gap_times(const RunnerConfig& cfg, const EqualGapOptions& opts);

struct BoundCheck {
    double time = 0.0;
    std::size_t k = 0;
    Metric metric = Metric::chord;
    std::vector<double> gaps;
    double min_gap = 0.0;
    double residual = 0.0;
    double D = 1.0;

    // min_gap > D pi / (k - 1)
    double general_bound = 0.0;
    bool general_pass = false;
    double D_min_general = 0.0;

    // min_gap > pi / (7 D sqrt 3), only for k = 8 and a cubic
    bool eight_runner_form = false;
    double eight_runner_bound = 0.0;
    bool eight_runner_pass = false;
    std::optional<double> D_min_eight;  // empty when min_gap == 0

    // Largest phase-1 boundary a generic polynomial of degree n_poly admits,
    // reported next to k.
    int n_poly = 3;
    std::size_t generic_boundary_count = 0;
};

/// Throws ConditionNotMet when the gaps at t differ by more than tol.
BoundCheck conditional_bound_check(const RunnerConfig& cfg, double t, double D, int n_poly,
                                   double tol = 1e-6);

/// D that turns the general bound into an equality: min_gap (k - 1) / pi.
double d_min_general(double min_gap, std::size_t k) noexcept;
/// D that turns the eight-runner bound into an equality: pi / (7 sqrt 3 min_gap).
double d_min_eight(double min_gap) noexcept;

struct LonelyResult {
    double t_star = 0.0;
    double max_min_distance = 0.0;
    std::size_t stationary = 0;
};

/// Brute-force gap of loneliness over one period t in [0, 1) with
/// normalized positions frac(v t): the time maximizing the smallest
/// distance from the stationary runner (speed 0, or the first runner when
/// none is 0) to every other runner. Grid scan, then golden-section
/// refinement around the best grid maxima down to refine_tol.
/// Throws NonIntegerSpeeds and InvalidRunnerConfig.
LonelyResult lonely_oracle(std::span<const double> speeds, std::size_t grid = 1000000,
                           double refine_tol = 1e-9);

}  // namespace explab
