#include "expansionlab/runners.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "expansionlab/error.hpp"
#include "expansionlab/expansion.hpp"
#include "expansionlab/parallel.hpp"
#include "expansionlab/tuple_calculus.hpp"

namespace explab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

// Largest component-degree product of E^1(S_f) over f of degree n.
std::size_t generic_boundary_bound(int n) {
    if (n < 2) return 0;
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<double>(i + 1);
    const PolyTuple e = expand(tuple_repr(Polynomial(std::move(c))));
    std::size_t product = 1;
    for (const auto& comp : e) product *= static_cast<std::size_t>(std::max(0, comp.degree()));
    return product;
}

// Minimum normalized distance from the stationary runner at t = i / grid,
// exact for integer relative speeds.
double grid_min_distance(std::span<const std::int64_t> rel, std::int64_t i, std::int64_t grid) {
    double best = 0.5;
    for (std::int64_t v : rel) {
        std::int64_t r = (v % grid) * (i % grid) % grid;
        if (r < 0) r += grid;
        const double x = static_cast<double>(r) / static_cast<double>(grid);
        best = std::min(best, std::min(x, 1.0 - x));
    }
    return best;
}

double min_distance(std::span<const std::int64_t> rel, double t) {
    double best = 0.5;
    for (std::int64_t v : rel) {
        const double y = static_cast<double>(v) * t;
        const double x = y - std::floor(y);
        best = std::min(best, std::min(x, 1.0 - x));
    }
    return best;
}

struct Peak {
    double t;
    double value;
};

// Golden-section maximization on [lo, hi]; the objective is a min of tents
// and therefore unimodal near a grid maximum.
Peak golden_max(std::span<const std::int64_t> rel, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = min_distance(rel, c);
    double fd = min_distance(rel, d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = min_distance(rel, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = min_distance(rel, d);
        }
    }
    const double t = 0.5 * (a + b);
    return {t, min_distance(rel, t)};
}

}  // namespace

std::string_view metric_name(Metric m) noexcept {
    switch (m) {
        case Metric::chord: return "chord";
        case Metric::arc: return "arc";
        case Metric::normalized: return "normalized";
    }
    return "chord";
}

Metric parse_metric(std::string_view name) {
    if (name == "chord") return Metric::chord;
    if (name == "arc") return Metric::arc;
    if (name == "normalized") return Metric::normalized;
    throw Error(ErrorCode::InvalidArgument, "unknown metric '" + std::string(name) + "'");
}

double circle_distance(double theta_a, double theta_b, Metric metric) noexcept {
    const double d = std::abs(wrap_angle(theta_a) - wrap_angle(theta_b));
    const double arc = std::min(d, kTwoPi - d);
    switch (metric) {
        case Metric::chord: return 2.0 * std::sin(arc / 2.0);
        case Metric::arc: return arc;
        case Metric::normalized: return arc / kTwoPi;
    }
    return arc;
}

void RunnerConfig::validate() const {
    if (speeds.size() < 2) throw Error(ErrorCode::InvalidRunnerConfig, "need at least two runners");
    for (double v : speeds)
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidRunnerConfig, "speeds must be finite");
    std::vector<double> sorted = speeds;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::InvalidRunnerConfig, "speeds must be pairwise distinct");
    if (!std::isfinite(start_angle)) throw Error(ErrorCode::InvalidRunnerConfig, "start angle must be finite");
}

RunnerSnapshot positions_at(const RunnerConfig& cfg, double t) {
    cfg.validate();
    if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "time must be finite");
    RunnerSnapshot s;
    s.time = t;
    const std::size_t k = cfg.k();
    s.angles.resize(k);
    for (std::size_t i = 0; i < k; ++i) s.angles[i] = wrap_angle(cfg.start_angle + cfg.speeds[i] * t);
    s.order.resize(k);
    for (std::size_t i = 0; i < k; ++i) s.order[i] = i;
    if (cfg.sort_by_angle)
        std::stable_sort(s.order.begin(), s.order.end(),
                         [&](std::size_t a, std::size_t b) { return s.angles[a] < s.angles[b]; });
    s.gaps.resize(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i)
        s.gaps[i] = circle_distance(s.angles[s.order[i]], s.angles[s.order[i + 1]], cfg.metric);
    return s;
}

double equal_gap_residual(const RunnerSnapshot& s) noexcept {
    double r = 0.0;
    for (double g : s.gaps) r = std::max(r, std::abs(g - s.gaps.front()));
    return r;
}

std::vector<double> equal_gap_times(const RunnerConfig& cfg, const EqualGapOptions& opts) {
    cfg.validate();
    if (!(opts.t0 < opts.t1)) throw Error(ErrorCode::InvalidArgument, "window must satisfy t0 < t1");
    if (opts.grid < 2) throw Error(ErrorCode::InvalidArgument, "grid must be >= 2");

    const std::size_t n = opts.grid;
    const double step = (opts.t1 - opts.t0) / static_cast<double>(n - 1);
    auto time_at = [&](std::size_t j) { return j + 1 == n ? opts.t1 : opts.t0 + static_cast<double>(j) * step; };
    auto leading_diff = [&](const RunnerSnapshot& s) { return s.gaps.size() < 2 ? 0.0 : s.gaps[1] - s.gaps[0]; };

    std::vector<double> residual(n), diff(n);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            const RunnerSnapshot s = positions_at(cfg, time_at(j));
            residual[j] = equal_gap_residual(s);
            diff[j] = leading_diff(s);
        }
    }, 4096);

    std::vector<double> times;
    for (std::size_t j = 0; j < n; ++j) {
        if (residual[j] <= opts.tol) {
            times.push_back(time_at(j));
            continue;
        }
        if (j + 1 == n || residual[j + 1] <= opts.tol) continue;
        if (!((diff[j] < 0 && diff[j + 1] > 0) || (diff[j] > 0 && diff[j + 1] < 0))) continue;
        double lo = time_at(j), hi = time_at(j + 1);
        double flo = diff[j];
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double fm = leading_diff(positions_at(cfg, mid));
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        const double t = 0.5 * (lo + hi);
        if (equal_gap_residual(positions_at(cfg, t)) <= opts.tol) times.push_back(t);
    }
    if (opts.after) std::erase_if(times, [&](double t) { return !(t > *opts.after); });
    return times;
}

double d_min_general(double min_gap, std::size_t k) noexcept {
    return min_gap * static_cast<double>(k - 1) / std::numbers::pi;
}

double d_min_eight(double min_gap) noexcept {
    return std::numbers::pi / (7.0 * std::numbers::sqrt3 * min_gap);
}

BoundCheck conditional_bound_check(const RunnerConfig& cfg, double t, double D, int n_poly, double tol) {
    if (!(D > 0)) throw Error(ErrorCode::InvalidArgument, "D must be positive");
    const RunnerSnapshot s = positions_at(cfg, t);
    BoundCheck r;
    r.time = t;
    r.k = cfg.k();
    r.metric = cfg.metric;
    r.gaps = s.gaps;
    r.D = D;
    r.n_poly = n_poly;
    r.residual = equal_gap_residual(s);
    if (r.residual > tol)
        throw Error(ErrorCode::ConditionNotMet, "consecutive gaps differ by " + std::to_string(r.residual) +
                                                    " > tol " + std::to_string(tol));
    r.min_gap = *std::min_element(s.gaps.begin(), s.gaps.end());

    r.general_bound = D * std::numbers::pi / static_cast<double>(r.k - 1);
    r.general_pass = r.min_gap > r.general_bound;
    r.D_min_general = d_min_general(r.min_gap, r.k);

    r.eight_runner_form = r.k == 8 && n_poly == 3;
    r.eight_runner_bound = std::numbers::pi / (7.0 * D * std::numbers::sqrt3);
    r.eight_runner_pass = r.min_gap > r.eight_runner_bound;
    if (r.min_gap > 0) r.D_min_eight = d_min_eight(r.min_gap);

    r.generic_boundary_count = generic_boundary_bound(n_poly);
    return r;
}

LonelyResult lonely_oracle(std::span<const double> speeds, std::size_t grid, double refine_tol) {
    if (speeds.size() < 2) throw Error(ErrorCode::InvalidRunnerConfig, "need at least two runners");
    if (grid < 2) throw Error(ErrorCode::InvalidArgument, "grid must be >= 2");
    if (!(refine_tol > 0)) throw Error(ErrorCode::InvalidArgument, "refine_tol must be positive");
    for (double v : speeds)
        if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 1e9)
            throw Error(ErrorCode::NonIntegerSpeeds, "oracle speeds must be integers");
    RunnerConfig probe;
    probe.speeds.assign(speeds.begin(), speeds.end());
    probe.validate();

    LonelyResult out;
    const auto zero = std::find(speeds.begin(), speeds.end(), 0.0);
    out.stationary = zero == speeds.end() ? 0 : static_cast<std::size_t>(zero - speeds.begin());
    const auto base = static_cast<std::int64_t>(speeds[out.stationary]);
    std::vector<std::int64_t> rel;
    for (std::size_t i = 0; i < speeds.size(); ++i)
        if (i != out.stationary) rel.push_back(static_cast<std::int64_t>(speeds[i]) - base);

    const auto g = static_cast<std::int64_t>(grid);
    std::vector<double> values(grid);
    parallel_for(grid, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            values[i] = grid_min_distance(rel, static_cast<std::int64_t>(i), g);
    }, 1 << 16);

    // Grid maxima on the circle of period 1, best first; ties keep the earlier time.
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < grid; ++i) {
        const double prev = values[(i + grid - 1) % grid];
        const double next = values[(i + 1) % grid];
        if (values[i] >= prev && values[i] >= next && values[i] > 0) peaks.push_back(i);
    }
    std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    if (peaks.size() > 16) peaks.resize(16);

    const std::size_t best_grid = std::max_element(values.begin(), values.end()) - values.begin();
    out.t_star = static_cast<double>(best_grid) / static_cast<double>(grid);
    out.max_min_distance = values[best_grid];

    const double h = 1.0 / static_cast<double>(grid);
    for (std::size_t i : peaks) {
        const double center = static_cast<double>(i) * h;
        const Peak p = golden_max(rel, center - h, center + h, refine_tol);
        if (p.value > out.max_min_distance) {
            out.max_min_distance = p.value;
            out.t_star = p.t - std::floor(p.t);
        }
    }
    return out;
}

}  // namespace explab
