#include "expansionlab/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "expansionlab/error.hpp"
#include "expansionlab/parallel.hpp"

namespace explab {

void ExpansionConfig::validate() const {
    if (max_boundary_size < 1) throw Error(ErrorCode::InvalidArgument, "max_boundary_size must be >= 1");
    if (!(tau_root > 0) || !(tau_eval > 0) || !(tau_norm > 0))
        throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
}

PolyTuple expand(const PolyTuple& s) {
    if (s.size() < 2)
        throw Error(ErrorCode::InvalidArgument, "expansion needs a tuple of length >= 2");
    const PolyTuple d = nabla(s);
    std::vector<Polynomial> out;
    out.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        Polynomial row;
        for (std::size_t j = 0; j < d.size(); ++j)
            if (j != i) row = row + d[j];
        out.push_back(std::move(row));
    }
    return PolyTuple(std::move(out));
}

PolyTuple expand_iter(const PolyTuple& s, int m) {
    if (m < 0) throw Error(ErrorCode::InvalidArgument, "phase must be >= 0");
    PolyTuple cur = s;
    for (int i = 0; i < m; ++i) cur = expand(cur);
    return cur;
}

bool norms_tied(double a, double b, double tau_norm) noexcept {
    return std::abs(a - b) <= tau_norm * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

void sort_by_norm(std::vector<PointTuple>& points, double tau_norm) {
    std::stable_sort(points.begin(), points.end(), [](const PointTuple& a, const PointTuple& b) {
        if (a.norm() != b.norm()) return a.norm() < b.norm();
        return a.coords() < b.coords();
    });
    std::size_t start = 0;
    while (start < points.size()) {
        std::size_t end = start + 1;
        while (end < points.size() && norms_tied(points[end - 1].norm(), points[end].norm(), tau_norm)) ++end;
        std::sort(points.begin() + static_cast<std::ptrdiff_t>(start), points.begin() + static_cast<std::ptrdiff_t>(end),
                  [](const PointTuple& a, const PointTuple& b) { return a.coords() < b.coords(); });
        start = end;
    }
}

BoundarySet boundary(const PolyTuple& s, int m, const ExpansionConfig& cfg) {
    cfg.validate();
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "boundary phase must be >= 1");
    BoundarySet out;
    out.phase = m;
    out.source = expand_iter(s, m);

    for (std::size_t i = 0; i < out.source.size(); ++i) {
        if (out.source[i].is_zero())
            throw Error(ErrorCode::DegenerateComponent,
                        "component " + std::to_string(i) + " of the phase-" + std::to_string(m) +
                            " expansion is identically zero");
    }

    std::size_t count = 1;
    bool empty = false;
    for (const auto& comp : out.source) {
        out.component_roots.push_back(real_roots(comp, RootOptions{cfg.tau_root}));
        const std::size_t r = out.component_roots.back().size();
        if (r == 0) empty = true;
    }
    if (empty) return out;
    for (const auto& roots : out.component_roots) {
        count *= roots.size();
        if (count > cfg.max_boundary_size)
            throw Error(ErrorCode::BoundaryTooLarge,
                        "boundary size exceeds max_boundary_size=" + std::to_string(cfg.max_boundary_size));
    }

    const std::size_t n = out.source.size();
    out.points.resize(count);
    parallel_for(count, [&](std::size_t begin, std::size_t end) {
        std::vector<double> coords(n);
        for (std::size_t idx = begin; idx < end; ++idx) {
            std::size_t rest = idx;
            // Last component varies fastest.
            for (std::size_t i = n; i-- > 0;) {
                const auto& roots = out.component_roots[i];
                coords[i] = roots[rest % roots.size()].value;
                rest /= roots.size();
            }
            out.points[idx] = PointTuple(coords);
        }
    });
    sort_by_norm(out.points, cfg.tau_norm);
    return out;
}

double max_boundary_residual(const BoundarySet& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < b.component_roots.size(); ++i) {
        const Polynomial& comp = b.source[i];
        const double scale = 1.0 + comp.max_abs_coeff();
        for (const auto& r : b.component_roots[i]) worst = std::max(worst, std::abs(comp(r.value)) / scale);
    }
    return worst;
}

PairBreakdown integrate_consecutive(const PolyTuple& integrand, std::span<const PointTuple> sorted,
                                    const ExpansionConfig& cfg) {
    PairBreakdown out;
    if (sorted.size() < 2) return out;
    const std::size_t pairs = sorted.size() - 1;
    const PointTuple ones = PointTuple::ones(integrand.size());

    std::vector<PairIntegral> all(pairs);
    parallel_for(pairs, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            PairIntegral& p = all[i];
            p.index = i;
            p.delta = delta_between(integrand, sorted[i], sorted[i + 1]);
            p.value = dot(p.delta, ones);
            p.gap = distance(sorted[i], sorted[i + 1]);
            p.tied = norms_tied(sorted[i].norm(), sorted[i + 1].norm(), cfg.tau_norm);
        }
    });

    for (auto& p : all) {
        if (p.tied && !cfg.include_tied_pairs) {
            ++out.skipped_tied;
            continue;
        }
        out.total += p.value;
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BoundaryIntegral boundary_integral(const Polynomial& f, int m, const ExpansionConfig& cfg) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "phase must be >= 1");
    if (m >= f.degree())
        throw Error(ErrorCode::PhaseTooHigh, "phase " + std::to_string(m) + " must be below degree " +
                                                 std::to_string(f.degree()));
    BoundaryIntegral out;
    out.f = f;
    out.representation = tuple_repr(f);
    out.boundary = boundary(out.representation, m, cfg);
    if (out.boundary.empty())
        throw Error(ErrorCode::EmptyBoundary, "some component of the expansion has no real root");
    if (out.boundary.size() < 2)
        throw Error(ErrorCode::InsufficientPoints, "boundary has a single point");
    out.breakdown = integrate_consecutive(out.representation, out.boundary.points, cfg);
    return out;
}

std::vector<double> consecutive_gaps(std::span<const PointTuple> sorted) {
    if (sorted.size() < 2) throw Error(ErrorCode::InsufficientPoints, "gaps need at least two points");
    std::vector<double> gaps;
    gaps.reserve(sorted.size() - 1);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) gaps.push_back(distance(sorted[i], sorted[i + 1]));
    return gaps;
}

std::vector<double> consecutive_gaps(const BoundarySet& b) { return consecutive_gaps(b.points); }

std::optional<Polynomial> find_poly_with_boundary_size(const SearchOptions& opts) {
    if (opts.k < 1 || opts.phase < 1) throw Error(ErrorCode::InvalidArgument, "k and phase must be >= 1");
    std::mt19937_64 rng(opts.seed);
    for (std::size_t trial = 0; trial < opts.budget; ++trial) {
        const int degree = opts.phase + 1 + static_cast<int>(rng() % 6);
        const Polynomial f = random_integer_polynomial(rng, degree);
        if (f.degree() < 2) continue;
        try {
            const BoundarySet b = boundary(tuple_repr(f), opts.phase, opts.config);
            if (b.size() == static_cast<std::size_t>(opts.k)) return f;
        } catch (const Error&) {
            // Degenerate or oversized boundaries just don't qualify.
        }
    }
    return std::nullopt;
}

}  // namespace explab
