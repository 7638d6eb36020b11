#include "expansionlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "expansionlab/error.hpp"
#include "expansionlab/geometry.hpp"

namespace explab {

namespace {

bool leq_with_slack(double lhs, double rhs) {
    return lhs <= rhs + kCertificateSlack * std::max(1.0, std::abs(rhs));
}

struct PairExtrema {
    double sup = 0.0;
    double inf = 0.0;
};

PairExtrema pair_extrema(const PolyTuple& integrand, const PointTuple& a, const PointTuple& b) {
    PairExtrema e;
    e.inf = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < integrand.size(); ++j) {
        e.sup = std::max(e.sup, extremum_abs(integrand[j], a[j], b[j], Extremum::sup));
        e.inf = std::min(e.inf, extremum_abs(integrand[j], a[j], b[j], Extremum::inf));
    }
    if (integrand.size() == 0) e.inf = 0.0;
    return e;
}

}  // namespace

BoundCertificate certify(const PolyTuple& integrand, std::span<const PointTuple> sorted,
                         const ExpansionConfig& cfg) {
    if (sorted.size() < 2) throw Error(ErrorCode::InsufficientPoints, "certificate needs at least two points");
    const PairBreakdown breakdown = integrate_consecutive(integrand, sorted, cfg);

    BoundCertificate c;
    c.integral = breakdown.total;
    c.integral_abs = std::abs(breakdown.total);
    c.boundary_count = sorted.size();
    c.tuple_dim = integrand.size();
    for (const auto& p : breakdown.pairs) {
        const PairExtrema e = pair_extrema(integrand, sorted[p.index], sorted[p.index + 1]);
        c.M_per_pair.push_back(e.sup);
        c.R_per_pair.push_back(e.inf);
        c.M_global = std::max(c.M_global, e.sup);
    }
    if (!(c.M_global > 0))
        throw Error(ErrorCode::DegenerateM, "every integrand vanishes on every pair interval");

    c.gaps = consecutive_gaps(sorted);
    c.max_gap = *std::max_element(c.gaps.begin(), c.gaps.end());
    c.min_gap = *std::min_element(c.gaps.begin(), c.gaps.end());
    const double root_n = std::sqrt(static_cast<double>(c.tuple_dim));
    const double pairs = static_cast<double>(c.boundary_count - 1);
    c.chain_bound = pairs * root_n * c.M_global * c.max_gap;
    c.implied_delta = c.integral_abs / (pairs * c.M_global * root_n);
    c.holds = leq_with_slack(c.integral_abs, c.chain_bound);
    c.closest_pair_exceeds_delta = c.min_gap > c.implied_delta;
    return c;
}

BoundCertificate forward_certificate(const Polynomial& f, int m, const ExpansionConfig& cfg) {
    const BoundaryIntegral bi = boundary_integral(f, m, cfg);
    return certify(bi.representation, bi.boundary.points, cfg);
}

ReverseReport reverse_pairs(const PolyTuple& integrand, std::span<const PointTuple> sorted,
                            const ExpansionConfig& cfg) {
    if (sorted.size() < 2) throw Error(ErrorCode::InsufficientPoints, "pair check needs at least two points");
    const PairBreakdown breakdown = integrate_consecutive(integrand, sorted, cfg);
    const double root_n = std::sqrt(static_cast<double>(integrand.size()));

    ReverseReport r;
    int sign = 0;
    for (const auto& p : breakdown.pairs) {
        const PairExtrema e = pair_extrema(integrand, sorted[p.index], sorted[p.index + 1]);
        PairCheck c;
        c.index = p.index;
        c.R_pair = e.inf;
        c.M_pair = e.sup;
        c.gap = p.gap;
        c.delta_norm = p.delta.norm();
        c.lower = c.R_pair * c.gap;
        c.upper = c.M_pair * root_n * c.gap;
        c.cos_alpha = c.delta_norm > 0 ? p.value / (c.delta_norm * root_n) : 0.0;
        c.holds = leq_with_slack(c.lower, c.delta_norm) && leq_with_slack(c.delta_norm, c.upper);
        r.all_hold = r.all_hold && c.holds;

        const int s = (c.cos_alpha > 0) - (c.cos_alpha < 0);
        if (s != 0) {
            if (sign != 0 && s != sign) r.cos_sign_uniform = false;
            sign = s;
        }
        r.pairs.push_back(c);
    }
    r.aggregate_certified = r.cos_sign_uniform && sign != 0;
    return r;
}

ReverseReport reverse_pair_check(const Polynomial& f, int m, const ExpansionConfig& cfg) {
    const BoundaryIntegral bi = boundary_integral(f, m, cfg);
    return reverse_pairs(bi.representation, bi.boundary.points, cfg);
}

StabilityReport stability_report(const Polynomial& f, int m, const ExpansionConfig& cfg, double eps_stab) {
    if (f.degree() < 3)
        throw Error(ErrorCode::DegreeTooLow, "stability report needs degree >= 3");
    const BoundaryIntegral bi = boundary_integral(f, m, cfg);
    const auto& pts = bi.boundary.points;

    StabilityReport r;
    r.eps_stab = eps_stab;
    r.integral_abs = std::abs(bi.total());
    r.hypothesis_met = r.integral_abs < 1.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        r.norm_spread = std::max(r.norm_spread, std::abs(pts[i + 1].norm() - pts[i].norm()));
    r.norm_range = pts.back().norm() - pts.front().norm();
    r.every_rotation_stable_at_spread = r.norm_range <= r.norm_spread;
    r.identity_stable = is_stable(Rotation::identity(pts.size()), bi.boundary, eps_stab).stable;
    const StabilityCheck cyc = is_stable(Rotation::cyclic(pts.size()), bi.boundary, eps_stab);
    r.cyclic_shift_deviation = cyc.max_deviation;
    r.cyclic_shift_stable = cyc.stable;
    return r;
}

double empirical_constant(const BoundCertificate& cert, ConstantTarget target) {
    if (!(cert.M_global > 0)) throw Error(ErrorCode::DegenerateM, "M is zero");
    if (target == ConstantTarget::epsilon) return cert.integral_abs;
    if (!(cert.max_gap > 0)) return 0.0;
    return cert.implied_delta / cert.max_gap;
}

double empirical_constant(const Polynomial& f, int m, ConstantTarget target, const ExpansionConfig& cfg) {
    return empirical_constant(forward_certificate(f, m, cfg), target);
}

}  // namespace explab
