#include "expansionlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "expansionlab/error.hpp"

namespace explab {

namespace {

void require_size(std::size_t perm, std::size_t points) {
    if (perm != points)
        throw Error(ErrorCode::SizeMismatch, "rotation of size " + std::to_string(perm) +
                                                 " applied to " + std::to_string(points) + " points");
}

}  // namespace

Rotation::Rotation(std::vector<std::size_t> perm) : perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t v : perm_) {
        if (v >= perm_.size() || seen[v])
            throw Error(ErrorCode::InvalidPermutation, "not a permutation of 0.." + std::to_string(perm_.size()) + "-1");
        seen[v] = true;
    }
}

Rotation Rotation::identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return Rotation(std::move(p));
}

Rotation Rotation::cyclic(std::size_t n, std::size_t shift) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (i + shift) % n;
    return Rotation(std::move(p));
}

Rotation Rotation::transposition(std::size_t n, std::size_t a, std::size_t b) {
    if (a >= n || b >= n) throw Error(ErrorCode::InvalidPermutation, "transposition index out of range");
    std::vector<std::size_t> p = identity(n).perm();
    std::swap(p[a], p[b]);
    return Rotation(std::move(p));
}

Rotation compose(const Rotation& outer, const Rotation& inner) {
    require_size(outer.size(), inner.size());
    std::vector<std::size_t> p(inner.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = outer(inner(i));
    return Rotation(std::move(p));
}

Rotation rotation_pow(const Rotation& r, int s) {
    if (s < 1) throw Error(ErrorCode::InvalidArgument, "rotation frequency must be >= 1");
    Rotation acc = r;
    for (int i = 1; i < s; ++i) acc = compose(r, acc);
    return acc;
}

std::vector<PointTuple> apply_rotation(const Rotation& r, std::span<const PointTuple> points) {
    require_size(r.size(), points.size());
    std::vector<PointTuple> out;
    out.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out.push_back(points[r(i)]);
    return out;
}

std::vector<PointTuple> apply_rotation(const Rotation& r, const BoundarySet& b) {
    return apply_rotation(r, std::span<const PointTuple>(b.points));
}

StabilityCheck is_stable(const Rotation& r, std::span<const PointTuple> points, double eps_stab) {
    require_size(r.size(), points.size());
    if (!(eps_stab > 0)) throw Error(ErrorCode::InvalidArgument, "eps_stab must be positive");
    StabilityCheck out;
    out.eps_stab = eps_stab;
    for (std::size_t i = 0; i < points.size(); ++i)
        out.max_deviation = std::max(out.max_deviation, std::abs(points[r(i)].norm() - points[i].norm()));
    out.stable = out.max_deviation <= eps_stab;
    return out;
}

StabilityCheck is_stable(const Rotation& r, const BoundarySet& b, double eps_stab) {
    return is_stable(r, std::span<const PointTuple>(b.points), eps_stab);
}

PointTuple defoliate(const PointTuple& p) {
    const double n = p.norm();
    if (!(n > 0)) throw Error(ErrorCode::ZeroNorm, "cannot project the origin onto the sphere");
    std::vector<double> c = p.coords();
    for (double& v : c) v /= n;
    return PointTuple(std::move(c));
}

}  // namespace explab
