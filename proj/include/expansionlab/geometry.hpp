#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "expansionlab/expansion.hpp"
#include "expansionlab/tuple_calculus.hpp"

namespace explab {

/// A self-map of a boundary set, held as a permutation of point indices:
/// point i goes to point perm[i].
class Rotation {
public:
    /// Throws InvalidPermutation unless perm is a bijection of {0..n-1}.
    explicit Rotation(std::vector<std::size_t> perm);

    static Rotation identity(std::size_t n);
    /// i -> (i + shift) mod n
    static Rotation cyclic(std::size_t n, std::size_t shift = 1);
    static Rotation transposition(std::size_t n, std::size_t a, std::size_t b);

    std::size_t size() const noexcept { return perm_.size(); }
    std::size_t operator()(std::size_t i) const { return perm_[i]; }
    const std::vector<std::size_t>& perm() const noexcept { return perm_; }

    friend bool operator==(const Rotation&, const Rotation&) = default;

private:
    std::vector<std::size_t> perm_;
};

/// (outer o inner)(i) = outer(inner(i)). Throws SizeMismatch.
Rotation compose(const Rotation& outer, const Rotation& inner);

/// s-fold composition; s >= 1.
Rotation rotation_pow(const Rotation& r, int s);

/// Output slot i holds point perm(i). Throws SizeMismatch.
std::vector<PointTuple> apply_rotation(const Rotation& r, std::span<const PointTuple> points);
std::vector<PointTuple> apply_rotation(const Rotation& r, const BoundarySet& b);

struct StabilityCheck {
    bool stable = true;
    double max_deviation = 0.0;  // max_i | ||p_perm(i)|| - ||p_i|| |
    double eps_stab = 0.0;
};

StabilityCheck is_stable(const Rotation& r, std::span<const PointTuple> points, double eps_stab);
StabilityCheck is_stable(const Rotation& r, const BoundarySet& b, double eps_stab);

/// p / ||p||. Throws ZeroNorm.
PointTuple defoliate(const PointTuple& p);

}  // namespace explab
