#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "expansionlab/error.hpp"
#include "expansionlab/geometry.hpp"
#include "oracles.hpp"

using namespace explab;
using doctest::Approx;

namespace {
const PolyTuple kS{Polynomial{0, 0, 0, 1}, Polynomial{0, 0, 1}, Polynomial{1, -1}};

bool lex_less(const PointTuple& a, const PointTuple& b) { return a.coords() < b.coords(); }
}  // namespace

TEST_CASE("rotation construction") {
    CHECK_THROWS_AS(Rotation({0, 0, 1}), Error);
    CHECK_THROWS_AS(Rotation({0, 3}), Error);
    try {
        Rotation({1, 1});
        FAIL("expected InvalidPermutation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidPermutation);
    }
    CHECK(Rotation::cyclic(4).perm() == std::vector<std::size_t>{1, 2, 3, 0});
    CHECK(Rotation::transposition(4, 0, 2).perm() == std::vector<std::size_t>{2, 1, 0, 3});
}

TEST_CASE("apply_rotation examples") {
    const auto b = boundary(kS, 1);
    CHECK(apply_rotation(Rotation::identity(4), b) == b.points);

    const auto swapped = apply_rotation(Rotation::transposition(4, 0, 1), b);
    CHECK(swapped[0] == b.points[1]);
    CHECK(swapped[1] == b.points[0]);
    CHECK(swapped[2] == b.points[2]);

    std::vector<PointTuple> pts = b.points;
    for (int i = 0; i < 4; ++i) pts = apply_rotation(Rotation::cyclic(4), pts);
    CHECK(pts == b.points);

    CHECK_THROWS_AS(apply_rotation(Rotation::identity(3), b), Error);
}

TEST_CASE("rotation_pow") {
    const Rotation r({2, 0, 3, 1});
    CHECK(rotation_pow(r, 1) == r);
    CHECK(rotation_pow(Rotation::transposition(5, 1, 3), 2) == Rotation::identity(5));
    CHECK(rotation_pow(Rotation::cyclic(4), 2).perm() == std::vector<std::size_t>{2, 3, 0, 1});
    CHECK(rotation_pow(Rotation::cyclic(4), 4) == Rotation::identity(4));
    CHECK_THROWS_AS(rotation_pow(r, 0), Error);
    CHECK(compose(Rotation::cyclic(4), Rotation::cyclic(4, 3)) == Rotation::identity(4));
    CHECK_THROWS_AS(compose(Rotation::identity(3), Rotation::identity(4)), Error);
}

TEST_CASE("is_stable examples") {
    const auto b = boundary(kS, 1);
    const auto id = is_stable(Rotation::identity(4), b, 1e-15);
    CHECK(id.stable);
    CHECK(id.max_deviation == 0);

    const auto tied = is_stable(Rotation::transposition(4, 0, 1), b, 1e-9);
    CHECK(tied.stable);
    CHECK(tied.max_deviation <= 1e-15);

    const auto cross = is_stable(Rotation::transposition(4, 1, 2), b, 0.1);
    CHECK_FALSE(cross.stable);
    CHECK(cross.max_deviation == Approx(oracle::Cubic::norm_high - oracle::Cubic::norm_low).epsilon(1e-12));
    CHECK(std::abs(cross.max_deviation - 0.250031139) < 1e-9);
}

TEST_CASE("defoliate examples") {
    const auto a = defoliate(PointTuple{3, 4});
    CHECK(a[0] == Approx(0.6).epsilon(1e-15));
    CHECK(a[1] == Approx(0.8).epsilon(1e-15));
    CHECK(defoliate(PointTuple{0, 1, 0}) == PointTuple{0, 1, 0});
    const auto c = defoliate(PointTuple{0.5, oracle::Cubic::r, 0});
    CHECK(c[0] == Approx(0.5 / oracle::Cubic::norm_low).epsilon(1e-12));
    CHECK(c[1] == Approx(oracle::Cubic::r / oracle::Cubic::norm_low).epsilon(1e-12));
    CHECK(std::abs(c[0] - 0.654653671) < 1e-9);
    CHECK(std::abs(c[1] - 0.755928946) < 1e-9);
    CHECK(c[2] == 0);
    try {
        defoliate(PointTuple{0, 0});
        FAIL("expected ZeroNorm");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroNorm);
    }
}

TEST_CASE("property: defoliation lands on the sphere and is idempotent") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-100, 100);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> c(1 + rng() % 8);
        for (auto& v : c) v = u(rng);
        const auto d = defoliate(PointTuple(c));
        CHECK(std::abs(d.norm() - 1) <= 1e-12);
        const auto dd = defoliate(d);
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(dd[i] - d[i]) <= 1e-12);
    }
}

TEST_CASE("property: rotations preserve the boundary multiset") {
    std::mt19937_64 rng(42);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 100; ++trial) {
        const Polynomial f = random_integer_polynomial(rng, 3 + static_cast<int>(rng() % 3));
        BoundarySet b;
        try {
            b = boundary(tuple_repr(f), 1);
        } catch (const Error&) {
            continue;
        }
        if (b.size() < 2) continue;
        std::vector<std::size_t> perm(b.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Rotation r(perm);
        auto moved = apply_rotation(r, b);
        auto orig = b.points;
        std::sort(moved.begin(), moved.end(), lex_less);
        std::sort(orig.begin(), orig.end(), lex_less);
        CHECK(moved == orig);

        // composing with the inverse gives the identity
        std::vector<std::size_t> inv(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
        CHECK(compose(r, Rotation(inv)) == Rotation::identity(perm.size()));
        ++checked;
    }
    CHECK(checked == 100);
}
