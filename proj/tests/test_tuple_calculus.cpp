#include <doctest.h>

#include <cmath>
#include <random>

#include "expansionlab/error.hpp"
#include "expansionlab/tuple_calculus.hpp"
#include "oracles.hpp"

using namespace explab;
using doctest::Approx;

namespace {
const PolyTuple kS{Polynomial{0, 0, 0, 1}, Polynomial{0, 0, 1}, Polynomial{1, -1}};

void check_point(const PointTuple& got, const std::vector<double>& want, double tol) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol * (1 + std::abs(want[i])));
}
}  // namespace

TEST_CASE("nabla") {
    CHECK(nabla(kS) == PolyTuple{Polynomial{0, 0, 3}, Polynomial{0, 2}, Polynomial{-1}});
    CHECK(nabla(PolyTuple{Polynomial{5}, Polynomial{7}}) == PolyTuple{Polynomial{}, Polynomial{}});
}

TEST_CASE("nabla_at") {
    CHECK(nabla_at(kS, 1) == PointTuple{3, 2, -1});
    CHECK(nabla_at(kS, 0) == PointTuple{0, 0, -1});
    CHECK(nabla_at(PolyTuple{Polynomial{2}, Polynomial{2}}, 4.2) == PointTuple{0, 0});
}

TEST_CASE("delta") {
    CHECK(delta(PolyTuple{Polynomial{0, 0, 3}, Polynomial{0, 2}}) ==
          PolyTuple{Polynomial{0, 0, 0, 1}, Polynomial{0, 0, 1}});
    CHECK(delta(PolyTuple{Polynomial{}, Polynomial{}}) == PolyTuple{Polynomial{}, Polynomial{}});
    CHECK(delta(PolyTuple{Polynomial{-1, 2}, Polynomial{-1}}) == PolyTuple{Polynomial{0, -1, 1}, Polynomial{0, -1}});
}

TEST_CASE("delta_between") {
    const double r = oracle::Cubic::r;
    const auto d = delta_between(kS, PointTuple{0.5, r, 0}, PointTuple{0.5, -r, -2.0 / 3.0});
    check_point(d, {0, -oracle::Cubic::x2_integral, -8.0 / 9.0}, 1e-14);

    const PointTuple same{0.3, -1.2, 4};
    check_point(delta_between(kS, same, same), {0, 0, 0}, 0);

    const PolyTuple sq{Polynomial{0, 0, 1}, Polynomial{0, 0, 1}};
    check_point(delta_between(sq, PointTuple{-r, -r}, PointTuple{r, r}),
                {oracle::Cubic::x2_integral, oracle::Cubic::x2_integral}, 1e-14);

    CHECK_THROWS_AS(delta_between(kS, PointTuple{0, 0}, PointTuple{1, 1}), Error);
    try {
        delta_between(kS, PointTuple{0, 0, 0}, PointTuple{1, 1});
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LengthMismatch);
    }
}

TEST_CASE("tuple_repr") {
    CHECK(tuple_repr(Polynomial{1, -1, 1, 1}) == kS);
    CHECK(tuple_repr(Polynomial{0, 0, 1}) == PolyTuple{Polynomial{0, 0, 1}, Polynomial{}});
    CHECK(tuple_repr(Polynomial{0, 1, 0, 0, 2}) ==
          PolyTuple{Polynomial{0, 0, 0, 0, 2}, Polynomial{}, Polynomial{}, Polynomial{0, 1}});
    try {
        tuple_repr(Polynomial{1, 1});
        FAIL("expected DegreeTooLow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeTooLow);
    }
}

TEST_CASE("point tuple basics") {
    const PointTuple p{3, 4};
    CHECK(p.norm() == 5);
    CHECK(PointTuple::ones(3) == PointTuple{1, 1, 1});
    CHECK(dot(p, PointTuple{1, 1}) == 7);
    CHECK(distance(p, PointTuple{0, 0}) == 5);
    CHECK(p + PointTuple{1, -4} == PointTuple{4, 0});
}

TEST_CASE("parse and print tuples") {
    CHECK(parse_tuple("0,0,0,1; 0,0,1; 1,-1") == kS);
    CHECK(to_string(kS) == "(x^3, x^2, -x+1)");
    CHECK(parse_point("0.5, -2, 1e-3") == PointTuple{0.5, -2, 1e-3});
    CHECK(parse_point("1e-20,0") == PointTuple{1e-20, 0});
    CHECK_THROWS_AS(parse_point("1,a"), Error);
}

TEST_CASE("property: nabla inverts delta exactly on integer tuples") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        std::vector<Polynomial> comps;
        for (std::size_t i = 0; i < n; ++i) comps.emplace_back(oracle::random_int_coeffs(rng, static_cast<int>(rng() % 7)));
        const PolyTuple s(comps);
        CHECK(nabla(delta(s)) == s);
    }
}

TEST_CASE("property: tuple_repr sums back to f") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 1000; ++trial) {
        const int degree = 2 + static_cast<int>(rng() % 6);
        const Polynomial f(oracle::random_int_coeffs(rng, degree));
        const auto s = tuple_repr(f);
        CHECK(s.size() == static_cast<std::size_t>(degree));
        CHECK(s.sum() == f);
    }
}

TEST_CASE("property: delta_between is antisymmetric") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 500; ++trial) {
        const Polynomial f(oracle::random_int_coeffs(rng, 3 + static_cast<int>(rng() % 3)));
        const auto s = tuple_repr(f);
        std::vector<double> a(s.size()), b(s.size());
        for (auto& v : a) v = u(rng);
        for (auto& v : b) v = u(rng);
        const auto fwd = delta_between(s, PointTuple(a), PointTuple(b));
        const auto back = delta_between(s, PointTuple(b), PointTuple(a));
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(fwd[i] == -back[i]);
            CHECK(fwd[i] == Approx(oracle::simpson(s[i].coeffs(), a[i], b[i])).epsilon(1e-9).scale(1));
        }
    }
}
