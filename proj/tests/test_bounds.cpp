#include <doctest.h>

#include <cmath>
#include <random>

#include "expansionlab/bounds.hpp"
#include "expansionlab/error.hpp"
#include "oracles.hpp"

using namespace explab;
using doctest::Approx;
using oracle::Cubic;

namespace {
const Polynomial kF{1, -1, 1, 1};
}

TEST_CASE("forward certificate of the worked cubic") {
    const auto c = forward_certificate(kF, 1);
    CHECK(c.integral == Approx(Cubic::total).epsilon(1e-12));
    CHECK(std::abs(c.integral_abs - 0.760588829) < 1e-9);
    CHECK(c.boundary_count == 4);
    CHECK(c.tuple_dim == 3);
    CHECK(c.M_global == Approx(Cubic::M_global).epsilon(1e-12));
    CHECK(c.max_gap == Approx(Cubic::gap_cross).epsilon(1e-12));
    CHECK(c.min_gap == Approx(Cubic::gap_tied).epsilon(1e-12));
    const double implied = -Cubic::total / (3 * Cubic::M_global * std::sqrt(3.0));
    CHECK(c.implied_delta == Approx(implied).epsilon(1e-12));
    CHECK(std::abs(c.implied_delta - 0.0878252) < 1e-6);
    CHECK(c.chain_bound == Approx(3 * std::sqrt(3.0) * Cubic::M_global * Cubic::gap_cross).epsilon(1e-12));
    CHECK(c.holds);
    CHECK(c.closest_pair_exceeds_delta);
    REQUIRE(c.M_per_pair.size() == 3);
    CHECK(c.R_per_pair[0] == 0);
}

TEST_CASE("certificate edge cases") {
    try {
        forward_certificate(Polynomial{1, 1, 1, 1}, 1);
        FAIL("expected EmptyBoundary");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyBoundary);
    }

    // every pair degenerate: integral 0, implied delta 0, still holds
    const PolyTuple integrand{Polynomial{1, 0, 1}, Polynomial{2}};
    const std::vector<PointTuple> same{PointTuple{0.3, 1}, PointTuple{0.3, 1}, PointTuple{0.3, 1}};
    const auto c = certify(integrand, same);
    CHECK(c.integral_abs == 0);
    CHECK(c.implied_delta == 0);
    CHECK(c.holds);

    const PolyTuple vanishing{Polynomial{0, 1}, Polynomial{0, 0, 1}};
    const std::vector<PointTuple> zeros{PointTuple{0, 0}, PointTuple{0, 0}};
    try {
        certify(vanishing, zeros);
        FAIL("expected DegenerateM");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateM);
    }
    CHECK_THROWS_AS(certify(integrand, std::vector<PointTuple>{PointTuple{1, 1}}), Error);
}

TEST_CASE("reverse pair check on the worked cubic") {
    const auto r = reverse_pair_check(kF, 1);
    REQUIRE(r.pairs.size() == 3);
    CHECK(r.pairs[0].R_pair == 0);
    CHECK(r.pairs[0].lower == 0);
    CHECK(r.pairs[0].delta_norm == Approx(Cubic::x2_integral).epsilon(1e-12));
    CHECK(r.all_hold);
    // pair values are +, -, +: no uniform sign for the aggregate bound
    CHECK_FALSE(r.cos_sign_uniform);
    CHECK_FALSE(r.aggregate_certified);
}

TEST_CASE("reverse pair equality case") {
    const PolyTuple ones{Polynomial{1}, Polynomial{1}};
    const std::vector<PointTuple> pts{PointTuple{0, 0}, PointTuple{1, 1}};
    const auto r = reverse_pairs(ones, pts);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].R_pair == 1);
    CHECK(r.pairs[0].delta_norm == Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.pairs[0].lower == Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.pairs[0].holds);
    CHECK(r.aggregate_certified);

    const auto c = certify(ones, pts);
    CHECK(empirical_constant(c, ConstantTarget::delta) == Approx(1.0).epsilon(1e-15));
    CHECK(empirical_constant(c, ConstantTarget::epsilon) == Approx(2.0).epsilon(1e-15));

    const std::vector<PointTuple> same{PointTuple{0.2, 0.7}, PointTuple{0.2, 0.7}};
    const auto z = reverse_pairs(ones, same);
    CHECK(z.pairs[0].lower == 0);
    CHECK(z.pairs[0].upper == 0);
    CHECK(z.pairs[0].holds);
}

TEST_CASE("stability report") {
    const auto s = stability_report(kF, 1);
    CHECK(std::abs(s.integral_abs - 0.760588829) < 1e-9);
    CHECK(s.hypothesis_met);
    CHECK(s.norm_spread == Approx(Cubic::norm_high - Cubic::norm_low).epsilon(1e-12));
    CHECK(s.identity_stable);
    CHECK_FALSE(s.cyclic_shift_stable);

    CHECK_THROWS_AS(stability_report(Polynomial{-1, 0, 1}, 1), Error);

    // find a campaign instance with |integral| >= 1 and check the flag
    std::mt19937_64 rng(51);
    bool seen_large = false;
    for (int trial = 0; trial < 500 && !seen_large; ++trial) {
        const Polynomial f = random_integer_polynomial(rng, 4);
        try {
            const auto r = stability_report(f, 1);
            if (r.integral_abs >= 1) {
                CHECK_FALSE(r.hypothesis_met);
                seen_large = true;
            }
        } catch (const Error&) {
        }
    }
    CHECK(seen_large);
}

TEST_CASE("empirical constant of the worked cubic") {
    const double c = empirical_constant(kF, 1, ConstantTarget::delta);
    const double implied = -Cubic::total / (3 * Cubic::M_global * std::sqrt(3.0));
    CHECK(c == Approx(implied / Cubic::gap_cross).epsilon(1e-12));
    CHECK(std::abs(c - 0.065868925) < 1e-9);
    CHECK(empirical_constant(kF, 1, ConstantTarget::epsilon) == Approx(-Cubic::total).epsilon(1e-12));
}

TEST_CASE("property: forward chain and per-pair bounds over a campaign") {
    std::mt19937_64 rng(52);
    int valid = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int degree = 3 + static_cast<int>(rng() % 4);
        const Polynomial f = random_integer_polynomial(rng, degree);
        const int m = 1 + static_cast<int>(rng() % (degree - 1));
        BoundCertificate c;
        try {
            c = forward_certificate(f, m);
        } catch (const Error&) {
            continue;
        }
        ++valid;
        CHECK(c.holds);
        const double cd = empirical_constant(c, ConstantTarget::delta);
        CHECK(cd >= 0);
        CHECK(cd <= 1 + 1e-12);
        // independent restatement of the chain
        const double rhs = static_cast<double>(c.boundary_count - 1) * std::sqrt(static_cast<double>(c.tuple_dim)) *
                           c.M_global * c.max_gap;
        CHECK(c.integral_abs <= rhs * (1 + 1e-12) + 1e-12);
        const auto r = reverse_pair_check(f, m);
        CHECK(r.all_hold);
    }
    CHECK(valid > 100);
}
