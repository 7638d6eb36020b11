#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "expansionlab/error.hpp"
#include "expansionlab/runners.hpp"

using namespace explab;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

RunnerConfig speeds_1_to_8() {
    RunnerConfig cfg;
    for (int v = 1; v <= 8; ++v) cfg.speeds.push_back(v);
    return cfg;
}

RunnerConfig octagon() {
    RunnerConfig cfg;
    for (int j = 0; j < 8; ++j) cfg.speeds.push_back(j * kPi / 4);
    return cfg;
}

bool contains_near(const std::vector<double>& v, double x, double tol) {
    return std::any_of(v.begin(), v.end(), [&](double y) { return std::abs(y - x) <= tol; });
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("positions_at examples") {
    RunnerConfig three;
    three.speeds = {1, 2, 3};
    for (double g : positions_at(three, 0).gaps) CHECK(g == 0);

    const auto s = positions_at(speeds_1_to_8(), 1);
    REQUIRE(s.gaps.size() == 7);
    for (double g : s.gaps) CHECK(std::abs(g - 2 * std::sin(0.5)) < 1e-12);
    CHECK(equal_gap_residual(s) < 1e-12);

    RunnerConfig anti;
    anti.speeds = {0, 1};
    CHECK(positions_at(anti, kPi).gaps[0] == Approx(2).epsilon(1e-15));
    for (double a : positions_at(speeds_1_to_8(), 100).angles) {
        CHECK(a >= 0);
        CHECK(a < 2 * kPi);
    }
}

TEST_CASE("runner config validation") {
    RunnerConfig one;
    one.speeds = {1};
    CHECK(code_of([&] { one.validate(); }) == ErrorCode::InvalidRunnerConfig);
    RunnerConfig dup;
    dup.speeds = {1, 2, 1};
    CHECK(code_of([&] { dup.validate(); }) == ErrorCode::InvalidRunnerConfig);
    RunnerConfig nan;
    nan.speeds = {1, std::nan("")};
    CHECK(code_of([&] { nan.validate(); }) == ErrorCode::InvalidRunnerConfig);
    CHECK(parse_metric("arc") == Metric::arc);
    CHECK(code_of([] { parse_metric("taxicab"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("sort_by_angle orders runners around the circle") {
    RunnerConfig cfg;
    cfg.speeds = {3, 1, 2};
    cfg.sort_by_angle = true;
    const auto s = positions_at(cfg, 0.5);
    CHECK(s.order == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("equal_gap_times") {
    RunnerConfig ap;
    ap.speeds = {1, 2, 3};
    EqualGapOptions opts;
    opts.t0 = 0;
    opts.t1 = 7;
    opts.grid = 500;
    CHECK(equal_gap_times(ap, opts).size() == 500);

    RunnerConfig cfg;
    cfg.speeds = {1, 2, 4};
    EqualGapOptions win;
    win.t0 = 0;
    win.t1 = 2 * kPi;
    const auto times = equal_gap_times(cfg, win);
    CHECK(contains_near(times, 0, 1e-12));
    CHECK(contains_near(times, 2 * kPi / 3, 1e-6));
    for (double t : times) CHECK(equal_gap_residual(positions_at(cfg, t)) <= win.tol);

    win.after = 0.1;
    const auto later = equal_gap_times(cfg, win);
    CHECK_FALSE(contains_near(later, 0, 1e-12));
    CHECK(contains_near(later, 2 * kPi / 3, 1e-6));

    RunnerConfig two;
    two.speeds = {0, 5};
    EqualGapOptions small;
    small.grid = 64;
    CHECK(equal_gap_times(two, small).size() == 64);

    EqualGapOptions bad;
    bad.t0 = 1;
    bad.t1 = 1;
    CHECK(code_of([&] { equal_gap_times(cfg, bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("conditional bound check, speeds 1..8 at t = 1") {
    const auto b = conditional_bound_check(speeds_1_to_8(), 1, 1, 3);
    CHECK(b.k == 8);
    CHECK(std::abs(b.min_gap - 0.958851077) < 1e-9);
    CHECK(b.eight_runner_form);
    CHECK(b.eight_runner_bound == Approx(kPi / (7 * std::sqrt(3.0))).epsilon(1e-15));
    CHECK(b.eight_runner_pass);
    REQUIRE(b.D_min_eight.has_value());
    CHECK(*b.D_min_eight == Approx(kPi / (7 * std::sqrt(3.0) * 2 * std::sin(0.5))).epsilon(1e-12));
    CHECK(std::abs(*b.D_min_eight - 0.270234034) < 1e-9);
    CHECK(b.general_bound == Approx(kPi / 7).epsilon(1e-15));
    CHECK(b.general_pass);
    CHECK(b.D_min_general == Approx(2 * std::sin(0.5) * 7 / kPi).epsilon(1e-12));
    CHECK(b.generic_boundary_count == 4);
}

TEST_CASE("conditional bound check, equally spaced octagon") {
    const auto b = conditional_bound_check(octagon(), 1, 1, 3);
    CHECK(std::abs(b.min_gap - 2 * std::sin(kPi / 8)) < 1e-12);
    CHECK(b.eight_runner_pass);
    REQUIRE(b.D_min_eight.has_value());
    CHECK(std::abs(*b.D_min_eight - 0.338549011) < 1e-9);
}

TEST_CASE("conditional bound check near the common start") {
    const auto b = conditional_bound_check(speeds_1_to_8(), 1e-9, 1, 3);
    CHECK(b.min_gap < 1e-8);
    CHECK_FALSE(b.eight_runner_pass);
    CHECK_FALSE(b.general_pass);

    const auto z = conditional_bound_check(speeds_1_to_8(), 0, 1, 3);
    CHECK(z.min_gap == 0);
    CHECK_FALSE(z.D_min_eight.has_value());

    RunnerConfig off;
    off.speeds = {1, 2, 4};
    CHECK(code_of([&] { conditional_bound_check(off, 1, 1, 3); }) == ErrorCode::ConditionNotMet);
    CHECK(code_of([] { conditional_bound_check(speeds_1_to_8(), 1, 0, 3); }) == ErrorCode::InvalidArgument);

    const auto not_eight = conditional_bound_check(speeds_1_to_8(), 1, 1, 4);
    CHECK_FALSE(not_eight.eight_runner_form);
}

TEST_CASE("lonely oracle") {
    const std::vector<double> two{0, 1};
    const auto a = lonely_oracle(two, 1000);
    CHECK(a.max_min_distance == 0.5);
    CHECK(a.t_star == 0.5);

    const std::vector<double> three{0, 1, 2};
    const auto b = lonely_oracle(three, 100000);
    CHECK(std::abs(b.max_min_distance - 1.0 / 3.0) < 1e-6);
    CHECK(std::abs(b.t_star - 1.0 / 3.0) < 1e-6);

    const std::vector<double> four{0, 1, 2, 3};
    const auto c = lonely_oracle(four, 100000);
    CHECK(std::abs(c.max_min_distance - 0.25) < 1e-6);

    const std::vector<double> shifted{5, 6, 7};  // stationary runner 5; relative speeds 1, 2
    const auto d = lonely_oracle(shifted, 100000);
    CHECK(d.stationary == 0);
    CHECK(std::abs(d.max_min_distance - 1.0 / 3.0) < 1e-6);

    const std::vector<double> frac{0, 1.5};
    CHECK(code_of([&] { lonely_oracle(frac); }) == ErrorCode::NonIntegerSpeeds);
    const std::vector<double> dup{0, 1, 1};
    CHECK(code_of([&] { lonely_oracle(dup, 100); }) == ErrorCode::InvalidRunnerConfig);
}

TEST_CASE("property: lonely oracle meets the conjectured bound on small sets") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> speeds{0};
        const std::size_t k = 2 + rng() % 4;
        while (speeds.size() < k) {
            const double v = 1 + static_cast<double>(rng() % 12);
            if (std::find(speeds.begin(), speeds.end(), v) == speeds.end()) speeds.push_back(v);
        }
        const auto r = lonely_oracle(speeds, 20000);
        CHECK(r.max_min_distance >= 1.0 / static_cast<double>(k) - 1e-9);
        CHECK(r.max_min_distance <= 0.5);
    }
}

TEST_CASE("property: metrics agree and respect their ranges") {
    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> u(-50, 50);
    for (int trial = 0; trial < 2000; ++trial) {
        const double a = u(rng), b = u(rng);
        const double arc = circle_distance(a, b, Metric::arc);
        const double chord = circle_distance(a, b, Metric::chord);
        const double norm = circle_distance(a, b, Metric::normalized);
        CHECK(arc >= 0);
        CHECK(arc <= kPi + 1e-12);
        CHECK(chord <= arc + 1e-12);
        CHECK(chord == Approx(2 * std::sin(arc / 2)).epsilon(1e-12).scale(1));
        CHECK(norm == Approx(arc / (2 * kPi)).epsilon(1e-12).scale(1));
        CHECK(arc == Approx(circle_distance(b, a, Metric::arc)).epsilon(1e-12).scale(1));
    }
}

TEST_CASE("property: D_min grows with min gap for the general form and shrinks for eight runners") {
    double prev_general = 0, prev_eight = 1e300;
    for (int i = 1; i <= 100; ++i) {
        const double g = 0.02 * i;
        CHECK(d_min_general(g, 8) > prev_general);
        CHECK(d_min_eight(g) < prev_eight);
        prev_general = d_min_general(g, 8);
        prev_eight = d_min_eight(g);
        // bound with D = D_min is met with equality
        CHECK(kPi / (7 * std::sqrt(3.0) * d_min_eight(g)) == Approx(g).epsilon(1e-12));
    }
}
