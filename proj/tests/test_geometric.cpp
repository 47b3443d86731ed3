#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "geometric.hpp"

using namespace prg;
using namespace prg::geom;

namespace {

// independent quantile oracle: long-double bisection on erfcl
long double quantile_oracle(long double u) {
    long double lo = -12, hi = 12;
    for (int i = 0; i < 200; ++i) {
        long double mid = 0.5L * (lo + hi);
        long double cdf = 0.5L * erfcl(-mid / sqrtl(2.0L));
        if (cdf < u)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5L * (lo + hi);
}

} // namespace

TEST_SUITE("geometric") {

TEST_CASE("normal cdf and quantile") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(normal_quantile(normal_cdf(1.7)) - 1.7) <= 1e-8);
    CHECK(std::abs(normal_quantile(0.975) - static_cast<double>(quantile_oracle(0.975L))) <= 1e-9);
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959964).epsilon(1e-6));

    // symmetry to 1e-12 across a grid
    for (double x = -8.0; x <= 8.0; x += 0.37)
        CHECK(std::abs(normal_cdf(x) + normal_cdf(-x) - 1.0) <= 1e-12);

    // inverse pair across the open interval
    for (double u : {1e-6, 0.01, 0.2, 0.5, 0.8, 0.99, 1 - 1e-6})
        CHECK(std::abs(normal_cdf(normal_quantile(u)) - u) <= 1e-11);

    CHECK_THROWS_AS(normal_quantile(0.0), Error);
    CHECK_THROWS_AS(normal_quantile(1.0), Error);
}

TEST_CASE("threshold t_{p,d}") {
    for (uint64_t d : {2ull, 3ull, 10ull, 100ull, 10000ull})
        CHECK(threshold_tpd(0.5, d).t == 0.0);

    CHECK(threshold_tpd(0.25, 3).t == doctest::Approx(0.5).epsilon(1e-10));
    // d=3: first coordinate uniform on [-1,1], so t = 1 - 2p exactly
    for (double p : {0.05, 0.1, 0.3, 0.45})
        CHECK(threshold_tpd(p, 3).t == doctest::Approx(1.0 - 2.0 * p).epsilon(1e-10));

    // defining property: I_{t^2}(1/2,(d-1)/2) = 1 - 2p to 1e-10
    for (double p : {0.1, 0.3, 0.49})
        for (uint64_t d : {10ull, 100ull, 4096ull}) {
            const double t = threshold_tpd(p, d).t;
            const double mass = incomplete_beta(0.5, (static_cast<double>(d) - 1) / 2.0, t * t);
            CHECK(std::abs(mass - (1.0 - 2.0 * p)) <= 1e-10);
        }

    // strictly decreasing in p
    for (uint64_t d : {8ull, 256ull}) {
        double prev = 1.0;
        for (double p : {0.05, 0.15, 0.25, 0.35, 0.45, 0.5}) {
            double t = threshold_tpd(p, d).t;
            CHECK(t < prev);
            prev = t;
        }
    }

    CHECK_THROWS_AS(threshold_tpd(0.6, 100), Error);
    CHECK_THROWS_AS(threshold_tpd(0.0, 100), Error);
    CHECK_THROWS_AS(threshold_tpd(0.3, 1), Error);
}

TEST_CASE("threshold Monte Carlo validation") {
    // seeded pairs of uniform sphere points hit probability p within 5 sigma
    struct Case {
        double p;
        uint64_t d;
    };
    for (auto [p, d] : {Case{0.1, 50}, Case{0.3, 500}, Case{0.5, 10}}) {
        auto mc = edge_probability_mc(p, d, 200000, 31);
        CHECK(std::abs(mc.estimate - p) <= 5.0 * mc.stderr_);
    }
}

TEST_CASE("dglu check") {
    CHECK(dglu_check(0.5, 100, 0.0).holds); // lhs is exactly 0
    CHECK(dglu_check(0.3, 100, 5.0).holds);
    CHECK(dglu_check(0.3, 1000, 5.0).holds);
    CHECK(dglu_check(0.3, 10000, 5.0).holds);
    try {
        dglu_check(0.3, 20, 5.0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::precondition_failed);
    }

    // t sqrt(d) converges to the normal quantile: error decreasing in d
    double prev = 1e9;
    for (uint64_t d = 100; d <= 102400; d *= 2) {
        double lhs = dglu_check(0.3, d, 5.0).lhs;
        CHECK(lhs <= prev + 1e-12);
        prev = lhs;
    }
}

TEST_CASE("tau_n formula") {
    CHECK(tau_n(10000, 1000000, 10.0) == doctest::Approx(0.0371693).epsilon(1e-5));
    // d -> infinity leaves the 1/n^2 term
    CHECK(tau_n(100, 1ULL << 62, 2.0) == doctest::Approx(2.0 / 10000.0).epsilon(1e-3));
    CHECK_THROWS_AS(tau_n(1, 10, 1.0), Error);
    CHECK_THROWS_AS(tau_n(10, 10, -1.0), Error);
}

TEST_CASE("willink bounds") {
    auto wb0 = willink_bounds(1.3, 0.0);
    CHECK(wb0.theta == doctest::Approx(1.0));
    CHECK(wb0.lower == doctest::Approx(wb0.upper));
    CHECK(wb0.lower == doctest::Approx(normal_cdf(-1.3) * normal_cdf(-1.3)).epsilon(1e-12));

    auto wb = willink_bounds(1.0, 0.5);
    CHECK(wb.theta == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(wb.lower ==
          doctest::Approx(normal_cdf(-1.0) * normal_cdf(-1.0 / std::sqrt(3.0))).epsilon(1e-12));
    CHECK(wb.upper == doctest::Approx(1.5 * wb.lower).epsilon(1e-12));
    CHECK(wb.lower <= wb.upper);

    CHECK_THROWS_AS(willink_bounds(-1.0, 0.5), Error);
    CHECK_THROWS_AS(willink_bounds(1.0, 1.0), Error);
}

TEST_CASE("bivariate tail Monte Carlo against the bounds") {
    auto quadrant = bivariate_tail_mc(0.0, 0.0, 100000, 5);
    CHECK(std::abs(quadrant.estimate - 0.25) <= 5 * quadrant.stderr_);

    // quadrant probability 1/4 + asin(rho)/(2 pi)
    auto high = bivariate_tail_mc(0.0, 0.99, 100000, 6);
    const double expect = 0.25 + std::asin(0.99) / (2.0 * 3.14159265358979323846);
    CHECK(std::abs(high.estimate - expect) <= 5 * high.stderr_);
    CHECK(expect == doctest::Approx(0.4775).epsilon(1e-3));

    for (double h : {0.5, 1.0, 2.0})
        for (double rho : {0.0, 0.3, 0.8}) {
            auto wb = willink_bounds(h, rho);
            auto mc = bivariate_tail_mc(h, rho, 100000, 17);
            CHECK(mc.estimate >= wb.lower - 5 * mc.stderr_);
            CHECK(mc.estimate <= wb.upper + 5 * mc.stderr_);
        }

    // negative correlation goes through the reflection identity
    for (double rho : {-0.3, -0.7}) {
        auto bracket = negative_rho_tail_bounds(1.0, rho);
        auto mc = bivariate_tail_mc(1.0, rho, 200000, 23);
        CHECK(bracket.lower <= bracket.upper);
        CHECK(mc.estimate >= bracket.lower - 5 * mc.stderr_);
        CHECK(mc.estimate <= bracket.upper + 5 * mc.stderr_);
    }
}

TEST_CASE("gaussian norm concentration") {
    auto res = gaussian_norm_check(10000, 100000, 13);
    CHECK(res.holds);
    auto small = gaussian_norm_check(4, 100000, 14);
    CHECK(small.holds);
    auto vacuous = gaussian_norm_check(64, 0, 0);
    CHECK(vacuous.holds);
    CHECK(vacuous.vacuous);
}

} // TEST_SUITE
