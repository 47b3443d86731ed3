#include <doctest.h>

#include <cmath>

#include "certify.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "rng.hpp"

using namespace prg;
using namespace prg::certify;
using namespace prg::testing;

TEST_SUITE("certify") {

TEST_CASE("assumption deviations on the binary graph") {
    Graph b5 = gen::gen_binary(5);
    CHECK(assumption_deviation(b5, 0.5, 1, DeviationMode::exact).value == doctest::Approx(1.5));
    CHECK(assumption_deviation(b5, 0.5, 2, DeviationMode::exact).value == doctest::Approx(2.75));

    Graph k10 = complete_graph(10);
    CHECK(assumption_deviation(k10, 0.9, 1, DeviationMode::exact).value ==
          doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(assumption_deviation(b5, 0.5, 5, DeviationMode::exact), Error);
    CHECK_THROWS_AS(assumption_deviation(b5, 1.5, 1, DeviationMode::exact), Error);
}

TEST_CASE("sampled deviations lower-bound exact ones") {
    Graph g = gen::gen_er(120, 0.5, 8);
    for (int order : {3, 4}) {
        auto exact = assumption_deviation(g, 0.5, order, DeviationMode::exact);
        auto sampled = assumption_deviation(g, 0.5, order, DeviationMode::sampled, 20000, 5);
        CHECK(sampled.sampled);
        CHECK(sampled.value <= exact.value + 1e-9);
        CHECK(sampled.value > 0);
    }
}

TEST_CASE("density estimation") {
    CHECK(estimate_p(cycle_graph(4)) == doctest::Approx(2.0 / 3.0));
    CHECK(estimate_p(gen::gen_binary(5)) == doctest::Approx(3.0 / 7.0));
    try {
        estimate_p(complete_graph(5));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degenerate_density);
    }
    CHECK_THROWS_AS(estimate_p(empty_graph(6)), Error);
}

TEST_CASE("admissible motif size") {
    const uint64_t n20 = 1ULL << 20;
    CHECK(admissible_motif_size(n20, 0.5, 0.5, 0.0, AdmissibleMode::a12) == 10);
    CHECK(admissible_motif_size(n20, 0.5, 0.5, 0.0, AdmissibleMode::a14) == 10);
    const uint64_t n30 = 1ULL << 30;
    CHECK(admissible_motif_size(n30, 0.5, 0.25, 1.0, AdmissibleMode::a12) == 11);

    // monotone: nonincreasing in delta and C0', nondecreasing in n
    int prev = 1 << 20;
    for (double delta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        int s = admissible_motif_size(n20, 0.5, delta, 1.0, AdmissibleMode::a12);
        CHECK(s <= prev);
        prev = s;
    }
    prev = 1 << 20;
    for (double c0 : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        int s = admissible_motif_size(n20, 0.5, 0.4, c0, AdmissibleMode::a12);
        CHECK(s <= prev);
        prev = s;
    }
    prev = 0;
    for (uint64_t n : {1ULL << 10, 1ULL << 14, 1ULL << 18, 1ULL << 24}) {
        int s = admissible_motif_size(n, 0.5, 0.4, 1.0, AdmissibleMode::a12);
        CHECK(s >= prev);
        prev = s;
    }
    // a14 dominates a12 at equal delta
    for (double delta : {0.2, 0.4, 0.6})
        CHECK(admissible_motif_size(n20, 0.5, delta, 1.0, AdmissibleMode::a14) >=
              admissible_motif_size(n20, 0.5, delta, 1.0, AdmissibleMode::a12));

    CHECK_THROWS_AS(admissible_motif_size(2, 0.5, 0.5, 1.0, AdmissibleMode::a12), Error);
    CHECK_THROWS_AS(admissible_motif_size(n20, 0.5, 0.0, 1.0, AdmissibleMode::a12), Error);
}

TEST_CASE("certificates") {
    Graph b9 = gen::gen_binary(9);
    CertifyOptions opts;
    opts.assume_p = 0.5;
    opts.max_order = 2;
    Certificate cert = prg::certify::certify(b9, opts);
    CHECK(cert.deviation[2] == doctest::Approx(2.75));
    CHECK(cert.delta_hat[2] == doctest::Approx(std::log(2.75) / std::log(255.0)).epsilon(1e-9));
    CHECK(cert.delta_hat[2] == doctest::Approx(0.182558).epsilon(1e-4));

    try {
        prg::certify::certify(empty_graph(12), {});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degenerate_density);
    }
    CertifyOptions with_p;
    with_p.assume_p = 0.5;
    Certificate empty_cert = prg::certify::certify(empty_graph(12), with_p);
    CHECK(empty_cert.p_assumed);
}

TEST_CASE("binary graph satisfies A1/A2 with absolute constants") {
    // order-1 deviation <= 2 and order-2 deviation <= 3 at every odd k
    for (uint32_t k = 5; k <= 15; k += 2) {
        Graph g = gen::gen_binary(k);
        auto d1 = assumption_deviation(g, 0.5, 1, DeviationMode::exact);
        auto d2 = assumption_deviation(g, 0.5, 2, DeviationMode::exact);
        CHECK(d1.value <= 2.0);
        CHECK(d2.value <= 3.0);
    }
}

TEST_CASE("er graphs certify with small delta-hat") {
    Graph g = gen::gen_er(1024, 0.5, 17);
    CertifyOptions opts;
    opts.assume_p = 0.5;
    opts.max_order = 2;
    Certificate cert = prg::certify::certify(g, opts);
    CHECK(cert.delta_hat[1] < 0.65);
    CHECK(cert.delta_hat[2] < 0.65);
    CHECK(cert.s_max_a14 >= cert.s_max_a12);
}

TEST_CASE("tiny graphs cap the scanned order instead of failing") {
    CertifyOptions opts;
    opts.assume_p = 0.5;
    Certificate c3 = prg::certify::certify(complete_graph(3), opts);
    CHECK(c3.max_order == 2); // orders above n-1 are unscannable
    Certificate c4 = prg::certify::certify(complete_graph(4), opts);
    CHECK(c4.max_order == 3);

    Graph tiny = complete_graph(3);
    try {
        assumption_deviation(tiny, 0.5, 4, DeviationMode::sampled, 100, 0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_parameter);
    }
}

TEST_CASE("degenerate regular parameters stay defined") {
    Graph g = gen::gen_regular_switch(8, 0, 100, 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("dense regular graphs pass the co-degree bound") {
    const uint64_t n = 64, d = 32;
    Graph g = gen::gen_regular_switch(n, d, 10 * n * d, 3);
    auto dev = assumption_deviation(g, static_cast<double>(d) / n, 2, DeviationMode::exact);
    const double bound = 1.5 * 6.0 * static_cast<double>(d) *
                         std::sqrt(std::log(static_cast<double>(n))) /
                         std::sqrt(static_cast<double>(n));
    CHECK(dev.value <= bound);
}

} // TEST_SUITE
