#include <doctest.h>

#include <cmath>

#include "certify.hpp"
#include "diagnostics.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "rng.hpp"

using namespace prg;
using namespace prg::diag;
using namespace prg::testing;

namespace {

// with-repetition tuple sum computed the direct way
unsigned __int128 direct_repetition_sum(const Graph& g, const std::vector<uint8_t>& signs) {
    const int r = static_cast<int>(signs.size());
    const uint64_t n = g.vertex_count();
    unsigned __int128 total = 0;
    std::vector<Vertex> idx(r, 0);
    for (;;) {
        // f_r for tuples with repeats: intersect row sets directly
        VertexSet acc = VertexSet::full(n);
        for (int i = 0; i < r; ++i) {
            const uint64_t* row = g.row(idx[i]);
            uint64_t* a = acc.data();
            if (signs[i] == 1) {
                for (size_t w = 0; w < g.row_words(); ++w) a[w] &= row[w];
            } else {
                for (size_t w = 0; w < g.row_words(); ++w) a[w] &= ~row[w];
                acc.reset(idx[i]);
            }
        }
        // trim padding
        uint64_t count = 0;
        for (uint64_t v = 0; v < n; ++v) count += acc.test(static_cast<Vertex>(v)) ? 1 : 0;
        total += count;
        int pos = r - 1;
        while (pos >= 0 && idx[pos] + 1 == n) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
    }
    return total;
}

} // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("good sets on structured graphs") {
    // complete graph, p = 1: every vertex deviates by exactly 1
    Graph k20 = complete_graph(20);
    VertexSet all = VertexSet::full(20);
    GoodSetParams generous{1.0, 0.5, 0.5, 1.0};
    CHECK(good_threshold(20, 20, 1, generous) >= 1.0);
    CHECK(good_set(k20, all, 1, generous).count() == 20);
    GoodSetParams stingy{0.01, 0.5, 0.5, 1.0};
    CHECK(good_threshold(20, 20, 1, stingy) < 1.0);
    CHECK(good_set(k20, all, 1, stingy).count() == 0);

    // binary k=7: degree 30 vs 31.5, inside the allowance
    Graph b7 = gen::gen_binary(7);
    VertexSet b7all = VertexSet::full(63);
    GoodSetParams params{1.0, 0.5, 0.0, 0.5};
    CHECK(good_threshold(63, 63, 1, params) >= 1.5);
    CHECK(good_set(b7, b7all, 1, params).count() == 63);

    // empty graph: neighbor counts miss |B| p by n/2, never good
    Graph e32 = empty_graph(32);
    VertexSet e_all = VertexSet::full(32);
    GoodSetParams tight{1.0, 0.5, 0.5, 0.5};
    CHECK(good_set(e32, e_all, 1, tight).count() == 0);

    CHECK_THROWS_AS(good_set(k20, VertexSet(20), 1, generous), Error);

    // monotone in c_tilde: a larger constant only adds vertices
    Graph g = gen::gen_er(64, 0.5, 12);
    VertexSet base = VertexSet::full(64);
    GoodSetParams pa{0.5, 0.4, 0.5, 0.5};
    GoodSetParams pb{2.0, 0.4, 0.5, 0.5};
    VertexSet ga = good_set(g, base, 1, pa);
    VertexSet gb = good_set(g, base, 1, pb);
    for (uint64_t v = 0; v < 64; ++v)
        if (ga.test(static_cast<Vertex>(v))) CHECK(gb.test(static_cast<Vertex>(v)));
}

TEST_CASE("binary graphs are all-good at the certified delta") {
    for (uint32_t k = 5; k <= 13; k += 2) {
        Graph g = gen::gen_binary(k);
        const uint64_t n = g.vertex_count();
        GoodSetParams params;
        params.c_tilde = 3.0;
        params.delta = 0.0; // certified exactly for the binary family
        params.p = 0.5;
        params.epsilon = default_epsilon(n, params.delta);
        VertexSet all = VertexSet::full(n);
        CHECK(good_set(g, all, 1, params).count() == n);
        CHECK(good_set(g, all, 0, params).count() == n);
    }
}

TEST_CASE("f_bar conventions") {
    Graph p3 = path_graph(3);
    CHECK(f_bar(p3, 1, {1}, FBarConvention::all_tuples) == doctest::Approx(4.0 / 3.0));
    CHECK(f_bar(p3, 1, {1}, FBarConvention::distinct_tuples) == doctest::Approx(4.0 / 3.0));

    Graph k4 = complete_graph(4);
    CHECK(f_bar(k4, 2, {1, 1}, FBarConvention::all_tuples) == doctest::Approx(3.0));

    // exact integer identity: numerator equals the with-repetition sum
    Rng rng(64);
    for (int round = 0; round < 12; ++round) {
        const uint64_t n = 5 + rng.next_below(11); // up to 15
        Graph g = gen::gen_er(n, 0.2 + 0.6 * rng.next_double(), rng.next_u64());
        for (int r = 1; r <= 3; ++r) {
            std::vector<uint8_t> signs(r);
            for (unsigned mask = 0; mask < (1u << r); ++mask) {
                for (int i = 0; i < r; ++i) signs[i] = (mask >> i) & 1;
                CHECK(f_bar_all_tuples_numerator(g, r, signs) == direct_repetition_sum(g, signs));
            }
        }
    }
    // binary k=5 included for a structured case
    Graph b5 = gen::gen_binary(5);
    std::vector<uint8_t> mixed{1, 0};
    CHECK(f_bar_all_tuples_numerator(b5, 2, mixed) == direct_repetition_sum(b5, mixed));

    // distinct-vs-all gap obeys the 2r^2/n window on ER(30, 1/2)
    Graph er = gen::gen_er(30, 0.5, 9);
    for (int r = 2; r <= 3; ++r) {
        std::vector<uint8_t> signs(r, 1);
        signs[0] = 0;
        const double all = f_bar(er, r, signs, FBarConvention::all_tuples);
        const double distinct = f_bar(er, r, signs, FBarConvention::distinct_tuples);
        CHECK(std::abs(all - distinct) <= 2.0 * r * r / 30.0 * all);
    }

    CHECK_THROWS_AS(f_bar(er, 4, {1, 1, 1, 1}, FBarConvention::distinct_tuples), Error);
}

TEST_CASE("good chain estimates") {
    // ER(4096): greedy chains through good sets satisfy the inductive bound
    Graph g = gen::gen_er(4096, 0.5, 21);
    GoodSetParams params;
    params.c_tilde = 3.0;
    params.delta = 0.6;
    params.p = 0.5;
    params.epsilon = default_epsilon(4096, params.delta);
    Rng rng(3);
    VertexTuple chain;
    chain.vertices = {static_cast<Vertex>(rng.next_below(2048)),
                      static_cast<Vertex>(2048 + rng.next_below(2048))};
    chain.signs = {1, 1};
    for (int j = 3; j <= 5; ++j) {
        VertexSet prefix;
        g.tuple_common_neighborhood_set(chain, prefix);
        VertexSet good = good_set(g, prefix, 1, params);
        // greedy step: first good vertex not already in the chain
        auto cands = good.to_vector();
        REQUIRE(!cands.empty());
        Vertex pick = cands[rng.next_below(cands.size())];
        bool used = true;
        while (used) {
            used = false;
            for (Vertex u : chain.vertices)
                if (u == pick) used = true;
            if (used) pick = cands[rng.next_below(cands.size())];
        }
        chain.vertices.push_back(pick);
        chain.signs.push_back(1);
    }
    auto res = good_chain_estimate(g, chain, params);
    CHECK(res.holds);
    CHECK(res.f_r > 0);

    // binary k=11, all-ones chain of length 3 with C~=3, delta=0
    Graph b11 = gen::gen_binary(11);
    GoodSetParams bp;
    bp.c_tilde = 3.0;
    bp.delta = 0.0;
    bp.p = 0.5;
    bp.epsilon = default_epsilon(b11.vertex_count(), 0.0);
    VertexTuple bchain{{0, 1, 2}, {1, 1, 1}};
    auto bres = good_chain_estimate(b11, bchain, bp);
    CHECK(bres.holds);
    CHECK(std::abs(bres.f_r - 128.0) <= 8.0); // 2^(k-4) +- O(1)

    // deliberately bad third vertex
    GoodSetParams never{1e-9, 0.5, 0.5, 0.5};
    VertexTuple bad{{0, 1, 2}, {1, 1, 1}};
    try {
        good_chain_estimate(g, bad, never);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::precondition_failed);
        CHECK(std::string(e.what()).find("index 3") != std::string::npos);
    }
}

TEST_CASE("error functional") {
    CHECK(error_functional(complete_graph(4), 2, 0.5) == doctest::Approx(0.5));

    // binary k=9 at r=2 evaluates to exactly 1/254
    Graph b9 = gen::gen_binary(9);
    CHECK(error_functional(b9, 2, 0.5) == doctest::Approx(1.0 / 254.0).epsilon(1e-12));

    // ER(64): E_n(2) <= 2 C n^(delta-1) with the certified deviations
    Graph er = gen::gen_er(64, 0.5, 33);
    auto dev1 = certify::assumption_deviation(er, 0.5, 1, certify::DeviationMode::exact);
    const double bound = 2.0 * 3.0 * dev1.value / 64.0; // n^(delta_hat - 1) = dev / n
    CHECK(error_functional(er, 2, 0.5) <= bound);
}

TEST_CASE("recursion bounds") {
    CHECK(recursion_bound(0.01, 2, 1024, 1.0) == doctest::Approx(0.002755).epsilon(1e-9));
    // E_r = 0 leaves only the additive drift term
    CHECK(recursion_bound(0.0, 3, 1024, 1.0) ==
          doctest::Approx(3.0 / 1000.0 * std::pow(0.5, 6)).epsilon(1e-12));

    // observed E_n(3) on ER(512) sits under the step bound with C* = 32
    Graph er = gen::gen_er(512, 0.5, 101);
    const double e2 = error_functional(er, 2, 0.5);
    const double e3 = error_functional(er, 3, 0.5);
    CHECK(e3 <= recursion_bound(e2, 2, 512, 32.0));

    // monotone in every argument
    CHECK(recursion_bound(0.02, 2, 1024, 1.0) >= recursion_bound(0.01, 2, 1024, 1.0));
    CHECK(recursion_bound(0.01, 2, 1024, 2.0) >= recursion_bound(0.01, 2, 1024, 1.0));

    CHECK(recursion_bound_closed(0.01, 3, 1024, 1.0) ==
          doctest::Approx(2 * 0.01 * 0.125 + 2.0 / 100.0 * 0.125).epsilon(1e-12));

    CHECK_THROWS_AS(recursion_bound(0.1, 1, 1024, 1.0), Error);
}

TEST_CASE("default epsilon stays inside (0,1)") {
    for (uint64_t n : {8ull, 64ull, 4096ull, 1000000ull})
        for (double delta : {0.0, 0.5, 0.9}) {
            double eps = default_epsilon(n, delta);
            CHECK(eps > 0.0);
            CHECK(eps < 1.0);
        }
}

} // TEST_SUITE
