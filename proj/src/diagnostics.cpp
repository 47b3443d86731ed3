#include "diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "motif.hpp"

namespace prg::diag {

double default_epsilon(uint64_t n, double delta, double c0_bar) {
    if (n < 3) fail(Errc::invalid_parameter, "need n >= 3");
    if (!(delta >= 0.0 && delta < 1.0)) fail(Errc::invalid_parameter, "delta must be in [0,1)");
    const double ln_n = std::log(static_cast<double>(n));
    const double eps = c0_bar * std::log(ln_n) / ((1.0 - delta) * ln_n);
    return std::clamp(eps, 1e-12, 1.0 - 1e-12);
}

double good_threshold(uint64_t n, uint64_t b_size, int xi, const GoodSetParams& params) {
    if (!(params.c_tilde > 0)) fail(Errc::invalid_parameter, "c_tilde must be positive");
    if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
        fail(Errc::invalid_parameter, "epsilon must be in (0,1)");
    if (!(params.p > 0.0 && params.p <= 1.0)) fail(Errc::invalid_parameter, "p must be in (0,1]");
    const double marginal = xi == 1 ? params.p : 1.0 - params.p;
    return params.c_tilde * static_cast<double>(b_size) * marginal *
           std::pow(static_cast<double>(n), params.epsilon * (params.delta - 1.0) / 2.0);
}

VertexSet good_set(const Graph& g, const VertexSet& B, int xi, const GoodSetParams& params) {
    const uint64_t b_size = B.count();
    if (b_size == 0) fail(Errc::invalid_parameter, "good_set needs a nonempty base set");
    const uint64_t n = g.vertex_count();
    const double marginal = xi == 1 ? params.p : 1.0 - params.p;
    const double center = static_cast<double>(b_size) * marginal;
    const double threshold = good_threshold(n, b_size, xi, params);
    VertexSet good(n);
    for (uint64_t v = 0; v < n; ++v) {
        const double count =
            static_cast<double>(g.neighborhood_in_set(static_cast<Vertex>(v), B, xi));
        if (std::abs(count - center) <= threshold) good.set(static_cast<Vertex>(v));
    }
    return good;
}

unsigned __int128 f_bar_all_tuples_numerator(const Graph& g, int r,
                                             const std::vector<uint8_t>& signs) {
    if (r < 1 || static_cast<size_t>(r) != signs.size())
        fail(Errc::invalid_parameter, "sign vector must have length r");
    int zeros = 0;
    for (uint8_t s : signs) zeros += s == 0 ? 1 : 0;
    const int ones = r - zeros;
    unsigned __int128 total = 0;
    for (uint64_t v = 0; v < g.vertex_count(); ++v) {
        const uint64_t n1 = g.degree(static_cast<Vertex>(v));
        const uint64_t n0 = g.vertex_count() - 1 - n1;
        unsigned __int128 term = 1;
        for (int i = 0; i < zeros; ++i) term *= n0;
        for (int i = 0; i < ones; ++i) term *= n1;
        total += term;
    }
    return total;
}

namespace {

double falling_factorial(uint64_t n, int r) {
    double f = 1;
    for (int i = 0; i < r; ++i) f *= static_cast<double>(n - static_cast<uint64_t>(i));
    return f;
}

} // namespace

double f_bar(const Graph& g, int r, const std::vector<uint8_t>& signs, FBarConvention convention) {
    if (r < 1 || static_cast<size_t>(r) != signs.size())
        fail(Errc::invalid_parameter, "sign vector must have length r");
    const uint64_t n = g.vertex_count();
    if (static_cast<uint64_t>(r) > n) fail(Errc::invalid_parameter, "r exceeds vertex count");
    if (convention == FBarConvention::all_tuples) {
        const unsigned __int128 num = f_bar_all_tuples_numerator(g, r, signs);
        return static_cast<double>(num) / falling_factorial(n, r);
    }
    if (r > 3 || n > 60)
        fail(Errc::budget_exceeded, "distinct_tuples feasible only for r <= 3, n <= 60");
    unsigned __int128 total = 0;
    VertexTuple t;
    t.vertices.resize(r);
    t.signs = signs;
    std::vector<Vertex> stack(r);
    auto rec = [&](auto&& self, int level) -> void {
        if (level == r) {
            for (int i = 0; i < r; ++i) t.vertices[i] = stack[i];
            total += g.tuple_common_neighborhood(t);
            return;
        }
        for (uint64_t v = 0; v < n; ++v) {
            bool used = false;
            for (int i = 0; i < level; ++i)
                if (stack[i] == v) used = true;
            if (used) continue;
            stack[level] = static_cast<Vertex>(v);
            self(self, level + 1);
        }
    };
    rec(rec, 0);
    return static_cast<double>(total) / falling_factorial(n, r);
}

GoodChainResult good_chain_estimate(const Graph& g, const VertexTuple& chain,
                                    const GoodSetParams& params) {
    const int r = static_cast<int>(chain.vertices.size());
    if (r < 1 || chain.signs.size() != chain.vertices.size())
        fail(Errc::invalid_parameter, "chain must be nonempty with matching signs");
    const uint64_t n = g.vertex_count();

    // prefix intersections; vertex j (1-based j >= 3) must be good for the
    // set built from the first j-1 chain elements
    VertexSet prefix;
    for (int j = 3; j <= r; ++j) {
        VertexTuple head;
        head.vertices.assign(chain.vertices.begin(), chain.vertices.begin() + (j - 1));
        head.signs.assign(chain.signs.begin(), chain.signs.begin() + (j - 1));
        g.tuple_common_neighborhood_set(head, prefix);
        if (prefix.count() == 0)
            fail(Errc::precondition_failed,
                 "empty prefix neighborhood before index " + std::to_string(j));
        VertexSet good = good_set(g, prefix, chain.signs[j - 1], params);
        if (!good.test(chain.vertices[j - 1]))
            fail(Errc::precondition_failed, "chain vertex not good at index " + std::to_string(j));
    }

    int ones = 0;
    for (uint8_t s : chain.signs) ones += s == 1 ? 1 : 0;
    const int zeros = r - ones;
    GoodChainResult res;
    res.f_r = static_cast<double>(g.tuple_common_neighborhood(chain));
    res.target = static_cast<double>(n) * std::pow(params.p, ones) * std::pow(1.0 - params.p, zeros);
    res.bound = 3.0 * params.c_tilde * static_cast<double>(r) *
                std::pow(static_cast<double>(n), params.epsilon * (params.delta - 1.0) / 2.0) *
                res.target;
    res.holds = std::abs(res.f_r - res.target) <= res.bound;
    return res;
}

double error_functional(const Graph& g, int r, double p) {
    if (!(p > 0.0 && p < 1.0)) fail(Errc::invalid_parameter, "p must be in (0,1)");
    const uint64_t n = g.vertex_count();
    auto counts = motif::count_induced_exact(g, r);
    const auto& classes = motif::motif_classes(r);
    const double q = 1.0 - p;
    const double lf = falling_factorial(n, r);
    double worst = 0;
    for (size_t i = 0; i < classes.size(); ++i) {
        const double scaled =
            static_cast<double>(counts[i]) * static_cast<double>(classes[i].aut_size) / lf;
        const double target = std::pow(p / q, classes[i].edge_count) *
                              std::pow(q, r * (r - 1) / 2);
        worst = std::max(worst, std::abs(scaled - target));
    }
    return worst;
}

double recursion_bound(double e_r, int r, uint64_t n, double c_star) {
    if (r < 2 || n < 4) fail(Errc::invalid_parameter, "need r >= 2 and n >= 4");
    if (!(e_r >= 0) || !(c_star >= 0)) fail(Errc::invalid_parameter, "inputs must be nonnegative");
    const double log2n = std::log2(static_cast<double>(n));
    const double drift = c_star * static_cast<double>(r) / (log2n * log2n * log2n);
    return e_r * std::pow(0.5, r) * (1.0 + drift) +
           drift * std::pow(0.5, r * (r + 1) / 2.0);
}

double recursion_bound_closed(double e_2, int s, uint64_t n, double c_star) {
    if (s < 2 || n < 4) fail(Errc::invalid_parameter, "need s >= 2 and n >= 4");
    const double log2n = std::log2(static_cast<double>(n));
    const double tail = std::pow(0.5, s * (s - 1) / 2.0);
    return 2.0 * e_2 * tail + 2.0 * c_star / (log2n * log2n) * tail;
}

} // namespace prg::diag
