#include "generators.hpp"

#include <algorithm>
#include <cmath>

#include "ergm.hpp"
#include "geometric.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace prg::gen {

namespace {

void set_bit(std::vector<uint64_t>& rows, size_t words, uint64_t u, uint64_t v) {
    rows[u * words + (v >> 6)] |= 1ULL << (v & 63);
}

void clear_bit(std::vector<uint64_t>& rows, size_t words, uint64_t u, uint64_t v) {
    rows[u * words + (v >> 6)] &= ~(1ULL << (v & 63));
}

bool test_bit(const std::vector<uint64_t>& rows, size_t words, uint64_t u, uint64_t v) {
    return (rows[u * words + (v >> 6)] >> (v & 63)) & 1ULL;
}

} // namespace

Graph gen_er(uint64_t n, double p, uint64_t seed) {
    if (n == 0 || n > Graph::max_vertices) fail(Errc::invalid_parameter, "vertex count out of range");
    if (!(p >= 0.0 && p <= 1.0)) fail(Errc::invalid_parameter, "p must be in [0,1]");
    const size_t words = (n + 63) / 64;
    std::vector<uint64_t> rows(words * n, 0);
    const uint64_t base = splitmix64(seed ^ 0x45524d4f44454cULL);
    uint64_t chunks = std::min<uint64_t>(std::max<uint64_t>(n / 64, 1), 64);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        auto range = chunk_range(n, chunks, chunk);
        for (uint64_t u = range.begin; u < range.end; ++u) {
            // pair rank of (u,v), v > u, keyed independently of order
            for (uint64_t v = u + 1; v < n; ++v) {
                uint64_t pair_rank = v * (v - 1) / 2 + u;
                if (unit_double(splitmix64(base ^ splitmix64(pair_rank))) < p) {
                    set_bit(rows, words, u, v);
                }
            }
        }
    });
    // mirror the upper triangle
    for (uint64_t u = 0; u < n; ++u)
        for (size_t w = u >> 6; w < words; ++w) {
            uint64_t bits = rows[u * words + w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                uint64_t v = w * 64 + static_cast<uint64_t>(b);
                if (v > u) set_bit(rows, words, v, u);
            }
        }
    return Graph::from_adjacency(n, std::move(rows));
}

Graph gen_regular_switch(uint64_t n, uint64_t d, uint64_t switches, uint64_t seed) {
    if (n == 0 || n > Graph::max_vertices) fail(Errc::invalid_parameter, "vertex count out of range");
    if (d >= n) fail(Errc::invalid_parameter, "degree must be below n");
    if ((n * d) % 2 != 0) fail(Errc::invalid_parameter, "n*d must be even");
    const size_t words = (n + 63) / 64;
    std::vector<uint64_t> rows(words * n, 0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(n * d / 2);
    auto add_edge = [&](uint64_t u, uint64_t v) {
        set_bit(rows, words, u, v);
        set_bit(rows, words, v, u);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    };
    // circulant start: i ~ i +- 1..d/2, plus the antipode when d is odd
    const uint64_t half = d / 2;
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t off = 1; off <= half; ++off) {
            uint64_t j = (i + off) % n;
            uint64_t a = std::min(i, j), b = std::max(i, j);
            if (!test_bit(rows, words, a, b)) add_edge(a, b);
        }
    if (d % 2 == 1) {
        for (uint64_t i = 0; i < n / 2; ++i) add_edge(i, i + n / 2);
    }

    Rng rng(derive_seed(seed, 0x5245474dULL));
    const uint64_t m = edges.size();
    if (m < 2) switches = 0;
    for (uint64_t step = 0; step < switches; ++step) {
        uint64_t e1 = rng.next_below(m);
        uint64_t e2 = rng.next_below(m);
        if (e1 == e2) continue;
        auto [a, b] = edges[e1];
        auto [c, dd] = edges[e2];
        if (rng.next_u64() & 1) std::swap(c, dd);
        // propose (a,c) and (b,dd)
        if (a == c || b == dd || a == dd || b == c) continue;
        if (test_bit(rows, words, a, c) || test_bit(rows, words, b, dd)) continue;
        clear_bit(rows, words, a, b);
        clear_bit(rows, words, b, a);
        clear_bit(rows, words, c, dd);
        clear_bit(rows, words, dd, c);
        set_bit(rows, words, a, c);
        set_bit(rows, words, c, a);
        set_bit(rows, words, b, dd);
        set_bit(rows, words, dd, b);
        edges[e1] = {static_cast<Vertex>(std::min(a, c)), static_cast<Vertex>(std::max(a, c))};
        edges[e2] = {static_cast<Vertex>(std::min(b, dd)), static_cast<Vertex>(std::max(b, dd))};
    }
    return Graph::from_adjacency(n, std::move(rows));
}

BinaryGraphSpec binary_spec(uint32_t k) {
    if (k < 3 || k > 25 || k % 2 == 0)
        fail(Errc::invalid_parameter, "binary graph needs odd k in [3,25]");
    BinaryGraphSpec spec;
    spec.k = k;
    spec.n = (1ULL << (k - 1)) - 1;
    spec.degree = (1ULL << (k - 2)) - 2;
    spec.codegree_adjacent = k >= 3 ? (1ULL << (k - 3)) - 3 : 0;
    spec.codegree_nonadjacent = k >= 3 ? (1ULL << (k - 3)) - 1 : 0;
    return spec;
}

std::vector<uint32_t> binary_vertex_words(uint32_t k) {
    binary_spec(k); // validates
    std::vector<uint32_t> verts;
    const uint32_t all_ones = (1u << k) - 1;
    verts.reserve((1u << (k - 1)) - 1);
    for (uint32_t v = 1; v <= all_ones; ++v)
        if ((__builtin_popcount(v) & 1) && v != all_ones) verts.push_back(v);
    return verts;
}

Graph gen_binary(uint32_t k) {
    BinaryGraphSpec spec = binary_spec(k);
    if (spec.n > Graph::max_vertices)
        fail(Errc::invalid_parameter, "binary graph exceeds the adjacency-matrix size cap");
    auto verts = binary_vertex_words(k);
    const uint64_t n = spec.n;
    const size_t words = (n + 63) / 64;
    std::vector<uint64_t> rows(words * n, 0);
    uint64_t chunks = std::min<uint64_t>(std::max<uint64_t>(n / 64, 1), 64);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        auto range = chunk_range(n, chunks, chunk);
        for (uint64_t i = range.begin; i < range.end; ++i)
            for (uint64_t j = 0; j < n; ++j)
                if (i != j && (__builtin_popcount(verts[i] & verts[j]) & 1))
                    set_bit(rows, words, i, j);
    });
    return Graph::from_adjacency(n, std::move(rows));
}

BigUint binary_independent_count(uint32_t k, uint32_t r) {
    binary_spec(k); // validates k
    if (r == 0) return BigUint(1);
    if (r > k) return BigUint(0);
    BigUint count(1);
    for (uint32_t l = 1; l <= r; ++l) {
        uint64_t factor = 1ULL << (k - l);
        if (l == 1) {
            factor -= 1; // the all-ones vector is not a vertex
        } else if (l % 2 == 1 && l < r) {
            factor -= 1; // prefix whose continuation is blocked drops out
        }
        count.mul_u64(factor);
    }
    for (uint32_t l = 2; l <= r; ++l) count.div_exact_u64(l);
    return count;
}

uint64_t binary_clique_max_extra(uint32_t k) {
    binary_spec(k);
    const uint32_t t = (k - 1) / 2;
    return (1ULL << t) - 1 - t;
}

std::vector<Vertex> binary_clique_construct(uint32_t k, uint32_t extra) {
    binary_spec(k);
    const uint32_t t = (k - 1) / 2;
    if (extra > binary_clique_max_extra(k))
        fail(Errc::invalid_parameter, "requested clique extension exceeds the span size");
    // basis of mutually orthogonal even-weight vectors in the complemented
    // representation: e_{2i-1} + e_{2i}
    std::vector<uint32_t> basis(t);
    for (uint32_t i = 0; i < t; ++i) basis[i] = 3u << (2 * i);
    // enumerate nonzero span elements; basis members first, then the rest
    std::vector<uint32_t> span_bar;
    for (uint32_t mask = 1; mask < (1u << t); ++mask) {
        uint32_t x = 0;
        for (uint32_t i = 0; i < t; ++i)
            if ((mask >> i) & 1u) x ^= basis[i];
        span_bar.push_back(x);
    }
    std::stable_partition(span_bar.begin(), span_bar.end(),
                          [](uint32_t x) { return __builtin_popcount(x) == 2; });
    span_bar.resize(t + extra);

    auto verts = binary_vertex_words(k);
    const uint32_t all_ones = (1u << k) - 1;
    std::vector<Vertex> out;
    out.reserve(span_bar.size());
    for (uint32_t xbar : span_bar) {
        uint32_t v = xbar ^ all_ones; // back from the complemented representation
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || *it != v)
            fail(Errc::precondition_failed, "span element is not a graph vertex");
        out.push_back(static_cast<Vertex>(it - verts.begin()));
    }
    return out;
}

Graph plant_clique(const Graph& g, uint64_t r, uint64_t seed) {
    const uint64_t n = g.vertex_count();
    if (r > n) fail(Errc::invalid_parameter, "clique larger than the graph");
    const size_t words = g.row_words();
    std::vector<uint64_t> rows(g.row(0), g.row(0) + words * n);
    // Floyd's sample of r distinct vertices
    Rng rng(derive_seed(seed, 0x504c414e54ULL));
    std::vector<Vertex> chosen;
    chosen.reserve(r);
    for (uint64_t j = n - r; j < n; ++j) {
        uint64_t t = rng.next_below(j + 1);
        bool dup = false;
        for (Vertex q : chosen)
            if (q == t) dup = true;
        chosen.push_back(static_cast<Vertex>(dup ? j : t));
    }
    for (size_t i = 0; i < chosen.size(); ++i)
        for (size_t j = i + 1; j < chosen.size(); ++j) {
            set_bit(rows, words, chosen[i], chosen[j]);
            set_bit(rows, words, chosen[j], chosen[i]);
        }
    return Graph::from_adjacency(n, std::move(rows));
}

Graph gen_geometric(uint64_t n, uint64_t d, double p, uint64_t seed) {
    if (n == 0 || n > Graph::max_vertices) fail(Errc::invalid_parameter, "vertex count out of range");
    if (d < 2) fail(Errc::invalid_parameter, "dimension must be at least 2");
    if (!(p > 0.0 && p <= 0.5)) fail(Errc::invalid_parameter, "p must be in (0, 1/2]");
    const double t = geom::threshold_tpd(p, d).t;

    std::vector<double> points(n * d);
    uint64_t chunks = std::min<uint64_t>(std::max<uint64_t>(n / 8, 1), 256);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        auto range = chunk_range(n, chunks, chunk);
        for (uint64_t i = range.begin; i < range.end; ++i) {
            Rng rng(derive_seed(seed, i)); // per-vertex stream
            double* x = points.data() + i * d;
            double norm2 = 0;
            for (uint64_t c = 0; c < d; ++c) {
                x[c] = rng.next_gaussian();
                norm2 += x[c] * x[c];
            }
            double inv = 1.0 / std::sqrt(norm2);
            for (uint64_t c = 0; c < d; ++c) x[c] *= inv;
        }
    });

    const size_t words = (n + 63) / 64;
    std::vector<uint64_t> rows(words * n, 0);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        auto range = chunk_range(n, chunks, chunk);
        for (uint64_t i = range.begin; i < range.end; ++i) {
            const double* xi = points.data() + i * d;
            for (uint64_t j = i + 1; j < n; ++j) {
                const double* xj = points.data() + j * d;
                double dot = 0;
                for (uint64_t c = 0; c < d; ++c) dot += xi[c] * xj[c];
                if (dot >= t) set_bit(rows, words, i, j);
            }
        }
    });
    for (uint64_t u = 0; u < n; ++u)
        for (size_t w = u >> 6; w < words; ++w) {
            uint64_t bits = rows[u * words + w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                uint64_t v = w * 64 + static_cast<uint64_t>(b);
                if (v > u) set_bit(rows, words, v, u);
            }
        }
    return Graph::from_adjacency(n, std::move(rows));
}

Graph gen_ergm(uint64_t n, double beta, double gamma, uint64_t sweeps, uint64_t seed) {
    if (n == 0 || n > Graph::max_vertices) fail(Errc::invalid_parameter, "vertex count out of range");
    if (!std::isfinite(beta) || !std::isfinite(gamma))
        fail(Errc::invalid_parameter, "parameters must be finite");
    ergm::ErgmModel model{beta, gamma};
    const double p0 = ergm::phi_beta(model, 0.0);

    Graph start = gen_er(n, p0, derive_seed(seed, 0x45524730ULL));
    const size_t words = start.row_words();
    std::vector<uint64_t> rows(start.row(0), start.row(0) + words * n);

    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (uint64_t u = 0; u < n; ++u)
        for (uint64_t v = u + 1; v < n; ++v)
            pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));

    Rng rng(derive_seed(seed, 0x45524731ULL));
    const double inv_n = 1.0 / static_cast<double>(n);
    for (uint64_t sweep = 0; sweep < sweeps; ++sweep) {
        // Fisher-Yates pass gives the seeded random update order
        for (size_t i = pairs.size(); i > 1; --i)
            std::swap(pairs[i - 1], pairs[rng.next_below(i)]);
        for (auto [u, v] : pairs) {
            const uint64_t* ru = rows.data() + static_cast<size_t>(u) * words;
            const uint64_t* rv = rows.data() + static_cast<size_t>(v) * words;
            uint64_t codeg = 0;
            for (size_t w = 0; w < words; ++w)
                codeg += static_cast<uint64_t>(__builtin_popcountll(ru[w] & rv[w]));
            const double l_uv = static_cast<double>(codeg) * inv_n;
            const bool present = rng.next_double() < ergm::glauber_conditional(model, l_uv);
            if (present) {
                set_bit(rows, words, u, v);
                set_bit(rows, words, v, u);
            } else {
                clear_bit(rows, words, u, v);
                clear_bit(rows, words, v, u);
            }
        }
    }
    return Graph::from_adjacency(n, std::move(rows));
}

} // namespace prg::gen
