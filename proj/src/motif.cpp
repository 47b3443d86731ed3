#include "motif.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

#include "parallel.hpp"
#include "rng.hpp"

namespace prg::motif {

namespace {

void check_size(int s) {
    if (s < 2 || s > 8) fail(Errc::size_unsupported, "motif size must be in [2,8]");
}

} // namespace

uint32_t SmallGraph::code() const {
    uint32_t c = 0;
    for (int j = 1; j < s; ++j)
        for (int i = 0; i < j; ++i) c = (c << 1) | (edge(i, j) ? 1u : 0u);
    return c;
}

SmallGraph SmallGraph::from_code(int s, uint32_t code) {
    SmallGraph g;
    g.s = s;
    int bits = s * (s - 1) / 2;
    for (int j = 1, k = 0; j < s; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> (bits - 1 - k)) & 1u) g.set_edge(i, j);
    return g;
}

int SmallGraph::edge_count() const {
    int c = 0;
    for (int i = 0; i < s; ++i) c += __builtin_popcount(rows[i]);
    return c / 2;
}

SmallGraph SmallGraph::complement() const {
    SmallGraph g;
    g.s = s;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (!edge(i, j)) g.set_edge(i, j);
    return g;
}

SmallGraph SmallGraph::without_vertex(int v) const {
    SmallGraph g;
    g.s = s - 1;
    for (int i = 0, gi = 0; i < s; ++i) {
        if (i == v) continue;
        for (int j = i + 1, gj = gi + 1; j < s; ++j) {
            if (j == v) continue;
            if (edge(i, j)) g.set_edge(gi, gj);
            ++gj;
        }
        ++gi;
    }
    return g;
}

SmallGraph SmallGraph::permuted(const std::array<int, 8>& perm) const {
    SmallGraph g;
    g.s = s;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (edge(i, j)) g.set_edge(perm[i], perm[j]);
    return g;
}

CanonResult canonical_code(const SmallGraph& g) {
    if (g.s < 1 || g.s > 8) fail(Errc::size_unsupported, "canonical_code supports s in [1,8]");
    if (g.s == 1) return {0, 1};
    const int s = g.s;
    std::array<int, 8> tau{};
    for (int i = 0; i < s; ++i) tau[i] = i;
    uint32_t best = ~0u;
    uint32_t aut = 0;
    // s <= 8 keeps the full s! sweep cheap; relabeled codes are read off
    // directly as code bit (i,j) = edge(tau[i], tau[j]).
    do {
        uint32_t c = 0;
        bool fixes = true;
        for (int j = 1; j < s; ++j)
            for (int i = 0; i < j; ++i) {
                bool b = g.edge(tau[i], tau[j]);
                c = (c << 1) | (b ? 1u : 0u);
                fixes = fixes && (b == g.edge(i, j));
            }
        if (c < best) best = c;
        if (fixes) ++aut;
    } while (std::next_permutation(tau.begin(), tau.begin() + s));
    return {best, aut};
}

namespace {

uint32_t canon_code_of(const SmallGraph& g) { return canonical_code(g).canon; }

struct ClassTable {
    std::vector<MotifClass> classes;
    std::unordered_map<uint32_t, int> index;
};

// Classes grow by augmentation: every class on s vertices contains a class
// on s-1 as an induced subgraph, so attaching one vertex in all 2^(s-1)
// ways to every smaller class reaches everything.
const ClassTable& class_table(int s) {
    check_size(s);
    static std::mutex mu;
    static std::unordered_map<int, ClassTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    for (int t = 2; t <= s; ++t) {
        if (cache.count(t)) continue;
        std::vector<uint32_t> canons;
        if (t == 2) {
            canons = {0u, 1u};
        } else {
            std::unordered_map<uint32_t, bool> seen;
            for (const auto& base : cache.at(t - 1).classes) {
                SmallGraph bg = SmallGraph::from_code(t - 1, base.canon);
                bg.s = t;
                for (unsigned ext = 0; ext < (1u << (t - 1)); ++ext) {
                    SmallGraph h = bg;
                    for (int i = 0; i < t - 1; ++i)
                        if ((ext >> i) & 1u) h.set_edge(i, t - 1);
                    seen.emplace(canon_code_of(h), true);
                }
            }
            canons.reserve(seen.size());
            for (auto& [c, _] : seen) canons.push_back(c);
            std::sort(canons.begin(), canons.end());
        }
        ClassTable ct;
        for (uint32_t c : canons) {
            SmallGraph h = SmallGraph::from_code(t, c);
            auto res = canonical_code(h);
            ct.classes.push_back({t, c, h.edge_count(), res.aut_size});
        }
        for (size_t i = 0; i < ct.classes.size(); ++i)
            ct.index.emplace(ct.classes[i].canon, static_cast<int>(i));
        cache.emplace(t, std::move(ct));
    }
    return cache.at(s);
}

} // namespace

const std::vector<MotifClass>& motif_classes(int s) { return class_table(s).classes; }

int class_index(int s, uint32_t canon) {
    const auto& tab = class_table(s);
    auto it = tab.index.find(canon);
    if (it == tab.index.end()) fail(Errc::invalid_parameter, "unknown canonical code");
    return it->second;
}

uint64_t binomial_u64(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    __uint128_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > static_cast<__uint128_t>(UINT64_MAX)) return UINT64_MAX;
    }
    return static_cast<uint64_t>(r);
}

namespace {

// raw code -> class index; full table for s <= 6, else per-call hash cache
struct Classifier {
    int s;
    const std::vector<uint16_t>* table = nullptr;
    std::unordered_map<uint32_t, uint16_t> cache;

    explicit Classifier(int s_) : s(s_) {
        if (s <= 6) table = &full_table(s);
    }

    uint16_t classify(uint32_t raw) {
        if (table) return (*table)[raw];
        auto it = cache.find(raw);
        if (it != cache.end()) return it->second;
        uint32_t canon = canon_code_of(SmallGraph::from_code(s, raw));
        uint16_t idx = static_cast<uint16_t>(class_index(s, canon));
        cache.emplace(raw, idx);
        return idx;
    }

    static const std::vector<uint16_t>& full_table(int s) {
        static std::mutex mu;
        static std::unordered_map<int, std::vector<uint16_t>> tables;
        std::lock_guard<std::mutex> lock(mu);
        auto it = tables.find(s);
        if (it != tables.end()) return it->second;
        int bits = s * (s - 1) / 2;
        std::vector<uint16_t> t(1u << bits);
        for (uint32_t raw = 0; raw < (1u << bits); ++raw) {
            uint32_t canon = canon_code_of(SmallGraph::from_code(s, raw));
            t[raw] = static_cast<uint16_t>(class_index(s, canon));
        }
        auto [pos, _] = tables.emplace(s, std::move(t));
        return pos->second;
    }
};

// colex unranking via the combinatorial number system:
// rank = sum_i C(c_i, i+1) with c_0 < c_1 < ... < c_{s-1}
std::vector<Vertex> colex_unrank(uint64_t rank, uint64_t n, int s) {
    std::vector<Vertex> c(s);
    for (int i = s; i >= 1; --i) {
        // largest v with C(v, i) <= remaining rank; v is below the entry
        // chosen one position up, which keeps the combination strict
        uint64_t lo = static_cast<uint64_t>(i) - 1;
        uint64_t hi = (i == s) ? n : static_cast<uint64_t>(c[i]);
        while (lo + 1 < hi) {
            uint64_t mid = (lo + hi) / 2;
            if (binomial_u64(mid, static_cast<uint64_t>(i)) <= rank)
                lo = mid;
            else
                hi = mid;
        }
        c[i - 1] = static_cast<Vertex>(lo);
        rank -= binomial_u64(lo, static_cast<uint64_t>(i));
    }
    return c;
}

bool colex_next(std::vector<Vertex>& c, uint64_t n) {
    int s = static_cast<int>(c.size());
    for (int i = 0; i < s; ++i) {
        uint64_t limit = (i + 1 < s) ? c[i + 1] : n;
        if (static_cast<uint64_t>(c[i]) + 1 < limit) {
            ++c[i];
            for (int j = 0; j < i; ++j) c[j] = static_cast<Vertex>(j);
            return true;
        }
    }
    return false;
}

uint32_t subset_code(const Graph& g, const std::vector<Vertex>& c, int s) {
    uint32_t code = 0;
    for (int j = 1; j < s; ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(c[i], c[j]) ? 1u : 0u);
    return code;
}

std::vector<uint64_t> count_by_enumeration(const Graph& g, int s, uint64_t total) {
    const auto& classes = motif_classes(s);
    uint64_t chunks = std::min<uint64_t>(std::max<uint64_t>(total >> 16, 1), 256);
    std::vector<std::vector<uint64_t>> partial(chunks, std::vector<uint64_t>(classes.size(), 0));
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        Classifier cls(s);
        auto range = chunk_range(total, chunks, chunk);
        if (range.begin >= range.end) return;
        std::vector<Vertex> c = colex_unrank(range.begin, g.vertex_count(), s);
        auto& counts = partial[chunk];
        for (uint64_t r = range.begin; r < range.end; ++r) {
            counts[cls.classify(subset_code(g, c, s))]++;
            if (r + 1 < range.end) colex_next(c, g.vertex_count());
        }
    });
    std::vector<uint64_t> counts(classes.size(), 0);
    for (const auto& part : partial)
        for (size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
    return counts;
}

// ---- closed-form profile counters for s=3 and s=4 at scales where subset
// enumeration is out of reach. Pair statistics plus one neighborhood-edge
// pass give non-induced pattern counts; the overlap matrix between classes
// is computed on the spot and inverted by back-substitution.

struct PairStats {
    uint64_t triangles3 = 0;        // sum of codegrees over edges = 3*T
    uint64_t diamond_pairs = 0;     // sum over edges of C(codeg, 2)
    uint64_t cycle_pairs = 0;       // sum over all pairs of C(codeg, 2)
    uint64_t path_mid = 0;          // sum over edges of (du-1)(dv-1)
    std::vector<uint64_t> tri2;     // per vertex: sum of codegrees of incident edges = 2*t_v
};

PairStats pair_stats(const Graph& g) {
    const uint64_t n = g.vertex_count();
    PairStats st;
    st.tri2.assign(n, 0);
    uint64_t chunks = std::min<uint64_t>(std::max<uint64_t>(n / 64, 1), 64);
    struct Part {
        uint64_t t3 = 0, dp = 0, cp = 0, pm = 0;
        std::vector<uint64_t> tri2;
    };
    std::vector<Part> parts(chunks);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        auto range = chunk_range(n, chunks, chunk);
        Part& p = parts[chunk];
        p.tri2.assign(n, 0);
        for (uint64_t u = range.begin; u < range.end; ++u) {
            for (uint64_t v = u + 1; v < n; ++v) {
                uint64_t c = g.codegree2(static_cast<Vertex>(u), static_cast<Vertex>(v));
                uint64_t pairs = c * (c - 1) / 2;
                p.cp += pairs;
                if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
                    p.t3 += c;
                    p.dp += pairs;
                    p.pm += (g.degree(static_cast<Vertex>(u)) - 1) *
                            (g.degree(static_cast<Vertex>(v)) - 1);
                    p.tri2[u] += c;
                    p.tri2[v] += c;
                }
            }
        }
    });
    for (auto& p : parts) {
        st.triangles3 += p.t3;
        st.diamond_pairs += p.dp;
        st.cycle_pairs += p.cp;
        st.path_mid += p.pm;
        for (uint64_t v = 0; v < n; ++v) st.tri2[v] += p.tri2[v];
    }
    return st;
}

uint64_t count_k4(const Graph& g) {
    const uint64_t n = g.vertex_count();
    const size_t words = g.row_words();
    uint64_t chunks = std::min<uint64_t>(std::max<uint64_t>(n / 32, 1), 128);
    std::vector<uint64_t> partial(chunks, 0);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        auto range = chunk_range(n, chunks, chunk);
        std::vector<uint64_t> common(words);
        uint64_t acc = 0;
        for (uint64_t u = range.begin; u < range.end; ++u) {
            const uint64_t* ru = g.row(static_cast<Vertex>(u));
            for (size_t w = u >> 6; w < words; ++w) {
                uint64_t bits = ru[w];
                if (w == (u >> 6)) bits &= ~(((1ULL << (u & 63)) - 1) | (1ULL << (u & 63)));
                while (bits) {
                    int b = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    uint64_t v = w * 64 + static_cast<uint64_t>(b);
                    const uint64_t* rv = g.row(static_cast<Vertex>(v));
                    // common neighborhood restricted to ids above v
                    size_t start = v >> 6;
                    for (size_t k = start; k < words; ++k) common[k] = ru[k] & rv[k];
                    common[start] &= ~(((1ULL << (v & 63)) - 1) | (1ULL << (v & 63)));
                    for (size_t k = start; k < words; ++k) {
                        uint64_t cb = common[k];
                        while (cb) {
                            int cbit = __builtin_ctzll(cb);
                            cb &= cb - 1;
                            uint64_t x = k * 64 + static_cast<uint64_t>(cbit);
                            const uint64_t* rx = g.row(static_cast<Vertex>(x));
                            // pairs (x,y) with y > x inside the common set
                            uint64_t hi = common[k] & rx[k] &
                                          ~(((1ULL << (x & 63)) - 1) | (1ULL << (x & 63)));
                            acc += static_cast<uint64_t>(__builtin_popcountll(hi));
                            for (size_t k2 = k + 1; k2 < words; ++k2)
                                acc += static_cast<uint64_t>(
                                    __builtin_popcountll(common[k2] & rx[k2]));
                        }
                    }
                }
            }
        }
        partial[chunk] = acc;
    });
    uint64_t k4 = 0;
    for (uint64_t p : partial) k4 += p;
    return k4;
}

// subgraph copies of class `p` inside class `h`, both on the same s vertices
uint64_t overlap_count(const SmallGraph& p, const SmallGraph& h, uint32_t aut_p) {
    std::array<int, 8> perm{};
    for (int i = 0; i < p.s; ++i) perm[i] = i;
    uint64_t embeddings = 0;
    std::sort(perm.begin(), perm.begin() + p.s);
    do {
        bool ok = true;
        for (int i = 0; i < p.s && ok; ++i)
            for (int j = i + 1; j < p.s && ok; ++j)
                if (p.edge(i, j) && !h.edge(perm[i], perm[j])) ok = false;
        if (ok) ++embeddings;
    } while (std::next_permutation(perm.begin(), perm.begin() + p.s));
    return embeddings / aut_p;
}

std::vector<uint64_t> solve_from_noninduced(int s, const std::vector<__int128>& m_by_class) {
    const auto& classes = motif_classes(s);
    // order class indices by decreasing edge count; ties don't overlap
    std::vector<int> order(classes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return classes[a].edge_count > classes[b].edge_count; });
    std::vector<SmallGraph> reps;
    reps.reserve(classes.size());
    for (const auto& c : classes) reps.push_back(SmallGraph::from_code(s, c.canon));
    std::vector<__int128> x(classes.size(), 0);
    for (int oi = 0; oi < static_cast<int>(order.size()); ++oi) {
        int i = order[oi];
        __int128 val = m_by_class[i];
        for (int oj = 0; oj < oi; ++oj) {
            int j = order[oj];
            if (classes[j].edge_count <= classes[i].edge_count) continue;
            uint64_t a = overlap_count(reps[i], reps[j], classes[i].aut_size);
            val -= static_cast<__int128>(a) * x[j];
        }
        if (val < 0) fail(Errc::invalid_parameter, "profile inversion underflow");
        x[i] = val;
    }
    std::vector<uint64_t> out(classes.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<uint64_t>(x[i]);
    return out;
}

int pattern_index(int s, std::initializer_list<std::pair<int, int>> edges) {
    SmallGraph g;
    g.s = s;
    for (auto [i, j] : edges) g.set_edge(i, j);
    return class_index(s, canon_code_of(g));
}

std::vector<uint64_t> count_profile3(const Graph& g) {
    const uint64_t n = g.vertex_count();
    PairStats st = pair_stats(g);
    uint64_t wedges = 0;
    for (uint64_t v = 0; v < n; ++v) {
        uint64_t d = g.degree(static_cast<Vertex>(v));
        wedges += d * (d - 1) / 2;
    }
    std::vector<__int128> m(motif_classes(3).size(), 0);
    m[pattern_index(3, {})] = static_cast<__int128>(binomial_u64(n, 3));
    m[pattern_index(3, {{0, 1}})] = static_cast<__int128>(g.edge_count()) * (n - 2);
    m[pattern_index(3, {{0, 1}, {0, 2}})] = wedges;
    m[pattern_index(3, {{0, 1}, {0, 2}, {1, 2}})] = st.triangles3 / 3;
    return solve_from_noninduced(3, m);
}

std::vector<uint64_t> count_profile4(const Graph& g) {
    const uint64_t n = g.vertex_count();
    PairStats st = pair_stats(g);
    const uint64_t m_edges = g.edge_count();
    const uint64_t triangles = st.triangles3 / 3;
    uint64_t wedges = 0, stars = 0;
    __int128 paw = 0;
    for (uint64_t v = 0; v < n; ++v) {
        uint64_t d = g.degree(static_cast<Vertex>(v));
        wedges += d * (d - 1) / 2;
        if (d >= 3) stars += d * (d - 1) * (d - 2) / 6;
        uint64_t tv = st.tri2[v] / 2;
        if (d >= 2) paw += static_cast<__int128>(tv) * (d - 2);
    }
    const uint64_t k4 = count_k4(g);

    std::vector<__int128> m(motif_classes(4).size(), 0);
    m[pattern_index(4, {})] = static_cast<__int128>(binomial_u64(n, 4));
    m[pattern_index(4, {{0, 1}})] = static_cast<__int128>(m_edges) * binomial_u64(n - 2, 2);
    m[pattern_index(4, {{0, 1}, {2, 3}})] =
        (static_cast<__int128>(m_edges) * (m_edges - 1)) / 2 - static_cast<__int128>(wedges);
    m[pattern_index(4, {{0, 1}, {0, 2}})] = static_cast<__int128>(wedges) * (n - 3);
    m[pattern_index(4, {{0, 1}, {0, 2}, {0, 3}})] = stars;
    m[pattern_index(4, {{0, 1}, {1, 2}, {2, 3}})] =
        static_cast<__int128>(st.path_mid) - st.triangles3;
    m[pattern_index(4, {{0, 1}, {0, 2}, {1, 2}})] = static_cast<__int128>(triangles) * (n - 3);
    m[pattern_index(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}})] = paw;
    m[pattern_index(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})] = st.cycle_pairs / 2;
    m[pattern_index(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}})] = st.diamond_pairs;
    m[pattern_index(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})] = k4;
    auto counts = solve_from_noninduced(4, m);

    __int128 total = 0;
    for (uint64_t c : counts) total += c;
    if (total != static_cast<__int128>(binomial_u64(n, 4)))
        fail(Errc::invalid_parameter, "profile counts do not sum to C(n,4)");
    return counts;
}

} // namespace

std::vector<uint64_t> count_induced_exact(const Graph& g, int s, const CensusOptions& opts) {
    check_size(s);
    const uint64_t n = g.vertex_count();
    if (static_cast<uint64_t>(s) > n) fail(Errc::invalid_parameter, "motif larger than graph");
    if (s == 2) {
        std::vector<uint64_t> counts(2, 0);
        uint64_t pairs = n * (n - 1) / 2;
        counts[class_index(2, 1u)] = g.edge_count();
        counts[class_index(2, 0u)] = pairs - g.edge_count();
        return counts;
    }
    uint64_t total = binomial_u64(n, static_cast<uint64_t>(s));
    if (total <= opts.subset_budget) return count_by_enumeration(g, s, total);
    if (s == 3) return count_profile3(g);
    if (s == 4) return count_profile4(g);
    fail(Errc::budget_exceeded, "exact census budget exceeded; use sampled mode");
}

std::vector<SampledClassCount> count_induced_sampled(const Graph& g, int s, uint64_t samples,
                                                     uint64_t seed) {
    check_size(s);
    const uint64_t n = g.vertex_count();
    if (static_cast<uint64_t>(s) > n) fail(Errc::invalid_parameter, "motif larger than graph");
    if (samples < 1) fail(Errc::invalid_parameter, "need at least one sample");
    const auto& classes = motif_classes(s);
    const uint64_t chunk_size = 4096;
    const uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<std::vector<uint64_t>> partial(chunks, std::vector<uint64_t>(classes.size(), 0));
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        Classifier cls(s);
        Rng rng(derive_seed(seed, chunk));
        uint64_t begin = chunk * chunk_size;
        uint64_t end = std::min(begin + chunk_size, samples);
        std::vector<Vertex> c(s);
        auto& counts = partial[chunk];
        for (uint64_t i = begin; i < end; ++i) {
            // Floyd's uniform s-subset
            int filled = 0;
            for (uint64_t j = n - static_cast<uint64_t>(s); j < n; ++j) {
                uint64_t t = rng.next_below(j + 1);
                bool dup = false;
                for (int q = 0; q < filled; ++q)
                    if (c[q] == t) dup = true;
                c[filled++] = static_cast<Vertex>(dup ? j : t);
            }
            std::sort(c.begin(), c.end());
            counts[cls.classify(subset_code(g, c, s))]++;
        }
    });
    std::vector<uint64_t> hits(classes.size(), 0);
    for (const auto& part : partial)
        for (size_t i = 0; i < hits.size(); ++i) hits[i] += part[i];

    double log_total = 0;
    for (int i = 0; i < s; ++i) log_total += std::log(static_cast<double>(n - i));
    for (int i = 2; i <= s; ++i) log_total -= std::log(static_cast<double>(i));
    std::vector<SampledClassCount> out(classes.size());
    for (size_t i = 0; i < out.size(); ++i) {
        double f = static_cast<double>(hits[i]) / static_cast<double>(samples);
        out[i].hits = hits[i];
        out[i].frequency = f;
        out[i].estimate = f <= 0 ? 0.0 : std::exp(std::log(f) + log_total);
        double se_f = std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
        out[i].stderr_count = se_f * std::exp(log_total);
    }
    return out;
}

double er_expectation_log(uint64_t n, double p, const MotifClass& m) {
    if (!(p > 0.0 && p < 1.0)) fail(Errc::invalid_parameter, "p must be in (0,1)");
    if (static_cast<uint64_t>(m.s) > n) fail(Errc::invalid_parameter, "motif larger than graph");
    double lf = 0;
    for (int i = 0; i < m.s; ++i) lf += std::log(static_cast<double>(n - static_cast<uint64_t>(i)));
    double q = 1.0 - p;
    int pairs = m.s * (m.s - 1) / 2;
    return lf - std::log(static_cast<double>(m.aut_size)) +
           m.edge_count * (std::log(p) - std::log(q)) + pairs * std::log(q);
}

double er_expectation(uint64_t n, double p, const MotifClass& m) {
    return std::exp(er_expectation_log(n, p, m));
}

CensusReport census_report(const Graph& g, double p, int s, bool sampled, uint64_t samples,
                           uint64_t seed, const CensusOptions& opts) {
    CensusReport rep;
    rep.n = g.vertex_count();
    rep.p = p;
    rep.s = s;
    rep.sampled = sampled;
    rep.samples = sampled ? samples : 0;
    rep.seed = seed;
    const auto& classes = motif_classes(s);
    rep.classes.resize(classes.size());

    std::vector<uint64_t> exact;
    std::vector<SampledClassCount> est;
    if (sampled)
        est = count_induced_sampled(g, s, samples, seed);
    else
        exact = count_induced_exact(g, s, opts);

    rep.max_ratio_error = 0;
    for (size_t i = 0; i < classes.size(); ++i) {
        auto& e = rep.classes[i];
        e.cls = classes[i];
        e.er_log = er_expectation_log(rep.n, p, classes[i]);
        e.er_expect = std::exp(e.er_log);
        double count;
        if (sampled) {
            e.count = est[i].estimate;
            e.stderr_count = est[i].stderr_count;
            count = est[i].estimate;
        } else {
            e.exact = exact[i];
            e.count = static_cast<double>(exact[i]);
            count = e.count;
        }
        e.ratio_error = count <= 0 ? 1.0 : std::abs(std::exp(std::log(count) - e.er_log) - 1.0);
        rep.max_ratio_error = std::max(rep.max_ratio_error, e.ratio_error);
    }
    return rep;
}

bool recursion_identity_check(const Graph& g, const SmallGraph& h, int marked_vertex,
                              const CensusOptions& opts) {
    if (h.s < 3 || h.s > 6) fail(Errc::size_unsupported, "identity check supports 3 <= s <= 6");
    if (marked_vertex < 0 || marked_vertex >= h.s)
        fail(Errc::invalid_parameter, "marked vertex out of range");

    // move the marked vertex into the last slot
    std::array<int, 8> perm{};
    for (int i = 0, pos = 0; i < h.s; ++i) {
        if (i == marked_vertex) continue;
        perm[i] = pos++;
    }
    perm[marked_vertex] = h.s - 1;
    SmallGraph hp = h.permuted(perm);
    SmallGraph hr = hp.without_vertex(h.s - 1);
    const int r = h.s - 1;

    VertexTuple tuple;
    tuple.vertices.resize(r);
    tuple.signs.resize(r);
    for (int i = 0; i < r; ++i) tuple.signs[i] = hp.edge(i, h.s - 1) ? 1 : 0;

    auto counts = count_induced_exact(g, h.s, opts);
    auto canon = canonical_code(hp);
    uint64_t lhs = static_cast<uint64_t>(counts[class_index(h.s, canon.canon)]) * canon.aut_size;

    // sum f_r over ordered labeled embeddings of hr
    const uint64_t n = g.vertex_count();
    uint64_t rhs = 0;
    std::vector<Vertex> placed(r);
    std::vector<bool> used(n, false);
    auto dfs = [&](auto&& self, int level) -> void {
        if (level == r) {
            for (int i = 0; i < r; ++i) tuple.vertices[i] = placed[i];
            rhs += g.tuple_common_neighborhood(tuple);
            return;
        }
        for (uint64_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int i = 0; i < level && ok; ++i)
                if (g.has_edge(placed[i], static_cast<Vertex>(v)) != hr.edge(i, level)) ok = false;
            if (!ok) continue;
            placed[level] = static_cast<Vertex>(v);
            used[v] = true;
            self(self, level + 1);
            used[v] = false;
        }
    };
    dfs(dfs, 0);
    return lhs == rhs;
}

} // namespace prg::motif
