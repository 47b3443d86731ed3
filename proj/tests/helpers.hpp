#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "graph.hpp"
#include "motif.hpp"

namespace prg::testing {

inline Graph make_graph(uint64_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(uint64_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (uint64_t u = 0; u < n; ++u)
        for (uint64_t v = u + 1; v < n; ++v)
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return make_graph(n, std::move(edges));
}

inline Graph empty_graph(uint64_t n) { return make_graph(n, {}); }

inline Graph cycle_graph(uint64_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (uint64_t v = 0; v < n; ++v)
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
    return make_graph(n, std::move(edges));
}

inline Graph path_graph(uint64_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (uint64_t v = 0; v + 1 < n; ++v)
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
    return make_graph(n, std::move(edges));
}

inline Graph star_graph(uint64_t leaves) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (uint64_t v = 1; v <= leaves; ++v) edges.emplace_back(0, static_cast<Vertex>(v));
    return make_graph(leaves + 1, std::move(edges));
}

inline bool rows_equal(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    const size_t words = a.row_words() * a.vertex_count();
    const uint64_t* ra = a.row(0);
    const uint64_t* rb = b.row(0);
    for (size_t i = 0; i < words; ++i)
        if (ra[i] != rb[i]) return false;
    return true;
}

// Brute-force isomorphism test: independent of the canonical-code path.
inline bool naive_isomorphic(const motif::SmallGraph& a, const motif::SmallGraph& b) {
    if (a.s != b.s) return false;
    std::array<int, 8> perm{};
    for (int i = 0; i < a.s; ++i) perm[i] = i;
    do {
        bool match = true;
        for (int i = 0; i < a.s && match; ++i)
            for (int j = i + 1; j < a.s && match; ++j)
                if (a.edge(i, j) != b.edge(perm[i], perm[j])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.begin() + a.s));
    return false;
}

inline motif::SmallGraph induced_small(const Graph& g, const std::vector<Vertex>& subset) {
    motif::SmallGraph h;
    h.s = static_cast<int>(subset.size());
    for (int i = 0; i < h.s; ++i)
        for (int j = i + 1; j < h.s; ++j)
            if (g.has_edge(subset[i], subset[j])) h.set_edge(i, j);
    return h;
}

// Naive census oracle: enumerate subsets, classify each against
// representative graphs by brute-force isomorphism.
inline std::vector<uint64_t> naive_census(const Graph& g, int s) {
    std::vector<motif::SmallGraph> reps;
    std::vector<uint64_t> counts;
    const uint64_t n = g.vertex_count();
    std::vector<Vertex> subset;
    auto rec = [&](auto&& self, uint64_t next) -> void {
        if (subset.size() == static_cast<size_t>(s)) {
            motif::SmallGraph h = induced_small(g, subset);
            for (size_t i = 0; i < reps.size(); ++i)
                if (naive_isomorphic(h, reps[i])) {
                    counts[i]++;
                    return;
                }
            reps.push_back(h);
            counts.push_back(1);
            return;
        }
        for (uint64_t v = next; v < n; ++v) {
            subset.push_back(static_cast<Vertex>(v));
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    // align to motif_classes order via canonical codes
    const auto& classes = motif::motif_classes(s);
    std::vector<uint64_t> aligned(classes.size(), 0);
    for (size_t i = 0; i < reps.size(); ++i) {
        uint32_t canon = motif::canonical_code(reps[i]).canon;
        aligned[static_cast<size_t>(motif::class_index(s, canon))] = counts[i];
    }
    return aligned;
}

} // namespace prg::testing
