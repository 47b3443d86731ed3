#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace prg {

using Vertex = uint32_t;

// Dense n-bit vertex set, words padded to 64 bits with zero padding.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(uint64_t n) : n_(n), words_((n + 63) / 64, 0) {}

    uint64_t universe() const { return n_; }
    bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }
    void set(Vertex v) { words_[v >> 6] |= 1ULL << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }

    uint64_t count() const {
        uint64_t c = 0;
        for (uint64_t w : words_) c += static_cast<uint64_t>(__builtin_popcountll(w));
        return c;
    }

    const uint64_t* data() const { return words_.data(); }
    uint64_t* data() { return words_.data(); }
    size_t word_count() const { return words_.size(); }

    std::vector<Vertex> to_vector() const;

    static VertexSet full(uint64_t n) {
        VertexSet s(n);
        for (uint64_t v = 0; v < n; ++v) s.set(static_cast<Vertex>(v));
        return s;
    }

private:
    uint64_t n_ = 0;
    std::vector<uint64_t> words_;
};

struct VertexTuple {
    std::vector<Vertex> vertices;
    std::vector<uint8_t> signs; // xi values in {0,1}, one per vertex
};

// Immutable simple graph over bitset adjacency rows. Rows are padded to
// whole 64-bit words; padding bits stay zero. All queries are pure and
// safe for concurrent readers.
class Graph {
public:
    static Graph from_edges(uint64_t n, std::span<const std::pair<Vertex, Vertex>> edges);

    // Takes ownership of a prebuilt adjacency buffer (n rows of `words`
    // 64-bit words each). Generators use this; invariants are validated.
    static Graph from_adjacency(uint64_t n, std::vector<uint64_t> rows);

    uint64_t vertex_count() const { return n_; }
    uint64_t edge_count() const { return edge_count_; }
    size_t row_words() const { return words_; }

    const uint64_t* row(Vertex v) const { return rows_.data() + static_cast<size_t>(v) * words_; }

    bool has_edge(Vertex u, Vertex v) const { return (row(u)[v >> 6] >> (v & 63)) & 1ULL; }

    uint64_t degree(Vertex v) const { return degrees_[v]; }

    // N_v^xi: neighbors when xi=1, non-neighbors excluding v itself when
    // xi=0 (so neither set ever contains v).
    std::vector<Vertex> generalized_neighborhood(Vertex v, int xi) const;
    uint64_t generalized_neighborhood_size(Vertex v, int xi) const;

    // |N_v^xi  intersect  B|
    uint64_t neighborhood_in_set(Vertex v, const VertexSet& B, int xi) const;

    // f_r: size of the intersection of the tuple's generalized neighborhoods
    uint64_t tuple_common_neighborhood(const VertexTuple& t) const;

    // Same intersection written into `out` (used by chain walkers).
    void tuple_common_neighborhood_set(const VertexTuple& t, VertexSet& out) const;

    // order-k co-degree, k in {2,3,4}: common neighbors of k distinct vertices
    uint64_t codegree(std::span<const Vertex> vs) const;

    // popcount(row(u) & row(v)); the order-2 fast path
    uint64_t codegree2(Vertex u, Vertex v) const;

    // Invariant check: symmetry, zero diagonal, zero padding, cached counts.
    void validate() const;

    // Ceiling on n for the n^2-bit matrix representation; larger inputs
    // are rejected at construction.
    static constexpr uint64_t max_vertices = 100000;

private:
    Graph() = default;

    void check_vertex(Vertex v) const {
        if (v >= n_) fail(Errc::invalid_vertex, "vertex id out of range");
    }

    uint64_t n_ = 0;
    size_t words_ = 0;
    uint64_t edge_count_ = 0;
    std::vector<uint64_t> rows_;
    std::vector<uint64_t> degrees_;
};

} // namespace prg
