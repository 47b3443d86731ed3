#include "graph.hpp"

#include <algorithm>

namespace prg {

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t bits = words_[w];
        while (bits) {
            int b = __builtin_ctzll(bits);
            out.push_back(static_cast<Vertex>(w * 64 + b));
            bits &= bits - 1;
        }
    }
    return out;
}

Graph Graph::from_edges(uint64_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    if (n == 0 || n > max_vertices) fail(Errc::invalid_parameter, "vertex count out of range");
    Graph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    g.rows_.assign(g.words_ * n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) fail(Errc::invalid_vertex, "edge endpoint out of range");
        if (u == v) fail(Errc::invalid_edge, "self-loop rejected");
        g.rows_[static_cast<size_t>(u) * g.words_ + (v >> 6)] |= 1ULL << (v & 63);
        g.rows_[static_cast<size_t>(v) * g.words_ + (u >> 6)] |= 1ULL << (u & 63);
    }
    g.degrees_.resize(n);
    uint64_t total = 0;
    for (uint64_t v = 0; v < n; ++v) {
        uint64_t d = 0;
        const uint64_t* r = g.row(static_cast<Vertex>(v));
        for (size_t w = 0; w < g.words_; ++w) d += static_cast<uint64_t>(__builtin_popcountll(r[w]));
        g.degrees_[v] = d;
        total += d;
    }
    g.edge_count_ = total / 2;
    return g;
}

Graph Graph::from_adjacency(uint64_t n, std::vector<uint64_t> rows) {
    if (n == 0 || n > max_vertices) fail(Errc::invalid_parameter, "vertex count out of range");
    size_t words = (n + 63) / 64;
    if (rows.size() != words * n) fail(Errc::invalid_parameter, "adjacency buffer size mismatch");
    Graph g;
    g.n_ = n;
    g.words_ = words;
    g.rows_ = std::move(rows);
    g.degrees_.resize(n);
    uint64_t total = 0;
    for (uint64_t v = 0; v < n; ++v) {
        uint64_t d = 0;
        const uint64_t* r = g.row(static_cast<Vertex>(v));
        for (size_t w = 0; w < words; ++w) d += static_cast<uint64_t>(__builtin_popcountll(r[w]));
        g.degrees_[v] = d;
        total += d;
    }
    g.edge_count_ = total / 2;
    g.validate();
    return g;
}

void Graph::validate() const {
    const uint64_t tail_bits = n_ & 63;
    const uint64_t tail_mask = tail_bits ? ~((1ULL << tail_bits) - 1) : 0;
    uint64_t total = 0;
    for (uint64_t v = 0; v < n_; ++v) {
        const uint64_t* r = row(static_cast<Vertex>(v));
        if ((r[v >> 6] >> (v & 63)) & 1ULL) fail(Errc::invalid_edge, "self-loop in adjacency");
        if (tail_mask && (r[words_ - 1] & tail_mask))
            fail(Errc::invalid_parameter, "nonzero padding bits in adjacency row");
        uint64_t d = 0;
        for (size_t w = 0; w < words_; ++w) d += static_cast<uint64_t>(__builtin_popcountll(r[w]));
        if (d != degrees_[v]) fail(Errc::invalid_parameter, "cached degree mismatch");
        total += d;
    }
    if (total != 2 * edge_count_) fail(Errc::invalid_parameter, "cached edge count mismatch");
    // Symmetry: every set bit must have its mirror set. A one-sided zero is
    // caught from the other endpoint's row scan.
    for (uint64_t v = 0; v < n_; ++v) {
        const uint64_t* r = row(static_cast<Vertex>(v));
        for (size_t w = 0; w < words_; ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                Vertex u = static_cast<Vertex>(w * 64 + b);
                if (!has_edge(u, static_cast<Vertex>(v)))
                    fail(Errc::invalid_parameter, "asymmetric adjacency");
                bits &= bits - 1;
            }
        }
    }
}

std::vector<Vertex> Graph::generalized_neighborhood(Vertex v, int xi) const {
    check_vertex(v);
    std::vector<Vertex> out;
    const uint64_t* r = row(v);
    if (xi == 1) {
        out.reserve(degrees_[v]);
        for (size_t w = 0; w < words_; ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                out.push_back(static_cast<Vertex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    } else {
        out.reserve(n_ - 1 - degrees_[v]);
        for (size_t w = 0; w < words_; ++w) {
            uint64_t bits = ~r[w];
            if (w == words_ - 1 && (n_ & 63)) bits &= (1ULL << (n_ & 63)) - 1;
            while (bits) {
                int b = __builtin_ctzll(bits);
                Vertex u = static_cast<Vertex>(w * 64 + b);
                if (u != v) out.push_back(u);
                bits &= bits - 1;
            }
        }
    }
    return out;
}

uint64_t Graph::generalized_neighborhood_size(Vertex v, int xi) const {
    check_vertex(v);
    return xi == 1 ? degrees_[v] : n_ - 1 - degrees_[v];
}

uint64_t Graph::neighborhood_in_set(Vertex v, const VertexSet& B, int xi) const {
    check_vertex(v);
    if (B.universe() != n_) fail(Errc::invalid_parameter, "vertex set universe mismatch");
    const uint64_t* r = row(v);
    const uint64_t* b = B.data();
    uint64_t c = 0;
    for (size_t w = 0; w < words_; ++w)
        c += static_cast<uint64_t>(__builtin_popcountll(r[w] & b[w]));
    if (xi == 1) return c;
    // non-neighbors of v inside B, excluding v itself
    uint64_t inside = B.count();
    return inside - c - (B.test(v) ? 1 : 0);
}

void Graph::tuple_common_neighborhood_set(const VertexTuple& t, VertexSet& out) const {
    if (t.vertices.empty() || t.vertices.size() != t.signs.size())
        fail(Errc::invalid_tuple, "tuple must be nonempty with matching signs");
    for (size_t i = 0; i < t.vertices.size(); ++i) {
        check_vertex(t.vertices[i]);
        for (size_t j = i + 1; j < t.vertices.size(); ++j)
            if (t.vertices[i] == t.vertices[j]) fail(Errc::invalid_tuple, "repeated vertex in tuple");
    }
    out = VertexSet(n_);
    uint64_t* acc = out.data();
    const uint64_t tail_bits = n_ & 63;
    for (size_t w = 0; w < words_; ++w) acc[w] = ~0ULL;
    if (tail_bits) acc[words_ - 1] = (1ULL << tail_bits) - 1;
    for (size_t i = 0; i < t.vertices.size(); ++i) {
        const uint64_t* r = row(t.vertices[i]);
        if (t.signs[i] == 1) {
            for (size_t w = 0; w < words_; ++w) acc[w] &= r[w];
        } else {
            for (size_t w = 0; w < words_; ++w) acc[w] &= ~r[w];
            out.reset(t.vertices[i]); // v never counts as its own non-neighbor
        }
    }
}

uint64_t Graph::tuple_common_neighborhood(const VertexTuple& t) const {
    VertexSet s;
    tuple_common_neighborhood_set(t, s);
    return s.count();
}

uint64_t Graph::codegree2(Vertex u, Vertex v) const {
    const uint64_t* a = row(u);
    const uint64_t* b = row(v);
    uint64_t c = 0;
    for (size_t w = 0; w < words_; ++w)
        c += static_cast<uint64_t>(__builtin_popcountll(a[w] & b[w]));
    return c;
}

uint64_t Graph::codegree(std::span<const Vertex> vs) const {
    if (vs.size() < 2 || vs.size() > 4) fail(Errc::invalid_arity, "co-degree order must be 2..4");
    for (size_t i = 0; i < vs.size(); ++i) {
        check_vertex(vs[i]);
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) fail(Errc::invalid_tuple, "repeated vertex");
    }
    uint64_t c = 0;
    switch (vs.size()) {
        case 2:
            return codegree2(vs[0], vs[1]);
        case 3: {
            const uint64_t *a = row(vs[0]), *b = row(vs[1]), *d = row(vs[2]);
            for (size_t w = 0; w < words_; ++w)
                c += static_cast<uint64_t>(__builtin_popcountll(a[w] & b[w] & d[w]));
            return c;
        }
        default: {
            const uint64_t *a = row(vs[0]), *b = row(vs[1]), *d = row(vs[2]), *e = row(vs[3]);
            for (size_t w = 0; w < words_; ++w)
                c += static_cast<uint64_t>(__builtin_popcountll(a[w] & b[w] & d[w] & e[w]));
            return c;
        }
    }
}

} // namespace prg
