#pragma once

#include <cstdint>
#include <vector>

#include "biguint.hpp"
#include "graph.hpp"

namespace prg::gen {

// G(n,p): every pair decided by a counter-based draw keyed on (seed, pair
// rank), so the result is independent of evaluation order.
Graph gen_er(uint64_t n, double p, uint64_t seed);

// D-regular sampler: circulant start, then `switches` uniform double-edge
// switch attempts (rejecting loops and multi-edges). Degrees are exactly d
// throughout.
Graph gen_regular_switch(uint64_t n, uint64_t d, uint64_t switches, uint64_t seed);

struct BinaryGraphSpec {
    uint32_t k = 0;
    uint64_t n = 0;                   // 2^(k-1) - 1
    uint64_t degree = 0;              // 2^(k-2) - 2
    uint64_t codegree_adjacent = 0;   // 2^(k-3) - 3
    uint64_t codegree_nonadjacent = 0; // 2^(k-3) - 1
};

BinaryGraphSpec binary_spec(uint32_t k);

// Vertices: odd-parity k-bit vectors except all-ones, ordered by integer
// value; edge iff the GF(2) inner product is 1.
Graph gen_binary(uint32_t k);

// the vertex bit-vectors in graph id order
std::vector<uint32_t> binary_vertex_words(uint32_t k);

// Exact number of independent r-sets in gen_binary(k): the product
// (2^(k-1)-1) * 2^(k-2) * (2^(k-3)-1) * 2^(k-4) * ... / r!, where an odd
// factor is decremented only when the chain continues past it (the
// decrement removes prefixes with no common non-neighbor left). r > k
// gives 0.
BigUint binary_independent_count(uint32_t k, uint32_t r);

// A clique built from the span of t = (k-1)/2 mutually orthogonal
// even-weight vectors; extra = t' picks how many span elements beyond the
// basis to keep. Returns graph vertex ids; maximal t' gives 2^t - 1.
std::vector<Vertex> binary_clique_construct(uint32_t k, uint32_t extra);
uint64_t binary_clique_max_extra(uint32_t k); // 2^t - 1 - t

// Adds all edges among r uniformly chosen vertices.
Graph plant_clique(const Graph& g, uint64_t r, uint64_t seed);

// n points uniform on the (d-1)-sphere via normalized Gaussians; edge iff
// the inner product clears t_{p,d}.
Graph gen_geometric(uint64_t n, uint64_t d, double p, uint64_t seed);

// Glauber dynamics for the edge-triangle model; `sweeps` full passes of
// n(n-1)/2 single-edge updates in seeded random order, starting from
// ER(n, sigmoid(beta)).
Graph gen_ergm(uint64_t n, double beta, double gamma, uint64_t sweeps, uint64_t seed);

} // namespace prg::gen
