#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace prg::motif {

// Labeled graph on s <= 8 vertices; row bitmask adjacency.
struct SmallGraph {
    int s = 0;
    std::array<uint8_t, 8> rows{};

    bool edge(int i, int j) const { return (rows[i] >> j) & 1; }
    void set_edge(int i, int j) {
        rows[i] |= uint8_t(1u << j);
        rows[j] |= uint8_t(1u << i);
    }

    // Pair packing: for j = 1..s-1, for i = 0..j-1, append bit (i,j); the
    // first pair lands in the most significant position, so integer order
    // equals lexicographic order of the upper triangle read column-wise.
    uint32_t code() const;
    static SmallGraph from_code(int s, uint32_t code);

    int edge_count() const;
    SmallGraph complement() const;
    SmallGraph without_vertex(int v) const;
    SmallGraph permuted(const std::array<int, 8>& perm) const;
};

struct CanonResult {
    uint32_t canon = 0;
    uint32_t aut_size = 0;
};

// Minimum code over all s! relabelings plus |Aut|; exact backtracking
// search that only ever explores prefix-minimal branches.
CanonResult canonical_code(const SmallGraph& g);

struct MotifClass {
    int s = 0;
    uint32_t canon = 0;
    int edge_count = 0;
    uint32_t aut_size = 0;
};

// All isomorphism classes on s vertices (2 <= s <= 8), sorted by canon.
const std::vector<MotifClass>& motif_classes(int s);
int class_index(int s, uint32_t canon);

struct CensusOptions {
    // Subset-enumeration ceiling; past it, s in {3,4} switches to the
    // closed-form profile counters and larger s reports BudgetExceeded.
    uint64_t subset_budget = 1ull << 26;
};

// Exact induced counts per class, indexed like motif_classes(s).
std::vector<uint64_t> count_induced_exact(const Graph& g, int s, const CensusOptions& opts = {});

struct SampledClassCount {
    double frequency = 0;  // fraction of sampled s-subsets in this class
    double estimate = 0;   // frequency * C(n,s)
    double stderr_count = 0;
    uint64_t hits = 0;
};

// Uniform s-subset sampling, deterministic given the seed and independent
// of the thread count (fixed sample chunks carry derived seeds).
std::vector<SampledClassCount> count_induced_sampled(const Graph& g, int s, uint64_t samples,
                                                     uint64_t seed);

// E[n_{G(n,p)}(H)] = (n)_s / |Aut(H)| * (p/q)^{|E(H)|} * q^{C(s,2)}
double er_expectation_log(uint64_t n, double p, const MotifClass& m);
double er_expectation(uint64_t n, double p, const MotifClass& m);

struct CensusClassEntry {
    MotifClass cls;
    double count = 0;      // exact count or sampled estimate
    uint64_t exact = 0;    // valid in exact mode
    double stderr_count = 0;
    double er_log = 0;
    double er_expect = 0;
    double ratio_error = 0;
};

struct CensusReport {
    uint64_t n = 0;
    double p = 0;
    int s = 0;
    bool sampled = false;
    uint64_t samples = 0;
    uint64_t seed = 0;
    std::vector<CensusClassEntry> classes;
    double max_ratio_error = 0;
};

CensusReport census_report(const Graph& g, double p, int s, bool sampled, uint64_t samples,
                           uint64_t seed, const CensusOptions& opts = {});

// Double-counting identity: |Aut(H_{r+1})| * n_G(H_{r+1}) equals the sum
// of f_r over ordered embeddings of H_r, with the sign pattern read off the
// marked vertex. Exact integer comparison.
bool recursion_identity_check(const Graph& g, const SmallGraph& h, int marked_vertex,
                              const CensusOptions& opts = {});

uint64_t binomial_u64(uint64_t n, uint64_t k); // saturates at UINT64_MAX

} // namespace prg::motif
