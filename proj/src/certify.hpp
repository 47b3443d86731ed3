#pragma once

#include <cstdint>
#include <optional>

#include "graph.hpp"

namespace prg::certify {

enum class DeviationMode { exact, sampled };

struct DeviationResult {
    double value = 0;   // max over scanned tuples of | |common N| - n p^k |
    bool sampled = false; // sampled scans give a lower bound on the max
    uint64_t tuples_scanned = 0;
};

// Order 1 measures degrees against n*p; order k in {2,3,4} measures common
// neighborhoods of k-tuples against n*p^k. Orders 1 and 2 are always exact.
DeviationResult assumption_deviation(const Graph& g, double p, int order, DeviationMode mode,
                                     uint64_t sample_tuples = 1000000, uint64_t seed = 0);

// p-hat = 2 m / (n (n-1)); empty and complete graphs have no usable density.
double estimate_p(const Graph& g);

enum class AdmissibleMode { a12, a14 };

// floor( min(1-delta, cap) * ln n / ln gamma_p - C0' * ln ln n ), clipped
// below at 2; cap is 1/2 for a12 and 2/3 for a14.
int admissible_motif_size(uint64_t n, double p, double delta, double c0_prime, AdmissibleMode mode);

// Same size bound with gamma_p replaced by 1/p (clique counts only) or
// 1/q (independent-set counts only).
int admissible_motif_size_base(uint64_t n, double log_base, double delta, double c0_prime,
                               double exponent_cap);

struct CertifyOptions {
    std::optional<double> assume_p;
    double C = 3.0;
    double c0_prime = 1.0;
    int max_order = 4;                  // orders 1..max_order are scanned
    uint64_t exact_tuple_vertex_cap = 300; // orders 3-4 exact only up to this n
    uint64_t sample_tuples = 1000000;
    uint64_t seed = 0;
};

struct Certificate {
    uint64_t n = 0;
    uint64_t edge_count = 0;
    double p_hat = 0;
    bool p_assumed = false;
    double C = 0;
    double c0_prime = 0;
    int max_order = 0;
    double deviation[5] = {0, 0, 0, 0, 0};  // indexed by order 1..4
    bool deviation_sampled[5] = {false, false, false, false, false};
    double delta_hat[5] = {0, 0, 0, 0, 0};
    int s_max_a12 = 0;
    int s_max_a14 = 0;
    int s_max_clique = 0;       // gamma_p replaced by 1/p
    int s_max_independent = 0;  // gamma_p replaced by 1/q
};

Certificate certify(const Graph& g, const CertifyOptions& opts = {});

} // namespace prg::certify
