#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace prg::diag {

struct GoodSetParams {
    double c_tilde = 3.0;
    double epsilon = 0;  // in (0,1); default_epsilon fills it from n, delta
    double delta = 0;
    double p = 0.5;
};

// epsilon = C0bar * ln ln n / ((1-delta) ln n), clamped into (0,1)
double default_epsilon(uint64_t n, double delta, double c0_bar = 4.0);

// deviation allowance for a vertex against the set B:
// c_tilde * |B| * p^xi * q^(1-xi) * n^(epsilon (delta-1)/2)
double good_threshold(uint64_t n, uint64_t b_size, int xi, const GoodSetParams& params);

// vertices whose restricted neighborhood stays within the allowance
VertexSet good_set(const Graph& g, const VertexSet& B, int xi, const GoodSetParams& params);

enum class FBarConvention { all_tuples, distinct_tuples };

// all_tuples: the degree-power identity (1/(n)_r) sum_v (N_v^0)^z (N_v^1)^(r-z),
// exactly the with-repetition tuple average. distinct_tuples: direct average
// over distinct-vertex tuples, feasible only for r <= 3 and small n.
double f_bar(const Graph& g, int r, const std::vector<uint8_t>& signs, FBarConvention convention);

// exact numerator of the all_tuples form: sum_v (N_v^0)^zeros (N_v^1)^ones
unsigned __int128 f_bar_all_tuples_numerator(const Graph& g, int r,
                                             const std::vector<uint8_t>& signs);

struct GoodChainResult {
    double f_r = 0;
    double target = 0;  // n p^ones q^zeros
    double bound = 0;   // 3 c_tilde r n^(eps (delta-1)/2) * target
    bool holds = false;
};

// Verifies the chain walks through good sets (every vertex from the third
// on must be good for its prefix) and evaluates the inductive estimate.
GoodChainResult good_chain_estimate(const Graph& g, const VertexTuple& chain,
                                    const GoodSetParams& params);

// E_n(r) = max over classes H_r of | count/((n)_r/|Aut|) - (p/q)^E q^(C(r,2)) |
double error_functional(const Graph& g, int r, double p);

// one recursion step: E_{r+1} <= E_r (1/2)^r (1 + C* r / (log2 n)^3)
//                               + C* r/(log2 n)^3 (1/2)^(C(r+1,2))
double recursion_bound(double e_r, int r, uint64_t n, double c_star);

// accumulated closed form: E_s <= 2 E_2 2^(-C(s,2)) + 2 C*/(log2 n)^2 2^(-C(s,2))
double recursion_bound_closed(double e_2, int s, uint64_t n, double c_star);

} // namespace prg::diag
