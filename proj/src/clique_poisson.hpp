#pragma once

#include <cstdint>
#include <vector>

namespace prg::clique {

// ln of mu = C(n,r) 2^(-C(r,2)), via log-gamma; the working regime
// (n ~ 1e6, r ~ 500) is far outside linear-scale doubles.
double poisson_mu_log(uint64_t n, uint64_t r);

// ln a_s with a_s = C(r,s) C(n-r, r-s) 2^(-(C(r,2) - C(s,2)))
double overlap_term_log(uint64_t n, uint64_t r, uint64_t s);

// rho_s = a_{s+1}/a_s = (r-s)^2 2^s / ((s+1)(n-2r+s+1))
double consecutive_ratio(uint64_t n, uint64_t r, uint64_t s);

struct UnimodalityReport {
    uint64_t s_star = 0;  // argmin of ln a_s over s in [2, r-1]
    double min_log = 0;
    bool shape_ok = false;  // decreasing before s*, increasing after, with
                            // exceptions tolerated only at s in {r-3, r-2}
    std::vector<uint64_t> violations;
};

UnimodalityReport unimodality_profile(uint64_t n, uint64_t r);

struct VarianceRatioBound {
    double full_sum_log = 0;  // ln( 2^(-C(r,2)) + sum_s a_s )
    double refined_log = 0;   // ln( 2^(-C(r,2)) + r max_{s in {2,r-3,r-2,r-1}} a_s )
};

VarianceRatioBound variance_ratio_bound(uint64_t n, uint64_t r);

struct TvBound {
    double mu_log = 0;
    double tv_log = 0;  // ln of the assembled bound
    double tv = 0;      // linear value (0 when it underflows)
};

// d_TV <= (1 - e^(-mu)) (2^(-C(r,2)) + sum_s a_s)
TvBound tv_bound(uint64_t n, uint64_t r);

struct CliqueRegime {
    uint64_t n = 0;
    uint64_t r = 0;
    double mu_log = 0;
    std::vector<double> a_s_log;  // s = 2..r-1
    TvBound tv;
    UnimodalityReport profile;
};

CliqueRegime clique_regime(uint64_t n, uint64_t r);

struct PlantedSeedResult {
    uint64_t seed = 0;
    double deviation1 = 0;
    double deviation2 = 0;
    double allowance = 0;  // C n^delta
    bool pass = false;
};

struct PlantedExperimentReport {
    uint64_t n = 0;
    uint64_t clique_size = 0;
    double epsilon = 0;
    double c = 0;
    double delta = 0;
    double C = 3.0;
    std::vector<PlantedSeedResult> seeds;
    uint64_t passes = 0;
};

// ER(n,1/2) with a planted clique of ceil(c n^(1/2-eps)) vertices; orders
// 1-2 are checked exactly against the allowance C n^delta. Requires
// delta + eps > 1.
PlantedExperimentReport planted_certification_experiment(uint64_t n, double epsilon, double c,
                                                         double delta, uint64_t num_seeds,
                                                         uint64_t seed, double C = 3.0);

// ln sum of exponentials, tolerant of -inf entries
double log_sum_exp(const std::vector<double>& logs);

} // namespace prg::clique
