#pragma once

#include <cstdint>

namespace prg::geom {

// Standard normal distribution function and its inverse. The quantile is
// accurate to ~1e-9 before a Newton polish pushes it near machine epsilon.
double normal_cdf(double x);
double normal_quantile(double u);

// Regularized incomplete beta I_x(a,b) by continued fraction (Lentz).
double incomplete_beta(double a, double b, double x);

struct ThresholdSpec {
    double p = 0;
    uint64_t d = 0;
    double t = 0;
};

// t with P(<X_i, X_j> >= t) = p for independent uniform points on S^{d-1}.
// The first coordinate T of a uniform point satisfies T^2 ~ Beta(1/2,(d-1)/2),
// so t = sqrt(BetaQuantile(1-2p; 1/2, (d-1)/2)); p = 1/2 gives exactly 0.
ThresholdSpec threshold_tpd(double p, uint64_t d);

struct DgluResult {
    bool holds = false;
    double lhs = 0;          // |t sqrt(d) - Phi^{-1}(1-p)|
    double rhs = 0;          // kappa* sqrt(ln d / d)
    double kappa_fit = 0;    // smallest kappa* that would pass
};

// |t_{p,d} sqrt(d) - Phi^{-1}(1-p)| <= kappa* sqrt(ln d / d), requires
// d >= max(4/p^2, 27).
DgluResult dglu_check(double p, uint64_t d, double kappa_star);

// tau_n = kappa_p [ sqrt(max(ln n, ln d)/d) + 1/n^2 ]
double tau_n(uint64_t n, uint64_t d, double kappa_p);

struct WillinkBounds {
    double lower = 0;
    double upper = 0;
    double theta = 0;
};

// Phi(-h) Phi(-theta h) <= P(Z >= h, Z_rho >= h) <= (1+rho) of the same,
// theta = sqrt((1-rho)/(1+rho)); h > 0, 0 <= rho < 1.
WillinkBounds willink_bounds(double h, double rho);

// For rho in (-1,0): P(Z>=h, Z_rho>=h) = 2 Phi(-h) Phi(-theta h) -
// P(Z>=theta h, Z_rho' >= theta h) with correlation -rho, bracketed through
// willink_bounds on the positive-correlation term.
WillinkBounds negative_rho_tail_bounds(double h, double rho);

struct McEstimate {
    double estimate = 0;
    double stderr_ = 0;
    uint64_t samples = 0;
};

// Monte Carlo for P(Z >= h, rho Z + sqrt(1-rho^2) Z' >= h).
McEstimate bivariate_tail_mc(double h, double rho, uint64_t samples, uint64_t seed);

struct NormCheckResult {
    bool holds = false;
    bool vacuous = false;    // samples == 0
    double fail_frequency = 0;
    double bound = 0;        // 2 e^{-eps^2/2} plus Monte Carlo slack
    double epsilon = 3.0;
};

// Empirical check of the chi-concentration |  ||Z|| - sqrt(d) | <=
// eps + 1/(2 sqrt(d)) with failure probability at most 2 e^{-eps^2/2}.
NormCheckResult gaussian_norm_check(uint64_t d, uint64_t samples, uint64_t seed,
                                    double epsilon = 3.0);

// Monte Carlo edge probability of the spherical graph at (p,d): fraction of
// seeded point pairs with inner product >= t_{p,d}.
McEstimate edge_probability_mc(double p, uint64_t d, uint64_t pairs, uint64_t seed);

} // namespace prg::geom
