#include "clique_poisson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "certify.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "rng.hpp"

namespace prg::clique {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double log_binomial(uint64_t n, uint64_t k) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double choose2(uint64_t r) { return 0.5 * static_cast<double>(r) * static_cast<double>(r - 1); }

// ln a_s without the feasibility precondition: impossible terms (r-s > n-r)
// have C(n-r, r-s) = 0 and come back as -inf, which drops them from sums
double overlap_log_raw(uint64_t n, uint64_t r, uint64_t s) {
    return log_binomial(r, s) + log_binomial(n - r, r - s) - (choose2(r) - choose2(s)) * kLn2;
}

} // namespace

double log_sum_exp(const std::vector<double>& logs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : logs) m = std::max(m, v);
    if (!std::isfinite(m)) return m;
    double acc = 0;
    for (double v : logs) acc += std::exp(v - m);
    return m + std::log(acc);
}

double poisson_mu_log(uint64_t n, uint64_t r) {
    if (r < 2 || r > n) fail(Errc::invalid_parameter, "need 2 <= r <= n");
    return log_binomial(n, r) - choose2(r) * kLn2;
}

double overlap_term_log(uint64_t n, uint64_t r, uint64_t s) {
    if (s < 2 || s + 1 > r) fail(Errc::invalid_parameter, "need 2 <= s <= r-1");
    if (r - s > n - r) fail(Errc::invalid_parameter, "need r - s <= n - r");
    return overlap_log_raw(n, r, s);
}

double consecutive_ratio(uint64_t n, uint64_t r, uint64_t s) {
    if (s < 2 || s + 2 > r) fail(Errc::invalid_parameter, "need 2 <= s <= r-2");
    if (n + s + 1 <= 2 * r) fail(Errc::invalid_parameter, "need n - 2r + s + 1 > 0");
    const double rs = static_cast<double>(r - s);
    return rs * rs * std::pow(2.0, static_cast<double>(s)) /
           (static_cast<double>(s + 1) * static_cast<double>(n - 2 * r + s + 1));
}

UnimodalityReport unimodality_profile(uint64_t n, uint64_t r) {
    if (r < 3 || 4 * r > n) fail(Errc::invalid_parameter, "need r >= 3 and r <= n/4");
    UnimodalityReport rep;
    double best = std::numeric_limits<double>::infinity();
    for (uint64_t s = 2; s <= r - 1; ++s) {
        const double v = overlap_log_raw(n, r, s);
        if (v < best) {
            best = v;
            rep.s_star = s;
        }
    }
    rep.min_log = best;
    rep.shape_ok = true;
    if (r >= 4) {
        for (uint64_t s = 2; s + 1 <= r - 1; ++s) {
            const double rho = consecutive_ratio(n, r, s);
            const bool decreasing_zone = s < rep.s_star;
            const bool ok = decreasing_zone ? (rho < 1.0) : (rho > 1.0);
            if (!ok) {
                // the proof tolerates non-monotone steps only at r-3 and r-2
                if (!decreasing_zone && (s == r - 3 || s == r - 2)) continue;
                rep.shape_ok = false;
                rep.violations.push_back(s);
            }
        }
    }
    return rep;
}

VarianceRatioBound variance_ratio_bound(uint64_t n, uint64_t r) {
    if (r < 2 || r > n) fail(Errc::invalid_parameter, "need 2 <= r <= n");
    VarianceRatioBound vb;
    std::vector<double> full{-choose2(r) * kLn2};
    for (uint64_t s = 2; s + 1 <= r; ++s) full.push_back(overlap_log_raw(n, r, s));
    vb.full_sum_log = log_sum_exp(full);

    std::vector<double> candidates;
    auto push = [&](uint64_t s) {
        if (s >= 2 && s + 1 <= r) candidates.push_back(overlap_log_raw(n, r, s));
    };
    push(2);
    if (r >= 3) push(r - 3);
    if (r >= 2) push(r - 2);
    push(r - 1);
    double peak = -std::numeric_limits<double>::infinity();
    for (double c : candidates) peak = std::max(peak, c);
    std::vector<double> refined{-choose2(r) * kLn2};
    if (std::isfinite(peak)) refined.push_back(std::log(static_cast<double>(r)) + peak);
    vb.refined_log = log_sum_exp(refined);
    return vb;
}

TvBound tv_bound(uint64_t n, uint64_t r) {
    TvBound tb;
    tb.mu_log = poisson_mu_log(n, r);
    const auto vb = variance_ratio_bound(n, r);
    // ln(1 - e^(-mu)) without losing the mu -> 0 regime
    double log1m;
    if (tb.mu_log < -1.0) {
        // 1 - e^{-mu} = mu (1 - mu/2 + ...) for small mu
        const double mu = std::exp(tb.mu_log);
        log1m = tb.mu_log + std::log1p(-mu / 2.0 + mu * mu / 6.0);
    } else {
        const double mu = std::exp(tb.mu_log);
        log1m = std::log(-std::expm1(-mu));
    }
    tb.tv_log = log1m + vb.full_sum_log;
    tb.tv = std::exp(tb.tv_log);
    return tb;
}

CliqueRegime clique_regime(uint64_t n, uint64_t r) {
    CliqueRegime cr;
    cr.n = n;
    cr.r = r;
    cr.mu_log = poisson_mu_log(n, r);
    for (uint64_t s = 2; s + 1 <= r; ++s) cr.a_s_log.push_back(overlap_log_raw(n, r, s));
    cr.tv = tv_bound(n, r);
    if (r >= 3 && 4 * r <= n) cr.profile = unimodality_profile(n, r);
    return cr;
}

PlantedExperimentReport planted_certification_experiment(uint64_t n, double epsilon, double c,
                                                         double delta, uint64_t num_seeds,
                                                         uint64_t seed, double C) {
    if (!(delta > 0 && delta < 1) || !(epsilon > 0) || !(c >= 0))
        fail(Errc::invalid_parameter, "bad experiment parameters");
    if (!(delta + epsilon > 1.0))
        fail(Errc::invalid_parameter, "requires delta + epsilon > 1");
    PlantedExperimentReport rep;
    rep.n = n;
    rep.epsilon = epsilon;
    rep.c = c;
    rep.delta = delta;
    rep.C = C;
    rep.clique_size = static_cast<uint64_t>(
        std::ceil(c * std::pow(static_cast<double>(n), 0.5 - epsilon)));
    if (rep.clique_size > n) fail(Errc::invalid_parameter, "planted clique larger than graph");
    const double allowance = C * std::pow(static_cast<double>(n), delta);
    for (uint64_t i = 0; i < num_seeds; ++i) {
        PlantedSeedResult r1;
        r1.seed = derive_seed(seed, i);
        Graph g = gen::gen_er(n, 0.5, r1.seed);
        if (rep.clique_size > 0) g = gen::plant_clique(g, rep.clique_size, r1.seed);
        r1.deviation1 =
            certify::assumption_deviation(g, 0.5, 1, certify::DeviationMode::exact).value;
        r1.deviation2 =
            certify::assumption_deviation(g, 0.5, 2, certify::DeviationMode::exact).value;
        r1.allowance = allowance;
        r1.pass = r1.deviation1 < allowance && r1.deviation2 < allowance;
        rep.passes += r1.pass ? 1 : 0;
        rep.seeds.push_back(r1);
    }
    return rep;
}

} // namespace prg::clique
