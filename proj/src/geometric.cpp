#include "geometric.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace prg::geom {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;
constexpr double kTwoPi = 6.28318530717958647692;
} // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kSqrtHalf); }

namespace {

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(kTwoPi); }

// Acklam's rational approximation, then one Newton step through the cdf.
double quantile_initial(double u) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (u < plow) {
        const double q = std::sqrt(-2.0 * std::log(u));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (u > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - u));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = u - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

} // namespace

double normal_quantile(double u) {
    if (!(u > 0.0 && u < 1.0)) fail(Errc::invalid_parameter, "quantile needs u in (0,1)");
    double x = quantile_initial(u);
    for (int it = 0; it < 2; ++it) {
        const double err = normal_cdf(x) - u;
        const double pdf = normal_pdf(x);
        if (pdf <= 0) break;
        x -= err / pdf;
    }
    return x;
}

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0 && b > 0)) fail(Errc::invalid_parameter, "beta parameters must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    auto cont_frac = [](double aa, double bb, double xx) {
        constexpr int max_iter = 400;
        constexpr double eps = 1e-16;
        constexpr double tiny = 1e-300;
        double qab = aa + bb, qap = aa + 1.0, qam = aa - 1.0;
        double c = 1.0;
        double d = 1.0 - qab * xx / qap;
        if (std::abs(d) < tiny) d = tiny;
        d = 1.0 / d;
        double h = d;
        for (int m = 1; m <= max_iter; ++m) {
            const int m2 = 2 * m;
            double num = m * (bb - m) * xx / ((qam + m2) * (aa + m2));
            d = 1.0 + num * d;
            if (std::abs(d) < tiny) d = tiny;
            c = 1.0 + num / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            h *= d * c;
            num = -(aa + m) * (qab + m) * xx / ((aa + m2) * (qap + m2));
            d = 1.0 + num * d;
            if (std::abs(d) < tiny) d = tiny;
            c = 1.0 + num / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            const double del = d * c;
            h *= del;
            if (std::abs(del - 1.0) < eps) break;
        }
        return h;
    };
    if (x < (a + 1.0) / (a + b + 2.0)) return std::exp(ln_front) * cont_frac(a, b, x) / a;
    return 1.0 - std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          b * std::log1p(-x) + a * std::log(x)) *
                     cont_frac(b, a, 1.0 - x) / b;
}

namespace {

// inverse of I_x(a,b) by bisection; I is monotone in x so this is safe
double beta_quantile(double target, double a, double b) {
    if (target <= 0.0) return 0.0;
    if (target >= 1.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (incomplete_beta(a, b, mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

ThresholdSpec threshold_tpd(double p, uint64_t d) {
    if (!(p > 0.0 && p <= 0.5)) fail(Errc::invalid_parameter, "p must be in (0, 1/2]");
    if (d < 2) fail(Errc::invalid_parameter, "dimension must be at least 2");
    ThresholdSpec spec;
    spec.p = p;
    spec.d = d;
    if (p == 0.5) {
        spec.t = 0.0;
        return spec;
    }
    const double x = beta_quantile(1.0 - 2.0 * p, 0.5, (static_cast<double>(d) - 1.0) / 2.0);
    spec.t = std::sqrt(x);
    return spec;
}

DgluResult dglu_check(double p, uint64_t d, double kappa_star) {
    if (!(p > 0.0 && p <= 0.5)) fail(Errc::invalid_parameter, "p must be in (0, 1/2]");
    if (kappa_star < 0) fail(Errc::invalid_parameter, "kappa* must be nonnegative");
    const double dmin = std::max(4.0 / (p * p), 27.0);
    if (static_cast<double>(d) < dmin)
        fail(Errc::precondition_failed, "requires d >= max(4/p^2, 27)");
    DgluResult res;
    const double t = threshold_tpd(p, d).t;
    res.lhs = std::abs(t * std::sqrt(static_cast<double>(d)) - normal_quantile(1.0 - p));
    const double scale = std::sqrt(std::log(static_cast<double>(d)) / static_cast<double>(d));
    res.rhs = kappa_star * scale;
    res.kappa_fit = scale > 0 ? res.lhs / scale : 0.0;
    res.holds = res.lhs <= res.rhs;
    return res;
}

double tau_n(uint64_t n, uint64_t d, double kappa_p) {
    if (n < 2 || d < 2) fail(Errc::invalid_parameter, "need n, d >= 2");
    if (!(kappa_p > 0)) fail(Errc::invalid_parameter, "kappa_p must be positive");
    const double ln_max = std::max(std::log(static_cast<double>(n)), std::log(static_cast<double>(d)));
    return kappa_p * (std::sqrt(ln_max / static_cast<double>(d)) +
                      1.0 / (static_cast<double>(n) * static_cast<double>(n)));
}

WillinkBounds willink_bounds(double h, double rho) {
    if (!(h > 0)) fail(Errc::invalid_parameter, "h must be positive");
    if (!(rho >= 0.0 && rho < 1.0)) fail(Errc::invalid_parameter, "rho must be in [0,1)");
    WillinkBounds wb;
    wb.theta = std::sqrt((1.0 - rho) / (1.0 + rho));
    const double base = normal_cdf(-h) * normal_cdf(-wb.theta * h);
    wb.lower = base;
    wb.upper = (1.0 + rho) * base;
    return wb;
}

WillinkBounds negative_rho_tail_bounds(double h, double rho) {
    if (!(h > 0)) fail(Errc::invalid_parameter, "h must be positive");
    if (!(rho > -1.0 && rho < 0.0)) fail(Errc::invalid_parameter, "rho must be in (-1,0)");
    const double theta = std::sqrt((1.0 - rho) / (1.0 + rho));
    const double base = 2.0 * normal_cdf(-h) * normal_cdf(-theta * h);
    WillinkBounds inner = willink_bounds(theta * h, -rho);
    WillinkBounds wb;
    wb.theta = theta;
    wb.lower = base - inner.upper;
    wb.upper = base - inner.lower;
    return wb;
}

McEstimate bivariate_tail_mc(double h, double rho, uint64_t samples, uint64_t seed) {
    if (samples < 1000) fail(Errc::invalid_parameter, "need at least 1000 samples");
    if (!(rho > -1.0 && rho < 1.0)) fail(Errc::invalid_parameter, "|rho| must be below 1");
    const double mix = std::sqrt(1.0 - rho * rho);
    const uint64_t chunk_size = 1 << 16;
    const uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<uint64_t> partial(chunks, 0);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        Rng rng(derive_seed(seed, chunk));
        uint64_t begin = chunk * chunk_size;
        uint64_t end = std::min(begin + chunk_size, samples);
        uint64_t hits = 0;
        for (uint64_t i = begin; i < end; ++i) {
            const double z = rng.next_gaussian();
            const double zp = rho * z + mix * rng.next_gaussian();
            if (z >= h && zp >= h) ++hits;
        }
        partial[chunk] = hits;
    });
    uint64_t hits = 0;
    for (uint64_t p : partial) hits += p;
    McEstimate est;
    est.samples = samples;
    est.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
    return est;
}

NormCheckResult gaussian_norm_check(uint64_t d, uint64_t samples, uint64_t seed, double epsilon) {
    if (d < 2) fail(Errc::invalid_parameter, "dimension must be at least 2");
    NormCheckResult res;
    res.epsilon = epsilon;
    if (samples == 0) {
        res.vacuous = true;
        res.holds = true;
        return res;
    }
    const double sqrt_d = std::sqrt(static_cast<double>(d));
    const double margin = epsilon + 0.5 / sqrt_d;
    const uint64_t chunk_size = 1024;
    const uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<uint64_t> partial(chunks, 0);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        Rng rng(derive_seed(seed, chunk));
        uint64_t begin = chunk * chunk_size;
        uint64_t end = std::min(begin + chunk_size, samples);
        uint64_t fails = 0;
        for (uint64_t i = begin; i < end; ++i) {
            double norm2 = 0;
            for (uint64_t c = 0; c < d; ++c) {
                const double z = rng.next_gaussian();
                norm2 += z * z;
            }
            if (std::abs(std::sqrt(norm2) - sqrt_d) > margin) ++fails;
        }
        partial[chunk] = fails;
    });
    uint64_t fails = 0;
    for (uint64_t p : partial) fails += p;
    res.fail_frequency = static_cast<double>(fails) / static_cast<double>(samples);
    const double p0 = 2.0 * std::exp(-epsilon * epsilon / 2.0);
    const double mc = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(samples));
    res.bound = p0 + 5.0 * mc;
    res.holds = res.fail_frequency <= res.bound;
    return res;
}

McEstimate edge_probability_mc(double p, uint64_t d, uint64_t pairs, uint64_t seed) {
    if (pairs < 1000) fail(Errc::invalid_parameter, "need at least 1000 pairs");
    const double t = threshold_tpd(p, d).t;
    const uint64_t chunk_size = 4096;
    const uint64_t chunks = (pairs + chunk_size - 1) / chunk_size;
    std::vector<uint64_t> partial(chunks, 0);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        Rng rng(derive_seed(seed, chunk));
        uint64_t begin = chunk * chunk_size;
        uint64_t end = std::min(begin + chunk_size, pairs);
        uint64_t hits = 0;
        for (uint64_t i = begin; i < end; ++i) {
            double dot = 0, na = 0, nb = 0;
            for (uint64_t c = 0; c < d; ++c) {
                const double x = rng.next_gaussian();
                const double y = rng.next_gaussian();
                dot += x * y;
                na += x * x;
                nb += y * y;
            }
            if (dot / std::sqrt(na * nb) >= t) ++hits;
        }
        partial[chunk] = hits;
    });
    uint64_t hits = 0;
    for (uint64_t c : partial) hits += c;
    McEstimate est;
    est.samples = pairs;
    est.estimate = static_cast<double>(hits) / static_cast<double>(pairs);
    est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(pairs));
    return est;
}

} // namespace prg::geom
