#include "certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "parallel.hpp"
#include "rng.hpp"

namespace prg::certify {

namespace {

double max_deviation_order1(const Graph& g, double p) {
    const double target = static_cast<double>(g.vertex_count()) * p;
    double dev = 0;
    for (uint64_t v = 0; v < g.vertex_count(); ++v)
        dev = std::max(dev, std::abs(static_cast<double>(g.degree(static_cast<Vertex>(v))) - target));
    return dev;
}

double max_deviation_order2(const Graph& g, double p, uint64_t* scanned) {
    const uint64_t n = g.vertex_count();
    const double target = static_cast<double>(n) * p * p;
    uint64_t chunks = std::min<uint64_t>(std::max<uint64_t>(n / 64, 1), 64);
    std::vector<double> partial(chunks, 0.0);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        auto range = chunk_range(n, chunks, chunk);
        double dev = 0;
        for (uint64_t u = range.begin; u < range.end; ++u)
            for (uint64_t v = u + 1; v < n; ++v)
                dev = std::max(dev, std::abs(static_cast<double>(g.codegree2(
                                                 static_cast<Vertex>(u), static_cast<Vertex>(v))) -
                                             target));
        partial[chunk] = dev;
    });
    *scanned = n * (n - 1) / 2;
    double dev = 0;
    for (double d : partial) dev = std::max(dev, d);
    return dev;
}

double max_deviation_exact_k(const Graph& g, double p, int k, uint64_t* scanned) {
    const uint64_t n = g.vertex_count();
    const double target = static_cast<double>(n) * std::pow(p, k);
    uint64_t chunks = std::min<uint64_t>(std::max<uint64_t>(n / 16, 1), 128);
    std::vector<double> partial(chunks, 0.0);
    std::vector<uint64_t> counts(chunks, 0);
    const size_t words = g.row_words();
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        auto range = chunk_range(n, chunks, chunk);
        double dev = 0;
        uint64_t cnt = 0;
        std::vector<uint64_t> acc(words);
        for (uint64_t a = range.begin; a < range.end; ++a) {
            const uint64_t* ra = g.row(static_cast<Vertex>(a));
            for (uint64_t b = a + 1; b < n; ++b) {
                const uint64_t* rb = g.row(static_cast<Vertex>(b));
                for (size_t w = 0; w < words; ++w) acc[w] = ra[w] & rb[w];
                for (uint64_t c = b + 1; c < n; ++c) {
                    const uint64_t* rc = g.row(static_cast<Vertex>(c));
                    if (k == 3) {
                        uint64_t common = 0;
                        for (size_t w = 0; w < words; ++w)
                            common += static_cast<uint64_t>(__builtin_popcountll(acc[w] & rc[w]));
                        dev = std::max(dev, std::abs(static_cast<double>(common) - target));
                        ++cnt;
                    } else {
                        for (uint64_t d = c + 1; d < n; ++d) {
                            const uint64_t* rd = g.row(static_cast<Vertex>(d));
                            uint64_t common = 0;
                            for (size_t w = 0; w < words; ++w)
                                common += static_cast<uint64_t>(
                                    __builtin_popcountll(acc[w] & rc[w] & rd[w]));
                            dev = std::max(dev, std::abs(static_cast<double>(common) - target));
                            ++cnt;
                        }
                    }
                }
            }
        }
        partial[chunk] = dev;
        counts[chunk] = cnt;
    });
    double dev = 0;
    *scanned = 0;
    for (uint64_t c = 0; c < chunks; ++c) {
        dev = std::max(dev, partial[c]);
        *scanned += counts[c];
    }
    return dev;
}

double max_deviation_sampled_k(const Graph& g, double p, int k, uint64_t samples, uint64_t seed,
                               uint64_t* scanned) {
    const uint64_t n = g.vertex_count();
    const double target = static_cast<double>(n) * std::pow(p, k);
    const uint64_t chunk_size = 65536;
    const uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<double> partial(chunks, 0.0);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        Rng rng(derive_seed(seed, chunk));
        uint64_t begin = chunk * chunk_size;
        uint64_t end = std::min(begin + chunk_size, samples);
        double dev = 0;
        std::array<Vertex, 4> vs{};
        for (uint64_t i = begin; i < end; ++i) {
            int filled = 0;
            while (filled < k) {
                Vertex v = static_cast<Vertex>(rng.next_below(n));
                bool dup = false;
                for (int q = 0; q < filled; ++q)
                    if (vs[q] == v) dup = true;
                if (!dup) vs[filled++] = v;
            }
            uint64_t common = g.codegree(std::span<const Vertex>(vs.data(), static_cast<size_t>(k)));
            dev = std::max(dev, std::abs(static_cast<double>(common) - target));
        }
        partial[chunk] = dev;
    });
    *scanned = samples;
    double dev = 0;
    for (double d : partial) dev = std::max(dev, d);
    return dev;
}

} // namespace

DeviationResult assumption_deviation(const Graph& g, double p, int order, DeviationMode mode,
                                     uint64_t sample_tuples, uint64_t seed) {
    if (!(p > 0.0 && p < 1.0)) fail(Errc::invalid_parameter, "p must be in (0,1)");
    if (order < 1 || order > 4) fail(Errc::invalid_arity, "order must be in 1..4");
    DeviationResult res;
    const uint64_t n = g.vertex_count();
    if (static_cast<uint64_t>(order) > n)
        fail(Errc::invalid_parameter, "order exceeds vertex count");
    if (order == 1) {
        res.value = max_deviation_order1(g, p);
        res.tuples_scanned = n;
        return res;
    }
    if (order == 2) {
        res.value = max_deviation_order2(g, p, &res.tuples_scanned);
        return res;
    }
    if (mode == DeviationMode::exact) {
        res.value = max_deviation_exact_k(g, p, order, &res.tuples_scanned);
        return res;
    }
    if (sample_tuples < 1) fail(Errc::invalid_parameter, "need at least one sampled tuple");
    res.value = max_deviation_sampled_k(g, p, order, sample_tuples, seed, &res.tuples_scanned);
    res.sampled = true;
    return res;
}

double estimate_p(const Graph& g) {
    const uint64_t n = g.vertex_count();
    if (n < 2) fail(Errc::invalid_parameter, "graph too small to estimate density");
    const uint64_t pairs = n * (n - 1) / 2;
    if (g.edge_count() == 0 || g.edge_count() == pairs)
        fail(Errc::degenerate_density, "empty or complete graph: supply p explicitly");
    return 2.0 * static_cast<double>(g.edge_count()) /
           (static_cast<double>(n) * static_cast<double>(n - 1));
}

int admissible_motif_size_base(uint64_t n, double log_base, double delta, double c0_prime,
                               double exponent_cap) {
    if (n < 3) fail(Errc::invalid_parameter, "need n >= 3");
    if (!(delta > 0.0 && delta < 1.0)) fail(Errc::invalid_parameter, "delta must be in (0,1)");
    if (!(log_base > 0.0) || !std::isfinite(log_base) || !std::isfinite(c0_prime))
        fail(Errc::invalid_parameter, "bad admissible-size parameters");
    const double ln_n = std::log(static_cast<double>(n));
    const double exponent = std::min(1.0 - delta, exponent_cap);
    const double s = exponent * ln_n / log_base - c0_prime * std::log(ln_n);
    if (s < 2.0) return 2;
    return static_cast<int>(std::floor(s));
}

int admissible_motif_size(uint64_t n, double p, double delta, double c0_prime,
                          AdmissibleMode mode) {
    if (!(p > 0.0 && p < 1.0)) fail(Errc::invalid_parameter, "p must be in (0,1)");
    const double gamma_p = std::max(1.0 / p, 1.0 / (1.0 - p));
    const double cap = mode == AdmissibleMode::a12 ? 0.5 : 2.0 / 3.0;
    return admissible_motif_size_base(n, std::log(gamma_p), delta, c0_prime, cap);
}

Certificate certify(const Graph& g, const CertifyOptions& opts) {
    if (g.vertex_count() < 3) fail(Errc::invalid_parameter, "graph too small to certify");
    if (opts.max_order < 1 || opts.max_order > 4)
        fail(Errc::invalid_arity, "max_order must be in 1..4");
    Certificate cert;
    cert.n = g.vertex_count();
    cert.edge_count = g.edge_count();
    cert.C = opts.C;
    cert.c0_prime = opts.c0_prime;
    cert.max_order = opts.max_order;
    if (opts.assume_p) {
        cert.p_hat = *opts.assume_p;
        cert.p_assumed = true;
        if (!(cert.p_hat > 0.0 && cert.p_hat < 1.0))
            fail(Errc::invalid_parameter, "assumed p must be in (0,1)");
    } else {
        cert.p_hat = estimate_p(g);
    }

    const double ln_n = std::log(static_cast<double>(cert.n));
    // tuples need `order` distinct vertices plus room for common neighbors
    const int scan_max =
        static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(opts.max_order), cert.n - 1));
    cert.max_order = scan_max;
    for (int order = 1; order <= scan_max; ++order) {
        DeviationMode mode = DeviationMode::exact;
        if (order >= 3 && cert.n > opts.exact_tuple_vertex_cap) mode = DeviationMode::sampled;
        auto res = assumption_deviation(g, cert.p_hat, order, mode, opts.sample_tuples,
                                        derive_seed(opts.seed, static_cast<uint64_t>(order)));
        cert.deviation[order] = res.value;
        cert.deviation_sampled[order] = res.sampled;
        cert.delta_hat[order] =
            std::clamp(std::log(std::max(res.value, 1.0)) / ln_n, 0.0, 1.0);
    }

    double delta12 = std::max(cert.delta_hat[1], cert.delta_hat[2]);
    double delta14 = delta12;
    for (int order = 3; order <= scan_max; ++order)
        delta14 = std::max(delta14, cert.delta_hat[order]);
    // the size bound needs delta strictly inside (0,1)
    auto clip_delta = [](double d) { return std::clamp(d, 1e-9, 1.0 - 1e-9); };
    delta12 = clip_delta(delta12);
    delta14 = clip_delta(delta14);
    cert.s_max_a12 = admissible_motif_size(cert.n, cert.p_hat, delta12, opts.c0_prime,
                                           AdmissibleMode::a12);
    cert.s_max_a14 = admissible_motif_size(cert.n, cert.p_hat,
                                           scan_max >= 3 ? delta14 : delta12,
                                           opts.c0_prime, AdmissibleMode::a14);
    cert.s_max_clique = admissible_motif_size_base(cert.n, std::log(1.0 / cert.p_hat), delta12,
                                                   opts.c0_prime, 0.5);
    cert.s_max_independent = admissible_motif_size_base(
        cert.n, std::log(1.0 / (1.0 - cert.p_hat)), delta12, opts.c0_prime, 0.5);
    return cert;
}

} // namespace prg::certify
