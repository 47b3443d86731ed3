#include "ergm.hpp"

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace prg::ergm {

uint64_t triangle_count(const Graph& g) {
    const uint64_t n = g.vertex_count();
    uint64_t chunks = std::min<uint64_t>(std::max<uint64_t>(n / 64, 1), 64);
    std::vector<uint64_t> partial(chunks, 0);
    parallel_for_chunks(chunks, [&](uint64_t chunk) {
        auto range = chunk_range(n, chunks, chunk);
        uint64_t acc = 0;
        for (uint64_t u = range.begin; u < range.end; ++u)
            for (uint64_t v = u + 1; v < n; ++v)
                if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                    acc += g.codegree2(static_cast<Vertex>(u), static_cast<Vertex>(v));
        partial[chunk] = acc;
    });
    uint64_t sum = 0;
    for (uint64_t p : partial) sum += p;
    return sum / 3;
}

double hamiltonian(const Graph& g, const ErgmModel& m) {
    return m.beta * static_cast<double>(g.edge_count()) +
           m.gamma / static_cast<double>(g.vertex_count()) *
               static_cast<double>(triangle_count(g));
}

double phi_beta(const ErgmModel& m, double x) {
    const double a = m.beta + m.gamma * x;
    if (a >= 0) return 1.0 / (1.0 + std::exp(-a));
    const double e = std::exp(a);
    return e / (1.0 + e);
}

double glauber_conditional(const ErgmModel& m, double l) {
    if (!(l >= 0.0 && l <= 1.0)) fail(Errc::invalid_parameter, "normalized co-degree outside [0,1]");
    return phi_beta(m, l);
}

FixedPointResult solve_fixed_point(const ErgmModel& m, uint64_t grid, double tol) {
    if (grid < 100) fail(Errc::invalid_parameter, "grid must have at least 100 points");
    if (!(tol > 0)) fail(Errc::invalid_parameter, "tolerance must be positive");
    auto psi = [&](double u) {
        const double f = phi_beta(m, u);
        return f * f - u;
    };
    FixedPointResult res;
    std::vector<double> roots_u;
    double prev_u = 0.0;
    double prev_v = psi(0.0); // = phi(0)^2 > 0
    for (uint64_t i = 1; i <= grid; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(grid);
        const double v = psi(u);
        if (v == 0.0) {
            roots_u.push_back(u);
        } else if ((prev_v > 0) != (v > 0)) {
            double lo = prev_u, hi = u, vlo = prev_v;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                const double vm = psi(mid);
                if (vm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((vm > 0) == (vlo > 0)) {
                    lo = mid;
                    vlo = vm;
                } else {
                    hi = mid;
                }
            }
            roots_u.push_back(0.5 * (lo + hi));
        }
        prev_u = u;
        prev_v = v;
    }
    // near-tangent roots closer than 10*tol collapse to one
    std::vector<double> merged;
    for (double u : roots_u)
        if (merged.empty() || u - merged.back() > 10 * tol)
            merged.push_back(u);
        else
            merged.back() = 0.5 * (merged.back() + u);

    bool boundary_slope = false;
    for (double u : merged) {
        double p = std::sqrt(u);
        // polish the fixed-point residual phi(p^2) - p down to rounding;
        // skipped near tangency where the derivative vanishes
        for (int it = 0; it < 4; ++it) {
            const double fp = phi_beta(m, p * p);
            const double deriv = 2.0 * p * m.gamma * fp * (1.0 - fp) - 1.0;
            if (std::abs(deriv) < 1e-6) break;
            const double step = (fp - p) / deriv;
            const double next = p - step;
            if (!(next > 0.0 && next < 1.0)) break;
            p = next;
        }
        const double f = phi_beta(m, p * p);
        const double slope = 2.0 * p * m.gamma * f * (1.0 - f);
        res.roots.push_back(p);
        res.slopes.push_back(slope);
        if (std::abs(slope - 1.0) <= tol) boundary_slope = true;
    }
    if (boundary_slope)
        res.regime = Regime::indeterminate;
    else if (res.roots.size() == 1 && res.slopes[0] < 1.0)
        res.regime = Regime::high_temperature;
    else
        res.regime = Regime::not_high_temperature;
    return res;
}

ConcentrationReport concentration_experiment(const ErgmModel& m, uint64_t n, uint64_t sweeps,
                                             uint64_t replicas, uint64_t seed) {
    if (n < 2) fail(Errc::invalid_parameter, "need n >= 2");
    ConcentrationReport rep;
    rep.model = m;
    rep.n = n;
    rep.sweeps = sweeps;
    auto fp = solve_fixed_point(m);
    rep.regime = fp.regime;
    // deviations are measured against the first root either way; the regime
    // flag carries the warning when it is not the high-temperature one
    rep.p_star = fp.roots.empty() ? 0.5 : fp.roots.front();
    rep.slope = fp.slopes.empty() ? 0.0 : fp.slopes.front();
    rep.replicas.resize(replicas);

    const double norm = std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(n)));
    for (uint64_t i = 0; i < replicas; ++i) {
        ConcentrationReplica& r = rep.replicas[i];
        r.seed = derive_seed(seed, i);
        Graph g = gen::gen_ergm(n, m.beta, m.gamma, sweeps, r.seed);
        const double dt = static_cast<double>(n) * rep.p_star;
        double dev1 = 0;
        for (uint64_t v = 0; v < n; ++v)
            dev1 = std::max(dev1,
                            std::abs(static_cast<double>(g.degree(static_cast<Vertex>(v))) - dt));
        const double ct = static_cast<double>(n) * rep.p_star * rep.p_star;
        double dev2 = 0;
        for (uint64_t u = 0; u < n; ++u)
            for (uint64_t v = u + 1; v < n; ++v)
                dev2 = std::max(dev2, std::abs(static_cast<double>(g.codegree2(
                                                   static_cast<Vertex>(u), static_cast<Vertex>(v))) -
                                               ct));
        r.max_degree_dev_norm = dev1 / norm;
        r.max_codegree_dev_norm = dev2 / norm;
        r.edge_density = 2.0 * static_cast<double>(g.edge_count()) /
                         (static_cast<double>(n) * static_cast<double>(n - 1));
    }
    return rep;
}

} // namespace prg::ergm
