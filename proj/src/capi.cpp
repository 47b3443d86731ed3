#include "prg.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "certify.hpp"
#include "clique_poisson.hpp"
#include "diagnostics.hpp"
#include "ergm.hpp"
#include "generators.hpp"
#include "geometric.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "motif.hpp"
#include "parallel.hpp"
#include "reports.hpp"

using namespace prg;

struct prg_graph {
    Graph g;
};

namespace {

thread_local std::string t_last_error;

prg_status status_of(Errc code) {
    switch (code) {
        case Errc::ok: return PRG_OK;
        case Errc::invalid_parameter: return PRG_ERR_INVALID_PARAMETER;
        case Errc::invalid_vertex: return PRG_ERR_INVALID_VERTEX;
        case Errc::invalid_edge: return PRG_ERR_INVALID_EDGE;
        case Errc::invalid_tuple: return PRG_ERR_INVALID_TUPLE;
        case Errc::invalid_arity: return PRG_ERR_INVALID_ARITY;
        case Errc::size_unsupported: return PRG_ERR_SIZE_UNSUPPORTED;
        case Errc::budget_exceeded: return PRG_ERR_BUDGET_EXCEEDED;
        case Errc::degenerate_density: return PRG_ERR_DEGENERATE_DENSITY;
        case Errc::precondition_failed: return PRG_ERR_PRECONDITION;
        case Errc::io_error: return PRG_ERR_IO;
    }
    return PRG_ERR_INTERNAL;
}

template <typename Fn>
prg_status guarded(Fn&& fn) {
    try {
        fn();
        return PRG_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return PRG_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return PRG_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

prg_status make_graph(prg_graph** out, Graph g) {
    *out = new prg_graph{std::move(g)};
    return PRG_OK;
}

} // namespace

extern "C" {

const char* prg_status_name(prg_status status) {
    switch (status) {
        case PRG_OK: return "ok";
        case PRG_ERR_INVALID_PARAMETER: return "InvalidParameter";
        case PRG_ERR_INVALID_VERTEX: return "InvalidVertex";
        case PRG_ERR_INVALID_EDGE: return "InvalidEdge";
        case PRG_ERR_INVALID_TUPLE: return "InvalidTuple";
        case PRG_ERR_INVALID_ARITY: return "InvalidArity";
        case PRG_ERR_SIZE_UNSUPPORTED: return "SizeUnsupported";
        case PRG_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
        case PRG_ERR_DEGENERATE_DENSITY: return "DegenerateDensity";
        case PRG_ERR_PRECONDITION: return "PreconditionFailed";
        case PRG_ERR_IO: return "IoError";
        default: return "InternalError";
    }
}

const char* prg_last_error(void) { return t_last_error.c_str(); }

const char* prg_version(void) { return reports::version(); }

void prg_set_threads(uint32_t threads) { set_thread_limit(threads); }

prg_status prg_graph_build(uint64_t n, const uint64_t* edges_flat, size_t edge_count,
                           prg_graph** out) {
    if (!out || (edge_count > 0 && !edges_flat)) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        std::vector<std::pair<Vertex, Vertex>> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) {
            uint64_t u = edges_flat[2 * i], v = edges_flat[2 * i + 1];
            if (u >= Graph::max_vertices || v >= Graph::max_vertices)
                fail(Errc::invalid_vertex, "edge endpoint out of range");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        make_graph(out, Graph::from_edges(n, edges));
    });
}

prg_status prg_graph_gen_er(uint64_t n, double p, uint64_t seed, prg_graph** out) {
    if (!out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] { make_graph(out, gen::gen_er(n, p, seed)); });
}

prg_status prg_graph_gen_regular(uint64_t n, uint64_t d, uint64_t switches, uint64_t seed,
                                 prg_graph** out) {
    if (!out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] { make_graph(out, gen::gen_regular_switch(n, d, switches, seed)); });
}

prg_status prg_graph_gen_binary(uint32_t k, prg_graph** out) {
    if (!out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] { make_graph(out, gen::gen_binary(k)); });
}

prg_status prg_graph_gen_geometric(uint64_t n, uint64_t d, double p, uint64_t seed,
                                   prg_graph** out) {
    if (!out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] { make_graph(out, gen::gen_geometric(n, d, p, seed)); });
}

prg_status prg_graph_gen_ergm(uint64_t n, double beta, double gamma, uint64_t sweeps,
                              uint64_t seed, prg_graph** out) {
    if (!out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] { make_graph(out, gen::gen_ergm(n, beta, gamma, sweeps, seed)); });
}

prg_status prg_graph_plant_clique(const prg_graph* g, uint64_t r, uint64_t seed, prg_graph** out) {
    if (!g || !out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] { make_graph(out, gen::plant_clique(g->g, r, seed)); });
}

void prg_graph_free(prg_graph* g) { delete g; }

uint64_t prg_graph_vertex_count(const prg_graph* g) { return g ? g->g.vertex_count() : 0; }

uint64_t prg_graph_edge_count(const prg_graph* g) { return g ? g->g.edge_count() : 0; }

int prg_graph_has_edge(const prg_graph* g, uint64_t u, uint64_t v) {
    if (!g || u >= g->g.vertex_count() || v >= g->g.vertex_count()) return 0;
    return g->g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)) ? 1 : 0;
}

prg_status prg_graph_degree(const prg_graph* g, uint64_t v, uint64_t* out) {
    if (!g || !out) return PRG_ERR_INVALID_PARAMETER;
    if (v >= g->g.vertex_count()) return PRG_ERR_INVALID_VERTEX;
    *out = g->g.degree(static_cast<Vertex>(v));
    return PRG_OK;
}

prg_status prg_graph_codegree(const prg_graph* g, const uint64_t* vertices, size_t k,
                              uint64_t* out) {
    if (!g || !vertices || !out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        std::vector<Vertex> vs(k);
        for (size_t i = 0; i < k; ++i) {
            if (vertices[i] >= g->g.vertex_count()) fail(Errc::invalid_vertex, "vertex out of range");
            vs[i] = static_cast<Vertex>(vertices[i]);
        }
        *out = g->g.codegree(vs);
    });
}

prg_status prg_graph_write(const prg_graph* g, const char* path, int format) {
    if (!g || !path) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        write_graph(g->g, path,
                    format == PRG_FORMAT_EDGE_LIST ? GraphFormat::edge_list : GraphFormat::prgb);
    });
}

prg_status prg_graph_read(const char* path, prg_graph** out) {
    if (!path || !out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] { make_graph(out, read_graph(path)); });
}

void prg_certify_options_init(prg_certify_options* opts) {
    if (!opts) return;
    opts->assume_p = 0;
    opts->has_assume_p = 0;
    opts->C = 3.0;
    opts->c0_prime = 1.0;
    opts->max_order = 4;
    opts->sample_tuples = 1000000;
    opts->seed = 0;
}

prg_status prg_certify_json(const prg_graph* g, const prg_certify_options* opts, char** json_out) {
    if (!g || !json_out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        certify::CertifyOptions co;
        if (opts) {
            if (opts->has_assume_p) co.assume_p = opts->assume_p;
            co.C = opts->C;
            co.c0_prime = opts->c0_prime;
            co.max_order = opts->max_order;
            co.sample_tuples = opts->sample_tuples;
            co.seed = opts->seed;
        }
        auto cert = certify::certify(g->g, co);
        *json_out = dup_string(reports::certificate_json(cert));
    });
}

void prg_census_options_init(prg_census_options* opts) {
    if (!opts) return;
    opts->p = 0;
    opts->s = 3;
    opts->sampled = 0;
    opts->samples = 100000;
    opts->seed = 0;
}

prg_status prg_census_json(const prg_graph* g, const prg_census_options* opts, char** json_out) {
    if (!g || !opts || !json_out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        double p = opts->p;
        if (p <= 0) p = certify::estimate_p(g->g);
        auto rep = motif::census_report(g->g, p, opts->s, opts->sampled != 0, opts->samples,
                                        opts->seed);
        *json_out = dup_string(reports::census_json(rep));
    });
}

prg_status prg_diag_json(const prg_graph* g, double p, int r_max, double c_star, char** json_out) {
    if (!g || !json_out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        if (r_max < 2) fail(Errc::invalid_parameter, "r_max must be at least 2");
        reports::DiagReport rep;
        rep.n = g->g.vertex_count();
        rep.p = p <= 0 ? certify::estimate_p(g->g) : p;
        rep.r_max = r_max;
        rep.c_star = c_star;
        for (int r = 2; r <= r_max; ++r)
            rep.error_functional.push_back(diag::error_functional(g->g, r, rep.p));
        for (int r = 2; r < r_max; ++r)
            rep.recursion_bounds.push_back(
                diag::recursion_bound(rep.error_functional[static_cast<size_t>(r - 2)], r,
                                      rep.n, c_star));
        diag::GoodSetParams params;
        params.p = rep.p;
        params.delta = 0.5;
        params.epsilon = diag::default_epsilon(rep.n, params.delta);
        VertexSet all = VertexSet::full(rep.n);
        rep.good_fraction_xi1 =
            static_cast<double>(diag::good_set(g->g, all, 1, params).count()) /
            static_cast<double>(rep.n);
        rep.good_fraction_xi0 =
            static_cast<double>(diag::good_set(g->g, all, 0, params).count()) /
            static_cast<double>(rep.n);
        *json_out = dup_string(reports::diag_json(rep));
    });
}

prg_status prg_ergm_solve_json(double beta, double gamma, uint64_t grid, double tol,
                               char** json_out) {
    if (!json_out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        ergm::ErgmModel m{beta, gamma};
        auto fp = ergm::solve_fixed_point(m, grid == 0 ? 10000 : grid, tol <= 0 ? 1e-12 : tol);
        *json_out = dup_string(reports::fixed_point_json(m, fp));
    });
}

prg_status prg_ergm_experiment_json(double beta, double gamma, uint64_t n, uint64_t sweeps,
                                    uint64_t replicas, uint64_t seed, char** json_out) {
    if (!json_out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        ergm::ErgmModel m{beta, gamma};
        auto rep = ergm::concentration_experiment(m, n, sweeps, replicas, seed);
        *json_out = dup_string(reports::ergm_experiment_json(rep));
    });
}

prg_status prg_geom_check_json(uint64_t seed, uint64_t mc_samples, char** json_out) {
    if (!json_out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        auto rep = reports::run_geom_check(seed, mc_samples == 0 ? 100000 : mc_samples);
        *json_out = dup_string(reports::geom_check_json(rep));
    });
}

prg_status prg_clique_regime_json(uint64_t n, uint64_t r, char** json_out) {
    if (!json_out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        auto cr = clique::clique_regime(n, r);
        *json_out = dup_string(reports::clique_regime_json(cr));
    });
}

prg_status prg_clique_experiment_json(uint64_t n, double epsilon, double c, double delta,
                                      uint64_t num_seeds, uint64_t seed, char** json_out) {
    if (!json_out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        auto rep = clique::planted_certification_experiment(n, epsilon, c, delta, num_seeds, seed);
        *json_out = dup_string(reports::planted_experiment_json(rep));
    });
}

prg_status prg_threshold_tpd(double p, uint64_t d, double* t_out) {
    if (!t_out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] { *t_out = geom::threshold_tpd(p, d).t; });
}

prg_status prg_normal_cdf(double x, double* out) {
    if (!out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] { *out = geom::normal_cdf(x); });
}

prg_status prg_normal_quantile(double u, double* out) {
    if (!out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] { *out = geom::normal_quantile(u); });
}

prg_status prg_admissible_motif_size(uint64_t n, double p, double delta, double c0_prime,
                                     int use_a14, int* out) {
    if (!out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        *out = certify::admissible_motif_size(
            n, p, delta, c0_prime,
            use_a14 ? certify::AdmissibleMode::a14 : certify::AdmissibleMode::a12);
    });
}

prg_status prg_binary_independent_count(uint32_t k, uint32_t r, char** decimal_out) {
    if (!decimal_out) return PRG_ERR_INVALID_PARAMETER;
    return guarded([&] {
        *decimal_out = dup_string(gen::binary_independent_count(k, r).to_string());
    });
}

void prg_string_free(char* s) { std::free(s); }

} // extern "C"
