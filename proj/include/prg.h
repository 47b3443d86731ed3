/* prg: pseudo-random graph certification and analysis, plain C99 API.
 *
 * Every function returns a prg_status; results travel through out-params.
 * Opaque handles own their memory and are released with the matching
 * _free call. Report functions hand back heap JSON strings released with
 * prg_string_free. prg_last_error() returns a thread-local message for the
 * most recent failure on the calling thread.
 */
#ifndef PRG_H
#define PRG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t prg_status;

enum {
    PRG_OK = 0,
    PRG_ERR_INVALID_PARAMETER = 1,
    PRG_ERR_INVALID_VERTEX = 2,
    PRG_ERR_INVALID_EDGE = 3,
    PRG_ERR_INVALID_TUPLE = 4,
    PRG_ERR_INVALID_ARITY = 5,
    PRG_ERR_SIZE_UNSUPPORTED = 6,
    PRG_ERR_BUDGET_EXCEEDED = 7,
    PRG_ERR_DEGENERATE_DENSITY = 8,
    PRG_ERR_PRECONDITION = 9,
    PRG_ERR_IO = 10,
    PRG_ERR_INTERNAL = 11
};

enum { PRG_FORMAT_PRGB = 0, PRG_FORMAT_EDGE_LIST = 1 };

typedef struct prg_graph prg_graph;

const char* prg_status_name(prg_status status);
const char* prg_last_error(void);
const char* prg_version(void);

/* 0 restores the hardware default; otherwise caps the worker pool. */
void prg_set_threads(uint32_t threads);

/* ---- graph construction ---- */

prg_status prg_graph_build(uint64_t n, const uint64_t* edges_flat, size_t edge_count,
                           prg_graph** out);
prg_status prg_graph_gen_er(uint64_t n, double p, uint64_t seed, prg_graph** out);
prg_status prg_graph_gen_regular(uint64_t n, uint64_t d, uint64_t switches, uint64_t seed,
                                 prg_graph** out);
prg_status prg_graph_gen_binary(uint32_t k, prg_graph** out);
prg_status prg_graph_gen_geometric(uint64_t n, uint64_t d, double p, uint64_t seed,
                                   prg_graph** out);
prg_status prg_graph_gen_ergm(uint64_t n, double beta, double gamma, uint64_t sweeps,
                              uint64_t seed, prg_graph** out);
prg_status prg_graph_plant_clique(const prg_graph* g, uint64_t r, uint64_t seed, prg_graph** out);
void prg_graph_free(prg_graph* g);

/* ---- graph queries ---- */

uint64_t prg_graph_vertex_count(const prg_graph* g);
uint64_t prg_graph_edge_count(const prg_graph* g);
int prg_graph_has_edge(const prg_graph* g, uint64_t u, uint64_t v);
prg_status prg_graph_degree(const prg_graph* g, uint64_t v, uint64_t* out);
prg_status prg_graph_codegree(const prg_graph* g, const uint64_t* vertices, size_t k,
                              uint64_t* out);

/* ---- file I/O (PRGB binary or "u v" edge-list text) ---- */

prg_status prg_graph_write(const prg_graph* g, const char* path, int format);
prg_status prg_graph_read(const char* path, prg_graph** out);

/* ---- analysis reports (JSON strings) ---- */

typedef struct {
    double assume_p;    /* density; ignored unless has_assume_p */
    int has_assume_p;
    double C;           /* deviation constant, default 3 */
    double c0_prime;    /* log-log slack, default 1 */
    int max_order;      /* 1..4, default 4 */
    uint64_t sample_tuples; /* sampled order-3/4 scans, default 1000000 */
    uint64_t seed;
} prg_certify_options;

void prg_certify_options_init(prg_certify_options* opts);
prg_status prg_certify_json(const prg_graph* g, const prg_certify_options* opts, char** json_out);

typedef struct {
    double p;        /* ER reference density; <= 0 means estimate from g */
    int s;
    int sampled;     /* 0 exact, 1 sampled */
    uint64_t samples;
    uint64_t seed;
} prg_census_options;

void prg_census_options_init(prg_census_options* opts);
prg_status prg_census_json(const prg_graph* g, const prg_census_options* opts, char** json_out);

prg_status prg_diag_json(const prg_graph* g, double p, int r_max, double c_star, char** json_out);
prg_status prg_ergm_solve_json(double beta, double gamma, uint64_t grid, double tol,
                               char** json_out);
prg_status prg_ergm_experiment_json(double beta, double gamma, uint64_t n, uint64_t sweeps,
                                    uint64_t replicas, uint64_t seed, char** json_out);
prg_status prg_geom_check_json(uint64_t seed, uint64_t mc_samples, char** json_out);
prg_status prg_clique_regime_json(uint64_t n, uint64_t r, char** json_out);
prg_status prg_clique_experiment_json(uint64_t n, double epsilon, double c, double delta,
                                      uint64_t num_seeds, uint64_t seed, char** json_out);

/* ---- scalar helpers ---- */

prg_status prg_threshold_tpd(double p, uint64_t d, double* t_out);
prg_status prg_normal_cdf(double x, double* out);
prg_status prg_normal_quantile(double u, double* out);
prg_status prg_admissible_motif_size(uint64_t n, double p, double delta, double c0_prime,
                                     int use_a14, int* out);
prg_status prg_binary_independent_count(uint32_t k, uint32_t r, char** decimal_out);

void prg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PRG_H */
