// prg: command-line driver over the shared C API. Generators, certifier,
// census, diagnostics and the experiment batteries, with PRGB/edge-list
// file I/O and JSON or CSV reports.
//
// Exit codes: 0 success, 2 usage, 3 I/O failure, 4 budget exceeded.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prg.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(prg_status status) {
    std::string msg = std::string(prg_status_name(status)) + ": " + prg_last_error();
    int code = kExitUsage;
    if (status == PRG_ERR_IO) code = kExitIo;
    if (status == PRG_ERR_BUDGET_EXCEEDED) code = kExitBudget;
    throw CliError{code, msg};
}

void check(prg_status status) {
    if (status != PRG_OK) die(status);
}

struct GraphHandle {
    prg_graph* g = nullptr;
    ~GraphHandle() { prg_graph_free(g); }
};

struct JsonString {
    char* s = nullptr;
    ~JsonString() { prg_string_free(s); }
    json parse() const { return json::parse(s); }
};

// every report goes out wrapped in a header carrying the version and the
// full flag configuration of the run
void emit_report(const std::string& command, const json& config, const json& report,
                 const std::string& out_path, const std::string& format) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw CliError{kExitIo, "cannot open " + out_path + " for writing"};
        out = &file;
    }
    if (format == "csv") {
        *out << "# version=" << prg_version() << " command=" << command << "\n";
        *out << "# config=" << config.dump() << "\n";
        // arrays of objects become the table; everything else key,value rows
        std::string table_key;
        for (auto& [key, value] : report.items())
            if (value.is_array() && !value.empty() && value[0].is_object()) table_key = key;
        for (auto& [key, value] : report.items()) {
            if (key == table_key) continue;
            if (value.is_primitive()) *out << key << "," << value.dump() << "\n";
        }
        if (!table_key.empty()) {
            const auto& rows = report[table_key];
            *out << "table," << table_key << "\n";
            std::vector<std::string> cols;
            for (auto& [ck, cv] : rows[0].items())
                if (cv.is_primitive()) cols.push_back(ck);
            for (size_t i = 0; i < cols.size(); ++i) *out << (i ? "," : "") << cols[i];
            *out << "\n";
            for (const auto& row : rows) {
                for (size_t i = 0; i < cols.size(); ++i) {
                    if (i) *out << ",";
                    if (row.contains(cols[i])) *out << row[cols[i]].dump();
                }
                *out << "\n";
            }
        }
    } else {
        json wrapped{{"version", prg_version()},
                     {"command", command},
                     {"config", config},
                     {"report", report}};
        *out << wrapped.dump(2) << "\n";
    }
    if (!*out) throw CliError{kExitIo, "write failed"};
}

GraphHandle load_graph(const std::string& path) {
    GraphHandle h;
    check(prg_graph_read(path.c_str(), &h.g));
    return h;
}

void save_graph(prg_graph* g, const std::string& path, const std::string& format) {
    check(prg_graph_write(g, path.c_str(),
                          format == "edges" ? PRG_FORMAT_EDGE_LIST : PRG_FORMAT_PRGB));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-random graph toolkit: generators, certifier, census, diagnostics"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "cap the worker pool (default: PRG_THREADS or all cores)");

    std::string out_path;
    std::string report_format = "json";

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a graph and write it to a file");
    gen->require_subcommand(1);
    std::string gen_out, gen_format = "prgb";
    uint64_t g_n = 100, g_d = 2, g_switches = 0, g_sweeps = 200, g_seed = 0, g_r = 0;
    uint32_t g_k = 5;
    double g_p = 0.5, g_beta = 0, g_gamma = 0;
    bool switches_given = false;
    std::string plant_input;

    auto add_gen_common = [&](CLI::App* sc) {
        sc->add_option("-o,--out", gen_out, "output path")->required();
        sc->add_option("--format", gen_format, "prgb|edges")
            ->check(CLI::IsMember({"prgb", "edges"}));
    };
    auto* gen_er = gen->add_subcommand("er", "Erdos-Renyi G(n,p)");
    gen_er->add_option("--n", g_n, "vertices")->required();
    gen_er->add_option("--p", g_p, "edge probability")->required();
    gen_er->add_option("--seed", g_seed, "seed");
    add_gen_common(gen_er);

    auto* gen_reg = gen->add_subcommand("regular", "switch-chain d-regular graph");
    gen_reg->add_option("--n", g_n, "vertices")->required();
    gen_reg->add_option("--d", g_d, "degree")->required();
    gen_reg->add_option("--switches", g_switches, "double-edge switch attempts (default 10 n d)")
        ->each([&](const std::string&) { switches_given = true; });
    gen_reg->add_option("--seed", g_seed, "seed");
    add_gen_common(gen_reg);

    auto* gen_bin = gen->add_subcommand("binary", "GF(2) binary graph for odd k");
    gen_bin->add_option("--k", g_k, "odd k >= 3")->required();
    add_gen_common(gen_bin);

    auto* gen_geom = gen->add_subcommand("geom", "spherical geometric graph G(n,d,p)");
    gen_geom->add_option("--n", g_n, "vertices")->required();
    gen_geom->add_option("--d", g_d, "dimension")->required();
    gen_geom->add_option("--p", g_p, "edge probability in (0,1/2]")->required();
    gen_geom->add_option("--seed", g_seed, "seed");
    add_gen_common(gen_geom);

    auto* gen_ergm = gen->add_subcommand("ergm", "edge-triangle ERGM via Glauber dynamics");
    gen_ergm->add_option("--n", g_n, "vertices")->required();
    gen_ergm->add_option("--beta", g_beta, "edge weight")->required();
    gen_ergm->add_option("--gamma", g_gamma, "triangle weight")->required();
    gen_ergm->add_option("--sweeps", g_sweeps, "Glauber sweeps");
    gen_ergm->add_option("--seed", g_seed, "seed");
    add_gen_common(gen_ergm);

    auto* gen_plant = gen->add_subcommand("plant", "plant a clique into an existing graph");
    gen_plant->add_option("-i,--input", plant_input, "input graph")->required();
    gen_plant->add_option("--r", g_r, "clique size")->required();
    gen_plant->add_option("--seed", g_seed, "seed");
    add_gen_common(gen_plant);

    // ---- certify ----
    auto* cert = app.add_subcommand("certify", "degree/co-degree pseudo-randomness certificate");
    std::string cert_input;
    double assume_p = -1, cert_C = 3.0, cert_c0 = 1.0;
    int cert_orders = 4;
    uint64_t cert_samples = 1000000, cert_seed = 0;
    cert->add_option("-i,--input", cert_input, "graph file")->required();
    cert->add_option("--assume-p", assume_p, "override the density estimate");
    cert->add_option("--C", cert_C, "deviation constant");
    cert->add_option("--C0-prime", cert_c0, "log-log slack constant");
    cert->add_option("--orders", cert_orders, "highest co-degree order to scan (1-4)");
    cert->add_option("--sample-tuples", cert_samples, "sampled tuples for orders 3-4");
    cert->add_option("--seed", cert_seed, "seed for sampled scans");
    cert->add_option("--out", out_path, "report path (default stdout)");
    cert->add_option("--report-format", report_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- census ----
    auto* census = app.add_subcommand("census", "induced motif census against ER expectations");
    std::string census_input, census_mode = "exact";
    double census_p = -1;
    int census_s = 3;
    uint64_t census_samples = 100000, census_seed = 0;
    census->add_option("-i,--input", census_input, "graph file")->required();
    census->add_option("--s", census_s, "motif size (2-8)")->required();
    census->add_option("--p", census_p, "ER density (default: estimated)");
    census->add_option("--mode", census_mode, "exact|sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    census->add_option("--samples", census_samples, "sampled-mode draws");
    census->add_option("--seed", census_seed, "seed");
    census->add_option("--out", out_path, "report path (default stdout)");
    census->add_option("--report-format", report_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- diag ----
    auto* diag = app.add_subcommand("diag", "error functional and recursion bounds");
    std::string diag_input;
    double diag_p = -1, diag_cstar = 32.0;
    int diag_rmax = 3;
    diag->add_option("-i,--input", diag_input, "graph file")->required();
    diag->add_option("--r-max", diag_rmax, "largest motif order for E_n");
    diag->add_option("--p", diag_p, "density (default: estimated)");
    diag->add_option("--c-star", diag_cstar, "recursion constant");
    diag->add_option("--out", out_path, "report path (default stdout)");
    diag->add_option("--report-format", report_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- ergm ----
    auto* ergm = app.add_subcommand("ergm", "fixed-point analysis and concentration runs");
    ergm->require_subcommand(1);
    double e_beta = 0, e_gamma = 0, e_tol = 1e-12;
    uint64_t e_grid = 10000, e_n = 128, e_sweeps = 200, e_replicas = 3, e_seed = 0;
    auto* ergm_solve = ergm->add_subcommand("solve", "roots of p = phi(p^2) and the regime flag");
    ergm_solve->add_option("--beta", e_beta, "edge weight")->required();
    ergm_solve->add_option("--gamma", e_gamma, "triangle weight")->required();
    ergm_solve->add_option("--grid", e_grid, "scan grid size");
    ergm_solve->add_option("--tol", e_tol, "bisection tolerance");
    ergm_solve->add_option("--out", out_path, "report path");
    ergm_solve->add_option("--report-format", report_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    auto* ergm_exp = ergm->add_subcommand("experiment", "degree/co-degree concentration replicas");
    ergm_exp->add_option("--beta", e_beta, "edge weight")->required();
    ergm_exp->add_option("--gamma", e_gamma, "triangle weight")->required();
    ergm_exp->add_option("--n", e_n, "vertices");
    ergm_exp->add_option("--sweeps", e_sweeps, "Glauber sweeps");
    ergm_exp->add_option("--replicas", e_replicas, "replica count");
    ergm_exp->add_option("--seed", e_seed, "seed");
    ergm_exp->add_option("--out", out_path, "report path");
    ergm_exp->add_option("--report-format", report_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- geom ----
    auto* geom = app.add_subcommand("geom", "geometric-graph numerical validation");
    geom->require_subcommand(1);
    uint64_t geo_seed = 0, geo_samples = 100000;
    auto* geom_check = geom->add_subcommand("check", "threshold/Willink/DGLU validation battery");
    geom_check->add_option("--seed", geo_seed, "seed");
    geom_check->add_option("--samples", geo_samples, "Monte Carlo samples per check");
    geom_check->add_option("--out", out_path, "report path");
    geom_check->add_option("--report-format", report_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- clique ----
    auto* clique = app.add_subcommand("clique", "clique-count Poisson regime and planted runs");
    clique->require_subcommand(1);
    uint64_t c_n = 1000000, c_r = 501, c_seeds = 3, c_seed = 0;
    double c_eps = 0.4, c_c = 1.0, c_delta = 0.62;
    auto* clique_regime = clique->add_subcommand("regime", "mu, overlap profile and TV bound");
    clique_regime->add_option("--n", c_n, "vertices")->required();
    clique_regime->add_option("--r", c_r, "clique size")->required();
    clique_regime->add_option("--out", out_path, "report path");
    clique_regime->add_option("--report-format", report_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    auto* clique_exp = clique->add_subcommand("experiment", "planted-clique certification");
    clique_exp->add_option("--n", c_n, "vertices");
    clique_exp->add_option("--eps", c_eps, "epsilon in r = c n^(1/2-eps)");
    clique_exp->add_option("--c", c_c, "clique-size constant");
    clique_exp->add_option("--delta", c_delta, "certification level");
    clique_exp->add_option("--seeds", c_seeds, "number of seeds");
    clique_exp->add_option("--seed", c_seed, "base seed");
    clique_exp->add_option("--out", out_path, "report path");
    clique_exp->add_option("--report-format", report_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);
    prg_set_threads(threads);

    try {
        if (gen->parsed()) {
            GraphHandle h;
            json config{{"seed", g_seed}, {"format", gen_format}, {"out", gen_out}};
            if (gen_er->parsed()) {
                config["n"] = g_n;
                config["p"] = g_p;
                check(prg_graph_gen_er(g_n, g_p, g_seed, &h.g));
            } else if (gen_reg->parsed()) {
                if (!switches_given) g_switches = 10 * g_n * g_d;
                config["n"] = g_n;
                config["d"] = g_d;
                config["switches"] = g_switches;
                check(prg_graph_gen_regular(g_n, g_d, g_switches, g_seed, &h.g));
            } else if (gen_bin->parsed()) {
                config["k"] = g_k;
                check(prg_graph_gen_binary(g_k, &h.g));
            } else if (gen_geom->parsed()) {
                config["n"] = g_n;
                config["d"] = g_d;
                config["p"] = g_p;
                check(prg_graph_gen_geometric(g_n, g_d, g_p, g_seed, &h.g));
            } else if (gen_ergm->parsed()) {
                config["n"] = g_n;
                config["beta"] = g_beta;
                config["gamma"] = g_gamma;
                config["sweeps"] = g_sweeps;
                check(prg_graph_gen_ergm(g_n, g_beta, g_gamma, g_sweeps, g_seed, &h.g));
            } else if (gen_plant->parsed()) {
                config["input"] = plant_input;
                config["r"] = g_r;
                GraphHandle base = load_graph(plant_input);
                check(prg_graph_plant_clique(base.g, g_r, g_seed, &h.g));
            }
            save_graph(h.g, gen_out, gen_format);
            std::cerr << "wrote " << gen_out << " (n=" << prg_graph_vertex_count(h.g)
                      << ", m=" << prg_graph_edge_count(h.g) << ")\n";
        } else if (cert->parsed()) {
            GraphHandle h = load_graph(cert_input);
            prg_certify_options opts;
            prg_certify_options_init(&opts);
            if (assume_p > 0) {
                opts.assume_p = assume_p;
                opts.has_assume_p = 1;
            }
            opts.C = cert_C;
            opts.c0_prime = cert_c0;
            opts.max_order = cert_orders;
            opts.sample_tuples = cert_samples;
            opts.seed = cert_seed;
            JsonString rep;
            check(prg_certify_json(h.g, &opts, &rep.s));
            json config{{"input", cert_input},  {"assume_p", assume_p},
                        {"C", cert_C},          {"C0_prime", cert_c0},
                        {"orders", cert_orders}, {"sample_tuples", cert_samples},
                        {"seed", cert_seed}};
            emit_report("certify", config, rep.parse(), out_path, report_format);
        } else if (census->parsed()) {
            GraphHandle h = load_graph(census_input);
            prg_census_options opts;
            prg_census_options_init(&opts);
            opts.p = census_p;
            opts.s = census_s;
            opts.sampled = census_mode == "sampled" ? 1 : 0;
            opts.samples = census_samples;
            opts.seed = census_seed;
            JsonString rep;
            check(prg_census_json(h.g, &opts, &rep.s));
            json config{{"input", census_input}, {"s", census_s},
                        {"p", census_p},         {"mode", census_mode},
                        {"samples", census_samples}, {"seed", census_seed}};
            emit_report("census", config, rep.parse(), out_path, report_format);
        } else if (diag->parsed()) {
            GraphHandle h = load_graph(diag_input);
            JsonString rep;
            check(prg_diag_json(h.g, diag_p, diag_rmax, diag_cstar, &rep.s));
            json config{{"input", diag_input},
                        {"p", diag_p},
                        {"r_max", diag_rmax},
                        {"c_star", diag_cstar}};
            emit_report("diag", config, rep.parse(), out_path, report_format);
        } else if (ergm->parsed()) {
            JsonString rep;
            if (ergm_solve->parsed()) {
                check(prg_ergm_solve_json(e_beta, e_gamma, e_grid, e_tol, &rep.s));
                json config{{"beta", e_beta}, {"gamma", e_gamma}, {"grid", e_grid}, {"tol", e_tol}};
                emit_report("ergm solve", config, rep.parse(), out_path, report_format);
            } else {
                check(prg_ergm_experiment_json(e_beta, e_gamma, e_n, e_sweeps, e_replicas, e_seed,
                                               &rep.s));
                json config{{"beta", e_beta},   {"gamma", e_gamma},     {"n", e_n},
                            {"sweeps", e_sweeps}, {"replicas", e_replicas}, {"seed", e_seed}};
                emit_report("ergm experiment", config, rep.parse(), out_path, report_format);
            }
        } else if (geom->parsed()) {
            JsonString rep;
            check(prg_geom_check_json(geo_seed, geo_samples, &rep.s));
            json config{{"seed", geo_seed}, {"samples", geo_samples}};
            emit_report("geom check", config, rep.parse(), out_path, report_format);
        } else if (clique->parsed()) {
            JsonString rep;
            if (clique_regime->parsed()) {
                check(prg_clique_regime_json(c_n, c_r, &rep.s));
                json config{{"n", c_n}, {"r", c_r}};
                emit_report("clique regime", config, rep.parse(), out_path, report_format);
            } else {
                check(prg_clique_experiment_json(c_n, c_eps, c_c, c_delta, c_seeds, c_seed,
                                                 &rep.s));
                json config{{"n", c_n},         {"eps", c_eps},   {"c", c_c},
                            {"delta", c_delta}, {"seeds", c_seeds}, {"seed", c_seed}};
                emit_report("clique experiment", config, rep.parse(), out_path, report_format);
            }
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    }
    return 0;
}
