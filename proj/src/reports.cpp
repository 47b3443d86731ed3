#include "reports.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "geometric.hpp"
#include "rng.hpp"

namespace prg::reports {

using nlohmann::json;

namespace {

std::string dump(const json& j, int indent) { return indent > 0 ? j.dump(indent) : j.dump(); }

const char* regime_name(ergm::Regime r) {
    switch (r) {
        case ergm::Regime::high_temperature: return "HighTemperature";
        case ergm::Regime::not_high_temperature: return "NotHighTemperature";
        case ergm::Regime::indeterminate: return "Indeterminate";
    }
    return "unknown";
}

std::string canon_hex(uint32_t canon) {
    std::ostringstream os;
    os << "0x" << std::hex << canon;
    return os.str();
}

} // namespace

std::string certificate_json(const certify::Certificate& cert, int indent) {
    json dev = json::object();
    json dh = json::object();
    json sampled = json::object();
    for (int order = 1; order <= cert.max_order; ++order) {
        const std::string key = "order" + std::to_string(order);
        dev[key] = cert.deviation[order];
        dh[key] = cert.delta_hat[order];
        sampled[key] = cert.deviation_sampled[order];
    }
    json j{{"version", version()},
           {"n", cert.n},
           {"edge_count", cert.edge_count},
           {"p_hat", cert.p_hat},
           {"p_assumed", cert.p_assumed},
           {"C", cert.C},
           {"C0_prime", cert.c0_prime},
           {"max_order", cert.max_order},
           {"deviations", dev},
           {"delta_hat", dh},
           {"deviation_sampled", sampled},
           {"s_max_a12", cert.s_max_a12},
           {"s_max_a14", cert.s_max_a14},
           {"s_max_clique", cert.s_max_clique},
           {"s_max_independent", cert.s_max_independent}};
    return dump(j, indent);
}

std::string census_json(const motif::CensusReport& rep, int indent) {
    json classes = json::array();
    for (const auto& e : rep.classes) {
        json c{{"canon_hex", canon_hex(e.cls.canon)},
               {"edges", e.cls.edge_count},
               {"aut", e.cls.aut_size},
               {"count", e.count},
               {"er_expectation", e.er_expect},
               {"ratio_error", e.ratio_error}};
        if (rep.sampled) c["stderr"] = e.stderr_count;
        if (!rep.sampled) c["count_exact"] = e.exact;
        classes.push_back(std::move(c));
    }
    json j{{"version", version()},
           {"n", rep.n},
           {"p", rep.p},
           {"s", rep.s},
           {"mode", rep.sampled ? "sampled" : "exact"},
           {"classes", classes},
           {"max_ratio_error", rep.max_ratio_error}};
    if (rep.sampled) {
        j["samples"] = rep.samples;
        j["seed"] = rep.seed;
    }
    return dump(j, indent);
}

std::string fixed_point_json(const ergm::ErgmModel& m, const ergm::FixedPointResult& fp,
                             int indent) {
    json j{{"version", version()},
           {"beta", m.beta},
           {"gamma", m.gamma},
           {"roots", fp.roots},
           {"slopes", fp.slopes},
           {"regime", regime_name(fp.regime)}};
    return dump(j, indent);
}

std::string ergm_experiment_json(const ergm::ConcentrationReport& rep, int indent) {
    json reps = json::array();
    for (const auto& r : rep.replicas)
        reps.push_back(json{{"seed", r.seed},
                            {"max_deg_dev_norm", r.max_degree_dev_norm},
                            {"max_codeg_dev_norm", r.max_codegree_dev_norm},
                            {"edge_density", r.edge_density}});
    json j{{"version", version()},
           {"beta", rep.model.beta},
           {"gamma", rep.model.gamma},
           {"n", rep.n},
           {"sweeps", rep.sweeps},
           {"p_star", rep.p_star},
           {"slope", rep.slope},
           {"regime", regime_name(rep.regime)},
           {"replicas", reps}};
    return dump(j, indent);
}

std::string clique_regime_json(const clique::CliqueRegime& cr, int indent) {
    json j{{"version", version()},
           {"n", cr.n},
           {"r", cr.r},
           {"mu_log", cr.mu_log},
           {"tv_bound", cr.tv.tv},
           {"tv_bound_log", cr.tv.tv_log},
           {"a_s_log", cr.a_s_log},
           {"profile",
            json{{"s_star", cr.profile.s_star},
                 {"min_log", cr.profile.min_log},
                 {"shape_ok", cr.profile.shape_ok},
                 {"violations", cr.profile.violations}}}};
    return dump(j, indent);
}

std::string planted_experiment_json(const clique::PlantedExperimentReport& rep, int indent) {
    json seeds = json::array();
    for (const auto& s : rep.seeds)
        seeds.push_back(json{{"seed", s.seed},
                             {"deviation_order1", s.deviation1},
                             {"deviation_order2", s.deviation2},
                             {"allowance", s.allowance},
                             {"pass", s.pass}});
    json j{{"version", version()},
           {"n", rep.n},
           {"clique_size", rep.clique_size},
           {"epsilon", rep.epsilon},
           {"c", rep.c},
           {"delta", rep.delta},
           {"C", rep.C},
           {"label", "planted surrogate"},
           {"seeds", seeds},
           {"passes", rep.passes}};
    return dump(j, indent);
}

std::string diag_json(const DiagReport& rep, int indent) {
    json j{{"version", version()},
           {"n", rep.n},
           {"p", rep.p},
           {"r_max", rep.r_max},
           {"c_star", rep.c_star},
           {"E_n", rep.error_functional},
           {"recursion_bounds", rep.recursion_bounds},
           {"good_fraction", json{{"xi1", rep.good_fraction_xi1}, {"xi0", rep.good_fraction_xi0}}}};
    return dump(j, indent);
}

GeomCheckReport run_geom_check(uint64_t seed, uint64_t mc_samples) {
    GeomCheckReport rep;
    rep.seed = seed;
    rep.mc_samples = mc_samples;
    rep.all_pass = true;

    const std::pair<double, uint64_t> grid[] = {{0.1, 50}, {0.3, 500}, {0.5, 10}};
    uint64_t stream = 0;
    for (auto [p, d] : grid) {
        auto spec = geom::threshold_tpd(p, d);
        auto mc = geom::edge_probability_mc(p, d, mc_samples, derive_seed(seed, stream++));
        GeomCheckReport::ThresholdCheck tc{p, spec.t, mc.estimate, mc.stderr_, false, d};
        tc.within_5_sigma = std::abs(mc.estimate - p) <= 5.0 * std::max(mc.stderr_, 1e-12);
        rep.all_pass = rep.all_pass && tc.within_5_sigma;
        rep.thresholds.push_back(tc);
    }
    for (double h : {0.5, 1.0, 2.0})
        for (double rho : {0.0, 0.3, 0.8}) {
            auto wb = geom::willink_bounds(h, rho);
            auto mc = geom::bivariate_tail_mc(h, rho, mc_samples, derive_seed(seed, stream++));
            GeomCheckReport::WillinkCheck wc{h, rho, wb.lower, wb.upper, mc.estimate, mc.stderr_,
                                             false};
            const double slack = 5.0 * std::max(mc.stderr_, 1e-12);
            wc.within_bounds = mc.estimate >= wb.lower - slack && mc.estimate <= wb.upper + slack;
            rep.all_pass = rep.all_pass && wc.within_bounds;
            rep.willink.push_back(wc);
        }
    for (uint64_t d : {100ull, 1000ull, 10000ull}) {
        auto res = geom::dglu_check(0.3, d, 5.0);
        rep.dglu.push_back({0.3, d, res.lhs, res.rhs, res.kappa_fit, res.holds});
        rep.all_pass = rep.all_pass && res.holds;
    }
    auto nc = geom::gaussian_norm_check(1000, std::min<uint64_t>(mc_samples, 20000),
                                        derive_seed(seed, stream++));
    rep.norm_check_holds = nc.holds;
    rep.norm_fail_frequency = nc.fail_frequency;
    rep.all_pass = rep.all_pass && nc.holds;
    return rep;
}

std::string geom_check_json(const GeomCheckReport& rep, int indent) {
    json thresholds = json::array();
    for (const auto& t : rep.thresholds)
        thresholds.push_back(json{{"p", t.p},
                                  {"d", t.d},
                                  {"t", t.t},
                                  {"mc_estimate", t.mc_estimate},
                                  {"mc_stderr", t.mc_stderr},
                                  {"within_5_sigma", t.within_5_sigma}});
    json willink = json::array();
    for (const auto& w : rep.willink)
        willink.push_back(json{{"h", w.h},
                               {"rho", w.rho},
                               {"lower", w.lower},
                               {"upper", w.upper},
                               {"mc_estimate", w.mc_estimate},
                               {"mc_stderr", w.mc_stderr},
                               {"within_bounds", w.within_bounds}});
    json dglu = json::array();
    for (const auto& d : rep.dglu)
        dglu.push_back(json{{"p", d.p},
                            {"d", d.d},
                            {"lhs", d.lhs},
                            {"rhs", d.rhs},
                            {"kappa_fit", d.kappa_fit},
                            {"holds", d.holds}});
    json j{{"version", version()},
           {"seed", rep.seed},
           {"mc_samples", rep.mc_samples},
           {"thresholds", thresholds},
           {"willink", willink},
           {"dglu", dglu},
           {"norm_check", json{{"holds", rep.norm_check_holds},
                               {"fail_frequency", rep.norm_fail_frequency}}},
           {"all_pass", rep.all_pass}};
    return dump(j, indent);
}

} // namespace prg::reports
