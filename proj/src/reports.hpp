#pragma once

#include <string>

#include "certify.hpp"
#include "clique_poisson.hpp"
#include "ergm.hpp"
#include "motif.hpp"

namespace prg::reports {

inline const char* version() { return "0.1.0"; }

std::string certificate_json(const certify::Certificate& cert, int indent = 2);
std::string census_json(const motif::CensusReport& rep, int indent = 2);
std::string fixed_point_json(const ergm::ErgmModel& m, const ergm::FixedPointResult& fp,
                             int indent = 2);
std::string ergm_experiment_json(const ergm::ConcentrationReport& rep, int indent = 2);
std::string clique_regime_json(const clique::CliqueRegime& cr, int indent = 2);
std::string planted_experiment_json(const clique::PlantedExperimentReport& rep, int indent = 2);

struct DiagReport {
    uint64_t n = 0;
    double p = 0;
    int r_max = 0;
    double c_star = 0;
    std::vector<double> error_functional;  // E_n(2) .. E_n(r_max)
    std::vector<double> recursion_bounds;  // bound on E_n(r+1) from E_n(r)
    double good_fraction_xi1 = 0;          // Good(B=[n], xi) density, full base set
    double good_fraction_xi0 = 0;
};

std::string diag_json(const DiagReport& rep, int indent = 2);

struct GeomCheckReport {
    uint64_t seed = 0;
    uint64_t mc_samples = 0;
    struct ThresholdCheck {
        double p, t, mc_estimate, mc_stderr;
        bool within_5_sigma;
        uint64_t d;
    };
    std::vector<ThresholdCheck> thresholds;
    struct WillinkCheck {
        double h, rho, lower, upper, mc_estimate, mc_stderr;
        bool within_bounds;
    };
    std::vector<WillinkCheck> willink;
    struct DgluCheck {
        double p;
        uint64_t d;
        double lhs, rhs, kappa_fit;
        bool holds;
    };
    std::vector<DgluCheck> dglu;
    bool norm_check_holds = false;
    double norm_fail_frequency = 0;
    bool all_pass = false;
};

GeomCheckReport run_geom_check(uint64_t seed, uint64_t mc_samples);
std::string geom_check_json(const GeomCheckReport& rep, int indent = 2);

} // namespace prg::reports
