#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace prg::ergm {

struct ErgmModel {
    double beta = 0;
    double gamma = 0;
    bool ferromagnetic() const { return gamma > 0; }
};

// H(x) = beta * E(x) + (gamma/n) * T(x)
double hamiltonian(const Graph& g, const ErgmModel& m);

uint64_t triangle_count(const Graph& g);

// phi(x) = e^(beta + gamma x) / (1 + e^(beta + gamma x)), overflow-safe
double phi_beta(const ErgmModel& m, double x);

// Glauber single-edge acceptance probability given normalized co-degree L
double glauber_conditional(const ErgmModel& m, double l);

enum class Regime { high_temperature, not_high_temperature, indeterminate };

struct FixedPointResult {
    std::vector<double> roots;   // p in (0,1) with p = phi(p^2)
    std::vector<double> slopes;  // d/dp phi(p^2) at each root
    Regime regime = Regime::not_high_temperature;
};

// Sign-scan of psi(u) = phi(u)^2 - u on a uniform u-grid, bisection on each
// bracket, roots mapped back through p = sqrt(u). Bisection is used instead
// of Newton: psi can run nearly tangent near criticality.
FixedPointResult solve_fixed_point(const ErgmModel& m, uint64_t grid = 10000, double tol = 1e-12);

struct ConcentrationReplica {
    uint64_t seed = 0;
    double max_degree_dev_norm = 0;  // max_v |deg - n p*| / sqrt(n ln n)
    double max_codegree_dev_norm = 0; // max pairs |codeg - n p*^2| / sqrt(n ln n)
    double edge_density = 0;
};

struct ConcentrationReport {
    ErgmModel model;
    uint64_t n = 0;
    uint64_t sweeps = 0;
    double p_star = 0;
    double slope = 0;
    Regime regime = Regime::not_high_temperature;
    std::vector<ConcentrationReplica> replicas;
};

ConcentrationReport concentration_experiment(const ErgmModel& m, uint64_t n, uint64_t sweeps,
                                             uint64_t replicas, uint64_t seed);

} // namespace prg::ergm
