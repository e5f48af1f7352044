#pragma once

#include "resum/borel.hpp"
#include "resum/models.hpp"
#include "resum/odm.hpp"
#include "resum/saddle.hpp"

#include <optional>
#include <vector>

// Fixed configurations behind the reproduce command and the acceptance run.
namespace resum::pipelines {

struct OdmSetup {
    MappingSpec mapping;
    RhoSelectionCriterion crit;
    Coupling g;
    int source_order = 61;
    int k_min = 5;
    int k_max = 60;
    bool error_vs_k = false;
};

// d = 0 integral at g = inf, alpha = 2, p = 1/2
OdmSetup d0_strong_setup();
// d = 0 integral at g = 5 with g = rho lambda/(1-lambda)^4
OdmSetup d0_g5_setup();
// anharmonic ground state at g = inf, alpha = 3/2, E = (1-lambda)^(-1/2) * ...
OdmSetup anharmonic_setup();

struct OdmRun {
    OdmSetup setup;
    Real oracle;
    ConvergenceStudy study;
};
OdmRun run_d0_strong(bool parallel = true);
OdmRun run_d0_g5(bool parallel = true);
OdmRun run_anharmonic(bool parallel = true);

// shifted-power alpha = 3/2 for all phi^4 series
MappingSpec phi4_mapping(bool beta_covariant);
RhoSelectionCriterion phi4_fixed_point_criterion();
RhoSelectionCriterion phi4_exponent_criterion();

std::vector<FixedPointResult> run_phi4_fixed_points(int k_min = 3, int k_max = 7);
std::vector<ExponentsResult> run_phi4_exponents(const Real& g_star, int k_min = 3, int k_max = 7);

struct BorelRowResult {
    int k = 0;
    Real sigma;
    Real g_star;
    Real nu;
    Real gamma;
};
// zero of the Borel-summed beta function, then nu and gamma there
BorelRowResult borel_exponents(int k, const Real& sigma);
// sigma from {0,1,2,3} with the smallest |g*(k_max) - g*(k_max-1)|
Real borel_select_sigma(int k_max = 7);
std::vector<BorelRowResult> run_borel_exponents(const Real& sigma, int k_min = 2, int k_max = 7);

}  // namespace resum::pipelines
