#pragma once

#include "resum/coupling.hpp"
#include "resum/polynomial.hpp"
#include "resum/series.hpp"

#include <string>

namespace resum {

enum class MappingFamily {
    PowerCut,      // g = rho * lambda / (1-lambda)^alpha
    ShiftedPower,  // g = rho * ((1-lambda)^(-alpha) - 1)
};

std::string to_string(MappingFamily f);
MappingFamily parse_family(const std::string& s);

struct MappingSpec {
    MappingFamily family = MappingFamily::PowerCut;
    Real alpha = 2;
    // physical function = (1-lambda)^p * (lambda series)
    Real prefactor_p = 0;
    // beta-function transform: beta_lambda = (1-lambda)^(alpha+1)/(alpha rho) * beta(g(lambda))
    bool beta_covariant = false;

    void validate() const;  // throws UsageError
};

// zeta with g = rho * zeta(lambda)
PowerSeries zeta_series(const MappingSpec& m, int order);

struct RhoPolynomialTable {
    // polys[k] is P_k(rho), ascending powers of rho
    std::vector<Poly> polys;
    MappingSpec mapping;
    int source_order = 0;

    int max_order() const { return static_cast<int>(polys.size()) - 1; }
    const Poly& operator[](int k) const { return polys[static_cast<size_t>(k)]; }
};

// P_k(rho) = sum_n f_n rho^n [lambda^k] (1-lambda)^(-p) zeta^n, or for beta-covariant
// tables sum_n f_n rho^(n-1) [lambda^k] (1-lambda)^(alpha+1)/alpha zeta^n.
// The products over n run in parallel; results are identical to the serial build.
RhoPolynomialTable build_rho_table(const PowerSeries& source, const MappingSpec& m);
RhoPolynomialTable build_rho_table_serial(const PowerSeries& source, const MappingSpec& m);

// lambda in [0,1) with g = rho zeta(lambda); g = inf gives exactly 1.
Real lambda_of_g(const Coupling& g, const Real& rho, const MappingSpec& m);
// Complex rho (principal branch).  Closed form for ShiftedPower; for PowerCut only
// g = inf is supported.
Cx lambda_of_g(const Coupling& g, const Cx& rho, const MappingSpec& m);

// Taylor series of lambda(g) at fixed rho, order K (used for re-expansion checks).
PowerSeries lambda_series(const Real& rho, const MappingSpec& m, int K);

}  // namespace resum
