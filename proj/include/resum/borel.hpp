#pragma once

#include "resum/pade.hpp"
#include "resum/quadrature.hpp"
#include "resum/series.hpp"

namespace resum {

struct BorelConfig {
    Real sigma = 0;       // Leroy parameter
    Real a = 1;           // Borel-plane singularity at z = -1/a
    int truncation = -1;  // mapped-series order; -1 uses the full series
    QuadratureSettings quadrature;

    void validate() const;
};

// b_k = f_k / Gamma(k + sigma + 1)
PowerSeries borel_leroy_transform(const PowerSeries& s, const Real& sigma);

// Coefficients of B(z(u)), z = (4/a) u / (1-u)^2.
PowerSeries conformal_map_coeffs(const PowerSeries& b, const Real& a);

// u(z) = (sqrt(1 + a z) - 1) / (sqrt(1 + a z) + 1)
Real conformal_u(const Real& z, const Real& a);

struct BorelResult {
    Real value;
    Real truncation_error;  // |sum at K - sum at K-1|
    Real quadrature_error;
};

// int_0^inf t^sigma e^{-t} B_sigma(g t) dt with B from the mapped series.
BorelResult borel_sum(const PowerSeries& s, const BorelConfig& cfg, const Real& g);

// Same Laplace integral over a Pade [L/M] of the Borel-Leroy transform.  A pole on
// the positive real axis raises SummabilityError.
BorelResult borel_pade_sum(const PowerSeries& s, const Real& sigma, int L, int M, const Real& g,
                           const QuadratureSettings& q = {});

}  // namespace resum
