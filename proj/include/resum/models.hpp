#pragma once

#include "resum/coupling.hpp"
#include "resum/quadrature.hpp"
#include "resum/series.hpp"

namespace resum {

// Z(g) = (2 pi)^(-1/2) \int dx exp(-x^2/2 - g x^4/24)

PowerSeries d0_partition_coeffs(int K);
// g finite: quadrature.  g = inf: lim g^(1/4) Z(g).
Real d0_partition_value(const Coupling& g, const QuadratureSettings& q = {});
Real d0_strong_amplitude();
// Closed form through K_{1/4}; used as an independent cross-check.
Real d0_partition_bessel(const Real& g);

// H = p^2/2 + x^2/2 + (g/24) x^4, ground state

PowerSeries anharmonic_ground_coeffs(int K);

struct DiagonalizationOptions {
    Real relative_tolerance = Real("1e-12");
    int initial_basis = 16;  // even oscillator states
    int max_basis = 4096;
};

struct GroundState {
    Real energy;
    int basis = 0;       // final number of even states
    Real change;         // |E(N) - E(N/2)|
};

// g finite: lowest eigenvalue.  g = inf: lim g^(-1/3) E(g), i.e. the ground
// state of p^2/2 + x^4/24.
GroundState anharmonic_ground_state(const Coupling& g, const DiagonalizationOptions& opt = {});
Real anharmonic_ground_value(const Coupling& g, const DiagonalizationOptions& opt = {});
// Fixed basis size, no adaptivity; for cross-checks.
Real anharmonic_ground_fixed(const Coupling& g, int even_states);

struct RgSeriesSet {
    PowerSeries beta;
    PowerSeries gamma_inv;
    PowerSeries eta;
    Real large_order_a;
};

RgSeriesSet rg_series();

// (2 - eta) * gamma^{-1}, the series of 1/nu through the scaling relation.
PowerSeries rg_nu_inverse(const RgSeriesSet& rg);

}  // namespace resum
