#pragma once

#include "resum/polynomial.hpp"
#include "resum/series.hpp"

namespace resum {

struct PadeApproximant {
    Poly numerator;    // degree L
    Poly denominator;  // degree M, denominator[0] == 1
};

// [L/M] from the first L+M+1 coefficients.  Near-singular systems are rejected
// with DegeneracyError (the message carries the numerical rank).
PadeApproximant pade_fit(const PowerSeries& s, int L, int M);

struct PadeValue {
    Real value;
    bool near_pole = false;  // |Q(g)| below 1e-6 of its coefficient scale
};

// Throws PoleError when |Q(g)| is at rounding level.
PadeValue pade_eval_checked(const PadeApproximant& p, const Real& g);
Real pade_eval(const PadeApproximant& p, const Real& g);

// Taylor coefficients of the rational function through order K.
PowerSeries pade_taylor(const PadeApproximant& p, int K);

}  // namespace resum
