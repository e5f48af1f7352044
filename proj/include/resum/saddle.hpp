#pragma once

#include "resum/real.hpp"

namespace resum {

struct SaddleSolution {
    Real alpha;
    Real mu;      // R / A
    Real lambda;  // in (-1, 0)
    Real residual1;
    Real residual2;
};

// mu + (1/l)(1-l)^(alpha-1)((alpha-1) l + 1) = 0
// (1/l)(1-l)^alpha - mu ln|l| = 0
SaddleSolution solve_saddle(const Real& alpha);

struct D0Rate {
    Real R;
    Real rate;  // exp(-3/R)
};

// exp(sqrt(R^2+9)/R) = (sqrt(R^2+9) + R)/3
D0Rate d0_exact_rate();

Real predicted_R(const Real& alpha, const Real& A);

}  // namespace resum
