#pragma once

#include "resum/real.hpp"

#include <functional>

namespace resum {

struct QuadratureSettings {
    Real relative_tolerance = 0;  // 0: 10^(10 - digits)
    int max_refinements = 12;     // node budget: levels of the double-exponential rule
};

struct QuadratureResult {
    Real value;
    Real error;
    int levels = 0;
};

// Integral over [0, inf) with the exp-sinh rule; throws ResourceError when the
// tolerance is not met within the budget.
QuadratureResult integrate_half_line(const std::function<Real(const Real&)>& f,
                                     const QuadratureSettings& s = {});

// Integral over [a, b] with the tanh-sinh rule.
QuadratureResult integrate_interval(const std::function<Real(const Real&)>& f, const Real& a,
                                    const Real& b, const QuadratureSettings& s = {});

}  // namespace resum
