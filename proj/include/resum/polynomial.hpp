#pragma once

#include "resum/real.hpp"

#include <vector>

namespace resum {

// Coefficient lists in ascending powers.
using Poly = std::vector<Real>;
using CPoly = std::vector<Cx>;

Real horner(const Poly& p, const Real& x);
Cx horner(const Poly& p, const Cx& x);
Cx horner(const CPoly& p, const Cx& x);
Poly derivative(const Poly& p);
CPoly derivative(const CPoly& p);
int degree(const Poly& p);  // -1 for the zero polynomial

struct Root {
    Cx z;
    int multiplicity = 1;
    bool real = false;  // classified and polished on the real axis
};

// All roots by Aberth-Ehrlich iteration at working precision.  Exact zero
// roots are split off first; clusters tighter than 10^(-digits/4) relative are
// merged into one root with multiplicity.  Roots are returned sorted by
// modulus descending, then by real part, then imaginary part.
std::vector<Root> polynomial_roots(const CPoly& p);
std::vector<Root> polynomial_roots(const Poly& p);

// Distinct real roots, descending.  Each is Newton-polished on the real axis
// and must satisfy |P(r)| < scale * 10^(8-digits), scale = sum |c_i||r|^i.
// Repeated roots appear once (see polynomial_real_roots_multiplicity).
std::vector<Real> polynomial_real_roots(const Poly& p);
std::vector<Root> polynomial_real_roots_multiplicity(const Poly& p);

}  // namespace resum
