#include "resum/quadrature.hpp"

#include "resum/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>

namespace resum {

namespace mp = boost::multiprecision;
namespace bq = boost::math::quadrature;

namespace {

Real tolerance(const QuadratureSettings& s)
{
    return s.relative_tolerance > 0 ? s.relative_tolerance : eps_digits(10);
}

void check(const QuadratureResult& r, const Real& l1, const Real& tol)
{
    // the rule's own estimate is conservative; allow a modest margin
    if (!(r.error <= 100 * tol * std::max<Real>(l1, mp::abs(r.value))))
        throw ResourceError("quadrature did not converge: error estimate " + to_string(r.error, 6) +
                            " after " + std::to_string(r.levels) + " levels");
}

}  // namespace

QuadratureResult integrate_half_line(const std::function<Real(const Real&)>& f,
                                     const QuadratureSettings& s)
{
    const Real tol = tolerance(s);
    bq::exp_sinh<Real> rule(static_cast<size_t>(s.max_refinements));
    QuadratureResult r;
    Real l1;
    size_t levels = 0;
    r.value = rule.integrate(f, tol, &r.error, &l1, &levels);
    r.levels = static_cast<int>(levels);
    check(r, l1, tol);
    return r;
}

QuadratureResult integrate_interval(const std::function<Real(const Real&)>& f, const Real& a,
                                    const Real& b, const QuadratureSettings& s)
{
    const Real tol = tolerance(s);
    // the default minimum complement is the mpfr minimum, whose log overflows
    bq::tanh_sinh<Real> rule(static_cast<size_t>(s.max_refinements), Real("1e-1000"));
    QuadratureResult r;
    Real l1;
    size_t levels = 0;
    r.value = rule.integrate(f, a, b, tol, &r.error, &l1, &levels);
    r.levels = static_cast<int>(levels);
    check(r, l1, tol);
    return r;
}

}  // namespace resum
