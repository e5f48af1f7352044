#include "doctest.h"

#include "resum/errors.hpp"
#include "resum/saddle.hpp"

#include <boost/math/tools/roots.hpp>

using namespace resum;
namespace mp = boost::multiprecision;

namespace {

// independent route: eliminate mu, bracket the reduced equation, solve with TOMS 748
Real lambda_by_bracketing(const Real& a)
{
    auto f = [&a](const Real& l) { return (1 - l) + ((a - 1) * l + 1) * mp::log(-l); };
    boost::uintmax_t iters = 400;
    auto tol = [](const Real& x, const Real& y) { return mp::abs(x - y) <= eps_digits(6); };
    auto r = boost::math::tools::toms748_solve(f, Real("-0.9"), Real("-0.01"), tol, iters);
    return (r.first + r.second) / 2;
}

Real mu_of(const Real& a, const Real& l)
{
    return -mp::pow(1 - l, a - 1) * ((a - 1) * l + 1) / l;
}

}  // namespace

TEST_CASE("saddle system residuals vanish")
{
    for (const char* a : {"3/2", "2", "5/2", "3", "4", "6"}) {
        SaddleSolution s = solve_saddle(parse_real(a));
        CHECK(s.residual1 < Real("1e-40"));
        CHECK(s.residual2 < Real("1e-40"));
        CHECK(s.lambda < 0);
        CHECK(s.lambda > -1);
        CHECK(s.mu > 0);
    }
}

TEST_CASE("saddle against the bracketed reduced equation")
{
    for (const char* a : {"3/2", "2", "5/2", "3", "4"}) {
        Real alpha = parse_real(a);
        SaddleSolution s = solve_saddle(alpha);
        Real l = lambda_by_bracketing(alpha);
        CHECK(mp::abs(s.lambda - l) < Real("1e-40"));
        CHECK(mp::abs(s.mu - mu_of(alpha, l)) < Real("1e-40"));
    }
}

TEST_CASE("d0 exact rate satisfies its defining equation")
{
    D0Rate r = d0_exact_rate();
    Real s = mp::sqrt(r.R * r.R + 9);
    CHECK(mp::abs(mp::exp(s / r.R) - (s + r.R) / 3) < eps_digits(6));
    CHECK(r.rate == mp::exp(-3 / r.R));
    CHECK(r.R > 4);
    CHECK(r.R < 5);
}

TEST_CASE("predicted R for the alpha = 4 mapping")
{
    CHECK(mp::abs(predicted_R(4, Real(3) / 2) - Real("9.2039")) < Real("1e-4"));
    CHECK_THROWS_AS(predicted_R(4, Real(0)), UsageError);
}

TEST_CASE("alpha must exceed one")
{
    CHECK_THROWS_AS(solve_saddle(Real(1)), UsageError);
}
