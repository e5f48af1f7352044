#include "doctest.h"

#include "resum/errors.hpp"
#include "resum/series.hpp"

#include <limits>

using namespace resum;
namespace mp = boost::multiprecision;

namespace {

PowerSeries from(std::initializer_list<const char*> cs, std::string var = "g")
{
    std::vector<std::string> v(cs.begin(), cs.end());
    return PowerSeries::parse(v, std::move(var));
}

void require_equal(const PowerSeries& a, const PowerSeries& b, const Real& tol)
{
    REQUIRE(a.order() == b.order());
    for (int k = 0; k <= a.order(); ++k)
        CHECK(mp::abs(a[k] - b[k]) <= tol);
}

}  // namespace

TEST_CASE("product and sum of truncated series")
{
    PowerSeries a = from({"1", "1", "0", "0"});
    PowerSeries b = from({"1", "-1", "0", "0"});
    require_equal(multiply(a, b), from({"1", "0", "-1", "0"}), Real(0));
    require_equal(add(a, b), from({"2", "0", "0", "0"}), Real(0));
    require_equal(scale(a, Real(3)), from({"3", "3", "0", "0"}), Real(0));
}

TEST_CASE("truncation keeps the lower order")
{
    PowerSeries a = from({"1", "2", "3", "4", "5"});
    PowerSeries b = from({"1", "1"});
    CHECK(multiply(a, b).order() == 1);
    CHECK(a.truncated(2).order() == 2);
    CHECK(a.truncated(7)[7] == 0);
}

TEST_CASE("square of sqrt(1-x) is 1-x")
{
    PowerSeries h = binomial_series(Real(1) / 2, 30, "x");
    PowerSeries sq = multiply(h, h);
    CHECK(mp::abs(sq[0] - 1) < eps_digits(2));
    CHECK(mp::abs(sq[1] + 1) < eps_digits(2));
    for (int k = 2; k <= 30; ++k)
        CHECK(mp::abs(sq[k]) < eps_digits(4));
}

TEST_CASE("composition: 1/(1-y) with y = x/(1+x) is 1+x")
{
    const int K = 25;
    std::vector<Real> y(K + 1, Real(0));
    for (int k = 1; k <= K; ++k)
        y[k] = (k % 2 ? 1 : -1);
    PowerSeries inner(y, "x");
    PowerSeries outer = binomial_series(Real(-1), K, "y");
    PowerSeries c = compose(outer, inner);
    CHECK(c.var() == "x");
    CHECK(c[0] == 1);
    CHECK(c[1] == 1);
    for (int k = 2; k <= K; ++k)
        CHECK(mp::abs(c[k]) < eps_digits(4));
}

TEST_CASE("composition needs a vanishing constant term")
{
    CHECK_THROWS_AS(compose(from({"1", "1"}), from({"1", "1"})), DomainError);
}

TEST_CASE("variable mismatch is a usage error")
{
    CHECK_THROWS_AS(multiply(from({"1", "1"}, "g"), from({"1", "1"}, "x")), UsageError);
    CHECK_THROWS_AS(add(from({"1", "1"}, "g"), from({"1", "1"}, "x")), UsageError);
}

TEST_CASE("shifted_down divides by a power of the variable")
{
    PowerSeries s = from({"0", "0", "3", "4"});
    PowerSeries d = s.shifted_down(2);
    CHECK(d.order() == 1);
    CHECK(d[0] == 3);
    CHECK_THROWS_AS(from({"0", "1", "3"}).shifted_down(2), DomainError);
}

TEST_CASE("evaluation by Horner")
{
    CHECK(from({"1", "2", "3"}).evaluate(Real(2)) == 17);
}

TEST_CASE("rational and decimal coefficients parse at working precision")
{
    PowerSeries s = from({"-308/729", "0.1", "1e-3"});
    CHECK(mp::abs(s[0] * 729 + 308) < eps_digits(4));
    CHECK(mp::abs(s[1] * 10 - 1) < eps_digits(2));
    CHECK_THROWS_AS(from({"1", "abc"}), ParseError);
    CHECK_THROWS_AS(from({"1/0"}), ParseError);
}

TEST_CASE("invalid series are rejected")
{
    CHECK_THROWS_AS(PowerSeries(std::vector<Real>{}), UsageError);
    CHECK_THROWS_AS(PowerSeries(std::vector<Real>{Real(1), std::numeric_limits<Real>::infinity()}), DomainError);
}

TEST_CASE("ratio growth constant of (-1)^k k! a^k is 1/a")
{
    const Real a("0.5");
    std::vector<Real> f(31);
    Real fact = 1;
    for (int k = 0; k <= 30; ++k) {
        if (k)
            fact *= k;
        f[k] = (k % 2 ? -1 : 1) * fact * mp::pow(a, k);
    }
    CHECK(mp::abs(ratio_growth_constant(PowerSeries(f), 8) - 2) < eps_digits(4));
    std::vector<Real> pos(f.size());
    for (size_t k = 0; k < f.size(); ++k)
        pos[k] = mp::abs(f[k]);
    CHECK_THROWS_AS(ratio_growth_constant(PowerSeries(pos), 8), DiagnosticError);
    CHECK_THROWS_AS(ratio_growth_constant(PowerSeries(f), 3), UsageError);
}
