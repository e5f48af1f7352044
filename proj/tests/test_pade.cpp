#include "doctest.h"

#include "resum/errors.hpp"
#include "resum/pade.hpp"

using namespace resum;
namespace mp = boost::multiprecision;

namespace {

// Taylor coefficients of N/D through order K by long division
PowerSeries taylor(const Poly& n, const Poly& d, int K)
{
    std::vector<Real> c(K + 1, Real(0));
    for (int k = 0; k <= K; ++k) {
        Real s = k < static_cast<int>(n.size()) ? n[k] : Real(0);
        for (int j = 1; j <= k && j < static_cast<int>(d.size()); ++j)
            s -= d[j] * c[k - j];
        c[k] = s / d[0];
    }
    return PowerSeries(c);
}

}  // namespace

TEST_CASE("rational function is recovered exactly")
{
    Poly n{Real(1), Real(2)};
    Poly d{Real(1), Real(-1), Real(1) / 3};
    PowerSeries s = taylor(n, d, 10);
    PadeApproximant p = pade_fit(s, 1, 2);
    REQUIRE(p.numerator.size() == 2);
    REQUIRE(p.denominator.size() == 3);
    for (size_t i = 0; i < 2; ++i)
        CHECK(mp::abs(p.numerator[i] - n[i]) < eps_digits(6));
    for (size_t i = 0; i < 3; ++i)
        CHECK(mp::abs(p.denominator[i] - d[i]) < eps_digits(6));
    Real g("0.37");
    CHECK(mp::abs(pade_eval(p, g) - horner(n, g) / horner(d, g)) < eps_digits(6));
}

TEST_CASE("[2/2] of exp")
{
    std::vector<Real> c(5);
    Real f = 1;
    for (int k = 0; k <= 4; ++k) {
        if (k)
            f *= k;
        c[k] = 1 / f;
    }
    PadeApproximant p = pade_fit(PowerSeries(c), 2, 2);
    CHECK(mp::abs(p.numerator[1] - Real(1) / 2) < eps_digits(4));
    CHECK(mp::abs(p.numerator[2] - Real(1) / 12) < eps_digits(4));
    CHECK(mp::abs(p.denominator[1] + Real(1) / 2) < eps_digits(4));
    CHECK(mp::abs(p.denominator[2] - Real(1) / 12) < eps_digits(4));
}

TEST_CASE("[0/1] of the alternating series at g = 1")
{
    PowerSeries s(std::vector<Real>{Real(1), Real(-1), Real(1), Real(-1)});
    CHECK(mp::abs(pade_eval(pade_fit(s, 0, 1), Real(1)) - Real(1) / 2) < eps_digits(2));
}

TEST_CASE("Taylor expansion of the approximant matches the input")
{
    std::vector<Real> c;
    for (int k = 0; k <= 9; ++k)
        c.push_back(Real(1) / (k + 1) * (k % 3 ? 1 : -2));
    PowerSeries s(c);
    PadeApproximant p = pade_fit(s, 4, 5);
    PowerSeries t = pade_taylor(p, 9);
    for (int k = 0; k <= 9; ++k)
        CHECK(mp::abs(t[k] - s[k]) < eps_digits(10));
}

TEST_CASE("singular system is rejected with its rank")
{
    // geometric series is [0/1]; asking for [1/2] leaves a rank-deficient system
    PowerSeries s(std::vector<Real>(8, Real(1)));
    CHECK_THROWS_AS(pade_fit(s, 1, 2), DegeneracyError);
    try {
        pade_fit(s, 1, 2);
    } catch (const DegeneracyError& e) {
        CHECK(std::string(e.what()).find("rank") != std::string::npos);
    }
}

TEST_CASE("pole handling")
{
    PowerSeries s(std::vector<Real>(4, Real(1)));
    PadeApproximant p = pade_fit(s, 0, 1);
    CHECK_THROWS_AS(pade_eval_checked(p, Real(1)), PoleError);
    PadeValue v = pade_eval_checked(p, Real(1) - Real("1e-9"));
    CHECK(v.near_pole);
    CHECK_FALSE(pade_eval_checked(p, Real("0.5")).near_pole);
}

TEST_CASE("degrees beyond the series are a usage error")
{
    PowerSeries s(std::vector<Real>{Real(1), Real(2), Real(3)});
    CHECK_THROWS_AS(pade_fit(s, 2, 1), UsageError);
    CHECK_THROWS_AS(pade_fit(s, -1, 1), UsageError);
}
