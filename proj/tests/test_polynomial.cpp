#include "doctest.h"

#include "resum/errors.hpp"
#include "resum/polynomial.hpp"

#include <boost/math/constants/constants.hpp>

using namespace resum;
namespace mp = boost::multiprecision;

namespace {

// coefficients of prod (x - r_i), ascending
Poly from_roots(const std::vector<Real>& roots)
{
    Poly p{Real(1)};
    for (const auto& r : roots) {
        Poly q(p.size() + 1, Real(0));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= r * p[i];
        }
        p = q;
    }
    return p;
}

}  // namespace

TEST_CASE("simple real roots come out in descending order")
{
    auto r = polynomial_real_roots(from_roots({Real(1), Real(2), Real(3)}));
    REQUIRE(r.size() == 3);
    CHECK(mp::abs(r[0] - 3) < eps_digits(4));
    CHECK(mp::abs(r[1] - 2) < eps_digits(4));
    CHECK(mp::abs(r[2] - 1) < eps_digits(4));
}

TEST_CASE("Wilkinson-type polynomial at working precision")
{
    std::vector<Real> roots;
    for (int i = 1; i <= 20; ++i)
        roots.push_back(Real(i));
    auto r = polynomial_real_roots(from_roots(roots));
    REQUIRE(r.size() == 20);
    for (int i = 0; i < 20; ++i)
        CHECK(mp::abs(r[i] - (20 - i)) < Real("1e-30"));
}

TEST_CASE("Chebyshev roots against the cosine formula")
{
    // T_10 via the three-term recurrence
    Poly t0{Real(1)}, t1{Real(0), Real(1)};
    for (int n = 1; n < 10; ++n) {
        Poly t2(t1.size() + 1, Real(0));
        for (size_t i = 0; i < t1.size(); ++i)
            t2[i + 1] += 2 * t1[i];
        for (size_t i = 0; i < t0.size(); ++i)
            t2[i] -= t0[i];
        t0 = t1;
        t1 = t2;
    }
    auto r = polynomial_real_roots(t1);
    REQUIRE(r.size() == 10);
    const Real pi = boost::math::constants::pi<Real>();
    for (int j = 1; j <= 10; ++j)
        CHECK(mp::abs(r[j - 1] - mp::cos((2 * j - 1) * pi / 20)) < eps_digits(6));
}

TEST_CASE("multiple root is merged with its multiplicity")
{
    auto r = polynomial_real_roots_multiplicity(from_roots({Real(1), Real(1), Real(1), Real(-2)}));
    REQUIRE(r.size() == 2);
    CHECK(mp::abs(r[0].z.re - 1) < eps_digits(6));
    CHECK(r[0].multiplicity == 3);
    CHECK(r[1].multiplicity == 1);
}

TEST_CASE("complex pair is not reported as real")
{
    Poly p{Real(1), Real(0), Real(1)};
    auto all = polynomial_roots(p);
    REQUIRE(all.size() == 2);
    for (const auto& r : all) {
        CHECK_FALSE(r.real);
        CHECK(mp::abs(abs(r.z) - 1) < eps_digits(4));
    }
    CHECK(polynomial_real_roots(p).empty());
}

TEST_CASE("zero roots are split off")
{
    auto r = polynomial_real_roots_multiplicity(Poly{Real(0), Real(0), Real(-5), Real(1)});
    REQUIRE(r.size() == 2);
    CHECK(mp::abs(r[0].z.re - 5) < eps_digits(4));
    CHECK(r[1].z.re == 0);
    CHECK(r[1].multiplicity == 2);
}

TEST_CASE("complex coefficients")
{
    // (x - i)(x - 2) = x^2 - (2 + i) x + 2i
    CPoly p{Cx(0, 2), Cx(-2, -1), Cx(1)};
    auto r = polynomial_roots(p);
    REQUIRE(r.size() == 2);
    CHECK(abs(r[0].z - Cx(2)) < eps_digits(4));
    CHECK(abs(r[1].z - Cx(0, 1)) < eps_digits(4));
}

TEST_CASE("constant polynomial is a usage error")
{
    CHECK_THROWS_AS(polynomial_real_roots(Poly{Real(3)}), UsageError);
    CHECK_THROWS_AS(polynomial_real_roots(Poly{Real(3), Real(0)}), UsageError);
}

TEST_CASE("derivative and degree")
{
    Poly p{Real(1), Real(2), Real(3), Real(0)};
    CHECK(degree(p) == 2);
    Poly d = derivative(p);
    CHECK(d[0] == 2);
    CHECK(d[1] == 6);
    CHECK(horner(p, Real(2)) == 17);
}
