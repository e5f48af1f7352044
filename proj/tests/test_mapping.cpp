#include "doctest.h"

#include "resum/errors.hpp"
#include "resum/mapping.hpp"
#include "resum/models.hpp"

#include <random>

using namespace resum;
namespace mp = boost::multiprecision;

namespace {

MappingSpec power_cut(const Real& alpha, const Real& p)
{
    MappingSpec m;
    m.alpha = alpha;
    m.prefactor_p = p;
    return m;
}

MappingSpec shifted(const Real& alpha, bool covariant = false)
{
    MappingSpec m;
    m.family = MappingFamily::ShiftedPower;
    m.alpha = alpha;
    m.beta_covariant = covariant;
    return m;
}

PowerSeries row(const RhoPolynomialTable& t, const Real& rho, int K)
{
    std::vector<Real> c;
    for (int l = 0; l <= K; ++l)
        c.push_back(horner(t[l], rho));
    return PowerSeries(c, "λ");
}

// (1-lambda(g))^p sum_l P_l(rho) lambda(g)^l, expanded in g through order K
PowerSeries reexpand(const RhoPolynomialTable& t, const Real& rho, int K)
{
    PowerSeries lam = lambda_series(rho, t.mapping, K);
    PowerSeries body = compose(row(t, rho, K), lam);
    PowerSeries pref = compose(binomial_series(t.mapping.prefactor_p, K, "λ"), lam);
    return multiply(pref, body);
}

std::vector<Real> random_rhos(int n)
{
    std::mt19937 gen(20240611);
    std::uniform_real_distribution<double> d(0.3, 3.0);
    std::vector<Real> out;
    for (int i = 0; i < n; ++i)
        out.push_back(Real(d(gen)));
    return out;
}

}  // namespace

TEST_CASE("zeta series of both families")
{
    PowerSeries z = zeta_series(power_cut(2, 0), 10);
    for (int n = 0; n <= 10; ++n)
        CHECK(z[n] == n);  // lambda/(1-lambda)^2
    PowerSeries s = zeta_series(shifted(Real(3) / 2), 10);
    PowerSeries b = binomial_series(-Real(3) / 2, 10, "λ");
    CHECK(s[0] == 0);
    for (int n = 1; n <= 10; ++n)
        CHECK(mp::abs(s[n] - b[n]) < eps_digits(4));
}

TEST_CASE("lambda_of_g inverts the mapping")
{
    for (const MappingSpec& m : {power_cut(2, 0), power_cut(4, 0), power_cut(Real(3) / 2, 0), shifted(Real(3) / 2)}) {
        for (const char* g : {"0.01", "1", "5", "1000"}) {
            Real rho("0.7");
            Real l = lambda_of_g(Coupling(Real(g)), rho, m);
            CHECK(l > 0);
            CHECK(l < 1);
            Real back = m.family == MappingFamily::PowerCut ? rho * l / mp::pow(1 - l, m.alpha)
                                                           : rho * (mp::pow(1 - l, -m.alpha) - 1);
            CHECK(mp::abs(back - Real(g)) <= eps_digits(10) * Real(g));
        }
        CHECK(lambda_of_g(Coupling::infinity(), Real(1), m) == 1);
    }
}

TEST_CASE("lambda_series composes back to g")
{
    MappingSpec m = power_cut(Real(3) / 2, 0);
    Real rho("1.3");
    PowerSeries lam = lambda_series(rho, m, 12);
    PowerSeries g = compose(scale(zeta_series(m, 12), rho), lam);
    CHECK(mp::abs(g[1] - 1) < eps_digits(6));
    for (int k = 2; k <= 12; ++k)
        CHECK(mp::abs(g[k]) < eps_digits(8));
}

TEST_CASE("re-expansion identity at random rho")
{
    const int K = 14;
    struct Case {
        PowerSeries source;
        MappingSpec m;
    };
    std::vector<Case> cases = {
        {d0_partition_coeffs(K), power_cut(2, Real(1) / 2)},
        {anharmonic_ground_coeffs(K), power_cut(Real(3) / 2, -Real(1) / 2)},
        {rg_series().beta, shifted(Real(3) / 2)},
    };
    for (const auto& c : cases) {
        const int order = std::min(K, c.source.order());
        RhoPolynomialTable t = build_rho_table(c.source, c.m);
        for (const Real& rho : random_rhos(3)) {
            PowerSeries back = reexpand(t, rho, order);
            for (int k = 0; k <= order; ++k)
                CHECK(mp::abs(back[k] - c.source[k]) <= eps_digits(12) * (1 + mp::abs(c.source[k])));
        }
    }
}

TEST_CASE("beta-covariant table is the transformed beta function")
{
    PowerSeries beta = rg_series().beta;
    MappingSpec m = shifted(Real(3) / 2, true);
    RhoPolynomialTable t = build_rho_table(beta, m);
    const int K = beta.order();
    for (const Real& rho : random_rhos(2)) {
        PowerSeries g = scale(zeta_series(m, K), rho);
        PowerSeries bl = multiply(binomial_series(m.alpha + 1, K, "λ"), compose(beta, g));
        bl = scale(bl, 1 / (m.alpha * rho));
        for (int k = 0; k <= K; ++k)
            CHECK(mp::abs(horner(t[k], rho) - bl[k]) < eps_digits(10));
    }
}

TEST_CASE("parallel and serial table builds are identical")
{
    PowerSeries s = d0_partition_coeffs(40);
    MappingSpec m = power_cut(2, Real(1) / 2);
    RhoPolynomialTable a = build_rho_table(s, m);
    RhoPolynomialTable b = build_rho_table_serial(s, m);
    REQUIRE(a.max_order() == b.max_order());
    for (int k = 0; k <= a.max_order(); ++k) {
        REQUIRE(a[k].size() == b[k].size());
        for (size_t i = 0; i < a[k].size(); ++i)
            CHECK(a[k][i] == b[k][i]);
    }
}

TEST_CASE("table polynomial degrees")
{
    RhoPolynomialTable t = build_rho_table(d0_partition_coeffs(10), power_cut(2, Real(1) / 2));
    CHECK(t.max_order() == 10);
    CHECK(t[0].size() == 1);
    CHECK(t[7].size() == 8);
}

TEST_CASE("invalid mappings")
{
    CHECK_THROWS_AS(power_cut(1, 0).validate(), UsageError);
    CHECK_THROWS_AS(shifted(0).validate(), UsageError);
    MappingSpec m = shifted(Real(3) / 2, true);
    m.prefactor_p = 1;
    CHECK_THROWS_AS(m.validate(), UsageError);
    CHECK_THROWS_AS(parse_family("elliptic"), UsageError);
    CHECK_THROWS_AS(build_rho_table(d0_partition_coeffs(5), shifted(Real(3) / 2, true)), UsageError);
}
