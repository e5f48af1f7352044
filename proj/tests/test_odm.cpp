#include "doctest.h"

#include "resum/errors.hpp"
#include "resum/models.hpp"
#include "resum/odm.hpp"

using namespace resum;
namespace mp = boost::multiprecision;

namespace {

MappingSpec d0_mapping()
{
    MappingSpec m;
    m.alpha = 2;
    m.prefactor_p = Real(1) / 2;
    return m;
}

MappingSpec toy_beta_mapping(const Real& alpha)
{
    MappingSpec m;
    m.family = MappingFamily::ShiftedPower;
    m.alpha = alpha;
    m.beta_covariant = true;
    return m;
}

}  // namespace

TEST_CASE("d0 amplitude at order 30")
{
    RhoPolynomialTable t = build_rho_table(d0_partition_coeffs(40), d0_mapping());
    OdmReport r = odm_value(t, 30, RhoSelectionCriterion{}, Coupling::infinity());
    CHECK(r.evaluated);
    CHECK(mp::abs(r.value - d0_strong_amplitude()) < Real("1e-10"));
    CHECK(r.has_error_estimate);
    CHECK(r.lambda == Cx(1));
}

TEST_CASE("finite g value and the error estimate")
{
    RhoPolynomialTable t = build_rho_table(d0_partition_coeffs(30), d0_mapping());
    Real exact = d0_partition_value(Coupling(Real(1)));
    OdmReport r = odm_value(t, 20, RhoSelectionCriterion{}, Coupling(Real(1)));
    Real err = mp::abs(r.value - exact);
    CHECK(err < Real("1e-8"));
    CHECK(r.has_error_estimate);
    // the next term is a fair order-of-magnitude proxy
    CHECK(err < 100 * r.error_estimate);
}

TEST_CASE("selected root really is a zero of P_k")
{
    RhoPolynomialTable t = build_rho_table(d0_partition_coeffs(20), d0_mapping());
    RhoSelectionCriterion c;
    c.mode = SelectionMode::Root;
    OdmReport r = select_rho(t, 9, c);
    REQUIRE(r.chosen_from == "root");
    Real scale = 0;
    for (size_t i = 0; i < t[9].size(); ++i)
        scale += mp::abs(t[9][i]) * mp::pow(r.rho.re, static_cast<int>(i));
    CHECK(mp::abs(horner(t[9], r.rho.re)) <= eps_digits(10) * scale);
}

TEST_CASE("no passing candidate falls back to the first and flags it")
{
    RhoPolynomialTable t = build_rho_table(d0_partition_coeffs(20), d0_mapping());
    RhoSelectionCriterion c;
    c.mode = SelectionMode::Root;
    c.smallness = Real("1e-30");
    OdmReport r = select_rho(t, 9, c);
    CHECK(r.flagged);
    CHECK_FALSE(r.diagnostic.empty());
}

TEST_CASE("even d0 orders have no positive root; mixed mode takes a stationary point")
{
    RhoPolynomialTable t = build_rho_table(d0_partition_coeffs(20), d0_mapping());
    RhoSelectionCriterion root;
    root.mode = SelectionMode::Root;
    CHECK_THROWS_AS(select_rho(t, 10, root), SelectionFailure);
    OdmReport r = select_rho(t, 10, RhoSelectionCriterion{});
    CHECK(r.chosen_from == "stationary");
}

TEST_CASE("order outside the table")
{
    RhoPolynomialTable t = build_rho_table(d0_partition_coeffs(10), d0_mapping());
    CHECK_THROWS_AS(select_rho(t, 11, RhoSelectionCriterion{}), UsageError);
    CHECK_THROWS_AS(select_rho(t, 0, RhoSelectionCriterion{}), UsageError);
    RhoSelectionCriterion bad;
    bad.smallness = 0;
    CHECK_THROWS_AS(select_rho(t, 5, bad), UsageError);
}

TEST_CASE("toy beta function -g + g^2 has its zero at exactly 1")
{
    // with alpha = 1 the transformed beta function is the polynomial -l + (1 + rho) l^2
    PowerSeries beta(std::vector<Real>{Real(0), Real(-1), Real(1), Real(0), Real(0), Real(0)}, "g̃");
    RhoPolynomialTable t = build_rho_table(beta, toy_beta_mapping(Real(1)));
    for (const char* rho : {"0.5", "1", "2.7"})
        for (int k : {2, 3, 5}) {
            FixedPointResult f = fixed_point_at(t, k, Cx(Real(rho)));
            CHECK(mp::abs(f.g_star - 1) < eps_digits(8));
            CHECK(mp::abs(f.omega - 1) < eps_digits(8));
            CHECK(mp::abs(f.lambda_star.re - 1 / (1 + Real(rho))) < eps_digits(8));
        }
}

TEST_CASE("phi4 fixed point and exponents are stable in k")
{
    RgSeriesSet rg = rg_series();
    RhoPolynomialTable bt = build_rho_table(rg.beta, toy_beta_mapping(Real(3) / 2));
    RhoSelectionCriterion c;
    c.mode = SelectionMode::StationaryThenRoot;
    c.smallness = 1;
    c.allow_complex = true;
    c.cluster_fraction = Real(1) / 2;
    FixedPointResult f6 = fixed_point(bt, 6, c), f7 = fixed_point(bt, 7, c);
    CHECK(mp::abs(f6.g_star - f7.g_star) < Real("0.001"));
    CHECK(f7.lambda_star.re > 0);
    CHECK(f7.lambda_star.re < 1);
}

TEST_CASE("eta falls back to the gamma rho when its polynomial has no candidate")
{
    RgSeriesSet rg = rg_series();
    MappingSpec m;
    m.family = MappingFamily::ShiftedPower;
    m.alpha = Real(3) / 2;
    RhoPolynomialTable gt = build_rho_table(rg.gamma_inv, m);
    RhoPolynomialTable et = build_rho_table(rg.eta.shifted_down(2), m);
    RhoSelectionCriterion c;
    c.mode = SelectionMode::Root;
    c.allow_complex = true;
    ExponentsResult e = exponents_at(Real("1.411"), gt, et, 3, c);
    CHECK(e.eta_report.flagged);
    CHECK(e.eta_report.rho == e.gamma_report.rho);
    CHECK_FALSE(e.has_nu_direct);
    CHECK(mp::abs(e.nu_scaling - e.gamma / (2 - e.eta)) < eps_digits(4));
}

TEST_CASE("least-squares line")
{
    std::vector<Real> x{Real(1), Real(2), Real(3), Real(4)}, y;
    for (const auto& v : x)
        y.push_back(3 * v - 2);
    LinearFit f = fit_line(x, y);
    CHECK(mp::abs(f.slope - 3) < eps_digits(4));
    CHECK(mp::abs(f.intercept + 2) < eps_digits(4));
    CHECK(f.points == 4);
    CHECK_THROWS_AS(fit_line({Real(1)}, {Real(1)}), FitFailure);
}

TEST_CASE("convergence study: serial and parallel agree bit for bit")
{
    RhoPolynomialTable t = build_rho_table(d0_partition_coeffs(26), d0_mapping());
    StudyOptions par, ser;
    par.k_min = ser.k_min = 5;
    ser.parallel = false;
    Real oracle = d0_strong_amplitude();
    ConvergenceStudy a = convergence_study(t, RhoSelectionCriterion{}, 25, Coupling::infinity(), oracle, par);
    ConvergenceStudy b = convergence_study(t, RhoSelectionCriterion{}, 25, Coupling::infinity(), oracle, ser);
    REQUIRE(a.reports.size() == b.reports.size());
    for (size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].rho == b.reports[i].rho);
        CHECK(a.reports[i].value == b.reports[i].value);
    }
    REQUIRE(a.inverse_rho);
    CHECK(a.inverse_rho->full.slope == b.inverse_rho->full.slope);
}

TEST_CASE("convergence study needs enough orders to fit")
{
    RhoPolynomialTable t = build_rho_table(d0_partition_coeffs(10), d0_mapping());
    StudyOptions o;
    o.k_min = 5;
    CHECK_THROWS_AS(convergence_study(t, RhoSelectionCriterion{}, 8, Coupling::infinity(), d0_strong_amplitude(), o),
                    FitFailure);
    CHECK_THROWS_AS(convergence_study(t, RhoSelectionCriterion{}, 10, Coupling::infinity(), std::nullopt, o),
                    UsageError);
}

TEST_CASE("convergent geometric series: rho_k settles to a nonzero value")
{
    std::vector<Real> c(42);
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = k % 2 ? -1 : 1;
    MappingSpec m;
    m.alpha = 2;
    RhoPolynomialTable t = build_rho_table(PowerSeries(c), m);
    StudyOptions o;
    o.k_min = 10;
    ConvergenceStudy s = convergence_study(t, RhoSelectionCriterion{}, 40, Coupling(Real(2)), Real(1) / 3, o);
    Real r30 = abs(s.reports[20].rho), r40 = abs(s.reports[30].rho);
    CHECK(r40 > Real("0.05"));
    CHECK(mp::abs(r40 - r30) < Real("0.2") * r40);
    CHECK(mp::abs(s.reports[30].value - Real(1) / 3) < Real("1e-6"));
}
