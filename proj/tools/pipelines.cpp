#include "pipelines.hpp"

#include "resum/errors.hpp"

namespace resum::pipelines {

namespace mp = boost::multiprecision;

OdmSetup d0_strong_setup()
{
    OdmSetup s;
    s.mapping.family = MappingFamily::PowerCut;
    s.mapping.alpha = 2;
    s.mapping.prefactor_p = Real(1) / 2;
    s.g = Coupling::infinity();
    // alpha = 2: ln|delta| is linear in k
    s.error_vs_k = true;
    return s;
}

OdmSetup d0_g5_setup()
{
    OdmSetup s;
    s.mapping.family = MappingFamily::PowerCut;
    s.mapping.alpha = 4;
    s.mapping.prefactor_p = Real(1) / 2;
    s.g = Coupling(5);
    return s;
}

OdmSetup anharmonic_setup()
{
    OdmSetup s;
    s.mapping.family = MappingFamily::PowerCut;
    s.mapping.alpha = Real(3) / 2;
    s.mapping.prefactor_p = -Real(1) / 2;
    s.g = Coupling::infinity();
    return s;
}

namespace {

OdmRun run(const OdmSetup& setup, const PowerSeries& source, const Real& oracle, bool parallel)
{
    RhoPolynomialTable t = parallel ? build_rho_table(source, setup.mapping)
                                    : build_rho_table_serial(source, setup.mapping);
    StudyOptions o;
    o.k_min = setup.k_min;
    o.error_vs_k = setup.error_vs_k;
    o.parallel = parallel;
    return OdmRun{setup, oracle, convergence_study(t, setup.crit, setup.k_max, setup.g, oracle, o)};
}

}  // namespace

OdmRun run_d0_strong(bool parallel)
{
    OdmSetup s = d0_strong_setup();
    return run(s, d0_partition_coeffs(s.source_order), d0_strong_amplitude(), parallel);
}

OdmRun run_d0_g5(bool parallel)
{
    OdmSetup s = d0_g5_setup();
    return run(s, d0_partition_coeffs(s.source_order), d0_partition_value(s.g), parallel);
}

OdmRun run_anharmonic(bool parallel)
{
    OdmSetup s = anharmonic_setup();
    DiagonalizationOptions d;
    d.relative_tolerance = Real("1e-30");
    Real oracle = anharmonic_ground_value(Coupling::infinity(), d);
    return run(s, anharmonic_ground_coeffs(s.source_order), oracle, parallel);
}

MappingSpec phi4_mapping(bool beta_covariant)
{
    MappingSpec m;
    m.family = MappingFamily::ShiftedPower;
    m.alpha = Real(3) / 2;
    m.beta_covariant = beta_covariant;
    return m;
}

RhoSelectionCriterion phi4_fixed_point_criterion()
{
    RhoSelectionCriterion c;
    c.mode = SelectionMode::StationaryThenRoot;
    c.smallness = 1;
    c.allow_complex = true;
    c.cluster_fraction = Real(1) / 2;
    return c;
}

RhoSelectionCriterion phi4_exponent_criterion()
{
    RhoSelectionCriterion c;
    c.mode = SelectionMode::Root;
    c.allow_complex = true;
    return c;
}

std::vector<FixedPointResult> run_phi4_fixed_points(int k_min, int k_max)
{
    RhoPolynomialTable bt = build_rho_table(rg_series().beta, phi4_mapping(true));
    std::vector<FixedPointResult> out;
    for (int k = k_min; k <= k_max; ++k)
        out.push_back(fixed_point(bt, k, phi4_fixed_point_criterion()));
    return out;
}

std::vector<ExponentsResult> run_phi4_exponents(const Real& g_star, int k_min, int k_max)
{
    RgSeriesSet rg = rg_series();
    MappingSpec m = phi4_mapping(false);
    RhoPolynomialTable gt = build_rho_table(rg.gamma_inv, m);
    RhoPolynomialTable et = build_rho_table(rg.eta.shifted_down(2), m);
    RhoPolynomialTable nt = build_rho_table(rg_nu_inverse(rg), m);
    std::vector<ExponentsResult> out;
    for (int k = k_min; k <= k_max; ++k)
        out.push_back(exponents_at(g_star, gt, et, k, phi4_exponent_criterion(), &nt));
    return out;
}

namespace {

BorelConfig borel_config(int k, const Real& sigma)
{
    BorelConfig c;
    c.sigma = sigma;
    c.a = rg_series().large_order_a;
    c.truncation = k;
    return c;
}

// secant on the summed beta function, started near the expected zero
Real borel_zero(const PowerSeries& beta, const BorelConfig& c)
{
    Real x0("1.4"), x1("1.45");
    Real f0 = borel_sum(beta, c, x0).value, f1 = borel_sum(beta, c, x1).value;
    const Real tol = eps_digits(current_precision().decimal_digits / 2);
    for (int it = 0; it < 60; ++it) {
        if (f1 == f0)
            break;
        Real x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 > 0))
            x2 = x1 / 2;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = borel_sum(beta, c, x1).value;
        if (mp::abs(x1 - x0) <= tol * x1)
            return x1;
    }
    throw SolverFailure("Borel-summed beta function: no zero found at order " + std::to_string(c.truncation));
}

}  // namespace

BorelRowResult borel_exponents(int k, const Real& sigma)
{
    RgSeriesSet rg = rg_series();
    BorelConfig c = borel_config(k, sigma);
    BorelRowResult r;
    r.k = k;
    r.sigma = sigma;
    r.g_star = borel_zero(rg.beta, c);
    r.gamma = 1 / borel_sum(rg.gamma_inv, c, r.g_star).value;
    r.nu = 1 / borel_sum(rg_nu_inverse(rg), c, r.g_star).value;
    return r;
}

Real borel_select_sigma(int k_max)
{
    RgSeriesSet rg = rg_series();
    Real best_sigma = 0, best = -1;
    for (int s = 0; s <= 3; ++s) {
        Real a = borel_zero(rg.beta, borel_config(k_max, s));
        Real b = borel_zero(rg.beta, borel_config(k_max - 1, s));
        Real move = mp::abs(a - b);
        if (best < 0 || move < best) {
            best = move;
            best_sigma = s;
        }
    }
    return best_sigma;
}

std::vector<BorelRowResult> run_borel_exponents(const Real& sigma, int k_min, int k_max)
{
    std::vector<BorelRowResult> out;
    for (int k = k_min; k <= k_max; ++k)
        out.push_back(borel_exponents(k, sigma));
    return out;
}

}  // namespace resum::pipelines
