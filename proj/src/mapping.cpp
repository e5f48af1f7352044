#include "resum/mapping.hpp"

#include "resum/errors.hpp"

namespace resum {

namespace mp = boost::multiprecision;

std::string to_string(MappingFamily f)
{
    return f == MappingFamily::PowerCut ? "power-cut" : "shifted-power";
}

MappingFamily parse_family(const std::string& s)
{
    if (s == "power-cut" || s == "POWER_CUT")
        return MappingFamily::PowerCut;
    if (s == "shifted-power" || s == "shifted" || s == "SHIFTED_POWER")
        return MappingFamily::ShiftedPower;
    throw UsageError("unknown mapping family '" + s + "'");
}

void MappingSpec::validate() const
{
    if (family == MappingFamily::PowerCut && !(alpha > 1))
        throw UsageError("power-cut mapping needs alpha > 1");
    if (family == MappingFamily::ShiftedPower && !(alpha > 0))
        throw UsageError("shifted-power mapping needs alpha > 0");
    if (beta_covariant && prefactor_p != 0)
        throw UsageError("beta-covariant mapping excludes a prefactor exponent");
}

PowerSeries zeta_series(const MappingSpec& m, int order)
{
    if (order < 1)
        throw UsageError("zeta_series: order must be >= 1");
    m.validate();
    std::vector<Real> z(static_cast<size_t>(order + 1), Real(0));
    if (m.family == MappingFamily::PowerCut) {
        PowerSeries b = binomial_series(-m.alpha, order - 1);
        for (int k = 1; k <= order; ++k)
            z[k] = b[k - 1];
    } else {
        PowerSeries b = binomial_series(-m.alpha, order);
        for (int k = 1; k <= order; ++k)
            z[k] = b[k];
    }
    return PowerSeries(std::move(z), "λ");
}

namespace {

struct TablePlan {
    int K;
    PowerSeries prefactor;
    std::vector<PowerSeries> zeta_pow;  // zeta^n, n = 0..K
};

TablePlan plan(const PowerSeries& source, const MappingSpec& m)
{
    m.validate();
    if (source.order() < 1)
        throw UsageError("build_rho_table: source order must be >= 1");
    if (m.beta_covariant && source[0] != 0)
        throw UsageError("build_rho_table: beta-covariant source must vanish at the origin");
    const int K = source.order();
    TablePlan p{K, PowerSeries(), {}};
    if (m.beta_covariant)
        p.prefactor = scale(binomial_series(m.alpha + 1, K), 1 / m.alpha);
    else
        p.prefactor = binomial_series(-m.prefactor_p, K);
    PowerSeries zeta = zeta_series(m, K);
    p.zeta_pow.reserve(static_cast<size_t>(K + 1));
    p.zeta_pow.push_back(PowerSeries::constant(Real(1), K, "λ"));
    for (int n = 1; n <= K; ++n)
        p.zeta_pow.push_back(multiply(p.zeta_pow.back(), zeta));
    return p;
}

RhoPolynomialTable empty_table(const TablePlan& p, const MappingSpec& m)
{
    RhoPolynomialTable t;
    t.mapping = m;
    t.source_order = p.K;
    t.polys.resize(static_cast<size_t>(p.K + 1));
    for (int k = 0; k <= p.K; ++k) {
        size_t len = m.beta_covariant ? static_cast<size_t>(std::max(k, 1)) : static_cast<size_t>(k + 1);
        t.polys[k].assign(len, Real(0));
    }
    return t;
}

// fills the rho^(n - shift) column of every P_k
void fill_column(RhoPolynomialTable& t, const TablePlan& p, const PowerSeries& source, int n)
{
    const int shift = t.mapping.beta_covariant ? 1 : 0;
    if (n < shift || source[n] == 0)
        return;
    PowerSeries c = multiply(p.prefactor, p.zeta_pow[n]);
    for (int k = n; k <= p.K; ++k)
        t.polys[k][n - shift] = source[n] * c[k];
}

}  // namespace

RhoPolynomialTable build_rho_table_serial(const PowerSeries& source, const MappingSpec& m)
{
    TablePlan p = plan(source, m);
    RhoPolynomialTable t = empty_table(p, m);
    for (int n = 0; n <= p.K; ++n)
        fill_column(t, p, source, n);
    return t;
}

RhoPolynomialTable build_rho_table(const PowerSeries& source, const MappingSpec& m)
{
    TablePlan p = plan(source, m);
    RhoPolynomialTable t = empty_table(p, m);
    // columns are disjoint, so no synchronisation is needed
#pragma omp parallel for schedule(dynamic)
    for (int n = 0; n <= p.K; ++n)
        fill_column(t, p, source, n);
    return t;
}

Real lambda_of_g(const Coupling& g, const Real& rho, const MappingSpec& m)
{
    if (g.infinite)
        return Real(1);
    if (g.value < 0)
        throw DomainError("lambda_of_g: g < 0 is outside the inversion branch");
    if (!(rho > 0))
        throw DomainError("lambda_of_g: rho must be positive");
    if (g.value == 0)
        return Real(0);
    const Real t = g.value / rho;
    if (m.family == MappingFamily::ShiftedPower)
        return 1 - mp::pow(1 + t, -1 / m.alpha);

    // lambda (1-lambda)^(-alpha) = t, increasing on [0,1)
    const int digits = current_precision().decimal_digits;
    const Real tol = pow10(2 - digits);
    Real lo = 0, hi = 1;
    Real x = t / (1 + t);  // exact for alpha = 1, a fair start otherwise
    for (int it = 0; it < 20 * digits; ++it) {
        Real om = 1 - x;
        Real h = x * mp::pow(om, -m.alpha) - t;
        if (h > 0)
            hi = x;
        else
            lo = x;
        Real dh = mp::pow(om, -m.alpha - 1) * (om + m.alpha * x);
        Real nx = x - h / dh;
        if (!(nx > lo && nx < hi))
            nx = (lo + hi) / 2;
        if (mp::abs(nx - x) <= tol * nx || hi - lo <= tol * lo) {
            x = nx;
            break;
        }
        x = nx;
    }
    return x;
}

Cx lambda_of_g(const Coupling& g, const Cx& rho, const MappingSpec& m)
{
    if (g.infinite)
        return Cx(1);
    if (is_real(rho) && rho.re > 0)
        return Cx(lambda_of_g(g, rho.re, m));
    if (g.value < 0)
        throw DomainError("lambda_of_g: g < 0 is outside the inversion branch");
    if (g.value == 0)
        return Cx(0);
    if (m.family != MappingFamily::ShiftedPower)
        throw UsageError("lambda_of_g: complex rho at finite g needs the shifted-power family");
    return Cx(1) - pow(Cx(1) + Cx(g.value) / rho, -1 / m.alpha);
}

PowerSeries lambda_series(const Real& rho, const MappingSpec& m, int K)
{
    PowerSeries zeta = zeta_series(m, std::max(K, 1)).relabeled("g");
    const Real z1 = zeta[1];
    // fixed point lambda = (g/rho - (zeta(lambda) - z1 lambda)) / z1, one order per pass
    std::vector<Real> rest = zeta.coeffs();
    rest[1] = 0;
    PowerSeries higher(std::move(rest), "g");
    std::vector<Real> l(static_cast<size_t>(K + 1), Real(0));
    if (K >= 1)
        l[1] = 1 / (rho * z1);
    PowerSeries lam(l, "g");
    for (int pass = 1; pass < K; ++pass) {
        PowerSeries h = compose(higher, lam);
        std::vector<Real> c(static_cast<size_t>(K + 1), Real(0));
        c[1] = 1 / rho;
        for (int k = 0; k <= K; ++k)
            c[k] = (c[k] - h[k]) / z1;
        lam = PowerSeries(std::move(c), "g");
    }
    return lam;
}

}  // namespace resum
