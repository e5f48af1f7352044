#include "resum/odm.hpp"

#include "resum/errors.hpp"

#include <algorithm>
#include <exception>
#include <limits>

namespace resum {

namespace mp = boost::multiprecision;

std::string to_string(SelectionMode m)
{
    switch (m) {
    case SelectionMode::Root: return "root";
    case SelectionMode::Stationary: return "stationary";
    case SelectionMode::Mixed: return "mixed";
    case SelectionMode::StationaryThenRoot: return "stationary-then-root";
    }
    return "?";
}

SelectionMode parse_selection_mode(const std::string& s)
{
    if (s == "root" || s == "ROOT")
        return SelectionMode::Root;
    if (s == "stationary" || s == "STATIONARY")
        return SelectionMode::Stationary;
    if (s == "mixed" || s == "MIXED")
        return SelectionMode::Mixed;
    if (s == "stationary-then-root")
        return SelectionMode::StationaryThenRoot;
    throw UsageError("unknown selection mode '" + s + "'");
}

void RhoSelectionCriterion::validate() const
{
    if (!(smallness > 0))
        throw UsageError("smallness factor tau must be positive");
    if (cluster_fraction < 0 || cluster_fraction >= 1)
        throw UsageError("cluster fraction must lie in [0, 1)");
}

namespace {

Cx eval_c(const Poly& p, const Cx& x)
{
    if (is_real(x))
        return Cx(horner(p, x.re));
    return horner(p, x);
}

std::vector<RhoCandidate> candidates(const RhoPolynomialTable& t, int k, bool stationary,
                                     const RhoSelectionCriterion& crit)
{
    const Poly& pk = t[k];
    const Poly dpk = derivative(pk);
    const Poly& target = stationary ? dpk : pk;
    std::vector<RhoCandidate> out;
    if (degree(target) < 1)
        return out;
    const Real im_tol = pow10(-current_precision().decimal_digits / 4);
    for (const Root& r : polynomial_roots(target)) {
        const Real m = abs(r.z);
        if (m == 0)
            continue;
        bool ok;
        if (r.real)
            ok = r.z.re > 0;
        else
            ok = crit.allow_complex && r.z.im > 0 && r.z.re >= -im_tol * m;
        if (!ok)
            continue;
        RhoCandidate c;
        c.rho = r.real ? Cx(r.z.re) : r.z;
        c.stationary = stationary;
        c.abs_p = abs(eval_c(pk, c.rho));
        c.abs_dp = abs(eval_c(dpk, c.rho));
        const Real neighbour = k >= 1 ? abs(eval_c(t[k - 1], c.rho)) : Real(0);
        if (neighbour == 0) {
            c.ratio = std::numeric_limits<Real>::infinity();
        } else if (stationary) {
            c.ratio = c.abs_p / neighbour;
        } else {
            c.ratio = c.abs_dp * m / (neighbour * k);
        }
        c.passes = c.ratio <= crit.smallness;
        out.push_back(std::move(c));
    }
    // real candidates first, each group by modulus descending; total order
    std::sort(out.begin(), out.end(), [](const RhoCandidate& a, const RhoCandidate& b) {
        bool ra = is_real(a.rho), rb = is_real(b.rho);
        if (ra != rb)
            return ra;
        Real ma = abs(a.rho), mb = abs(b.rho);
        if (ma != mb)
            return ma > mb;
        if (a.rho.re != b.rho.re)
            return a.rho.re > b.rho.re;
        return a.rho.im > b.rho.im;
    });
    if (crit.cluster_fraction > 0 && !out.empty()) {
        Real mmax = 0;
        for (const auto& c : out)
            mmax = std::max<Real>(mmax, abs(c.rho));
        const Real cut = crit.cluster_fraction * mmax;
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [&cut](const RhoCandidate& c) { return abs(c.rho) < cut; }),
                  out.end());
    }
    return out;
}

bool choose(OdmReport& r, std::vector<RhoCandidate> cands, const char* kind)
{
    if (cands.empty())
        return false;
    auto it = std::find_if(cands.begin(), cands.end(), [](const RhoCandidate& c) { return c.passes; });
    if (it == cands.end()) {
        it = cands.begin();
        r.flagged = true;
        r.diagnostic = std::string("no ") + kind + " candidate passed the smallness test; took the first";
    }
    r.rho = it->rho;
    r.chosen_from = kind;
    r.candidates.insert(r.candidates.end(), cands.begin(), cands.end());
    return true;
}

void check_order(const RhoPolynomialTable& t, int k)
{
    if (k < 1 || k > t.max_order())
        throw UsageError("order " + std::to_string(k) + " outside the table (1.." +
                         std::to_string(t.max_order()) + ")");
}

}  // namespace

OdmReport select_rho(const RhoPolynomialTable& t, int k, const RhoSelectionCriterion& crit)
{
    check_order(t, k);
    crit.validate();
    OdmReport r;
    r.k = k;
    bool ok = false;
    switch (crit.mode) {
    case SelectionMode::Root:
        ok = choose(r, candidates(t, k, false, crit), "root");
        break;
    case SelectionMode::Stationary:
        ok = choose(r, candidates(t, k, true, crit), "stationary");
        break;
    case SelectionMode::Mixed:
        ok = choose(r, candidates(t, k, false, crit), "root") ||
             choose(r, candidates(t, k, true, crit), "stationary");
        break;
    case SelectionMode::StationaryThenRoot:
        ok = choose(r, candidates(t, k, true, crit), "stationary") ||
             choose(r, candidates(t, k, false, crit), "root");
        break;
    }
    if (!ok)
        throw SelectionFailure("order " + std::to_string(k) + ": no admissible root or stationary point");
    return r;
}

void evaluate(const RhoPolynomialTable& t, OdmReport& r, const Coupling& g)
{
    const MappingSpec& m = t.mapping;
    const int k = r.k;
    Cx sum(0), pref(1), lam;
    if (g.infinite) {
        if (m.family == MappingFamily::ShiftedPower)
            throw UsageError("g = inf is not supported for the shifted-power family");
        lam = Cx(1);
        for (int l = 0; l <= k; ++l)
            sum += eval_c(t[l], r.rho);
        pref = pow(r.rho, m.prefactor_p / m.alpha);
    } else {
        lam = lambda_of_g(g, r.rho, m);
        Cx lp(1);
        for (int l = 0; l <= k; ++l) {
            sum += eval_c(t[l], r.rho) * lp;
            lp *= lam;
        }
        if (m.prefactor_p != 0)
            pref = pow(Cx(1) - lam, m.prefactor_p);
    }
    Cx v = pref * sum;
    r.value = v.re;
    r.value_imag = v.im;
    r.lambda = lam;
    r.evaluated = true;
    r.has_error_estimate = false;
    if (k + 1 <= t.max_order()) {
        Cx next = eval_c(t[k + 1], r.rho);
        Cx lk(1);
        if (!g.infinite)
            for (int i = 0; i <= k; ++i)
                lk *= lam;
        r.error_estimate = abs(next * lk * pref);
        r.has_error_estimate = true;
    }
}

OdmReport odm_value(const RhoPolynomialTable& t, int k, const RhoSelectionCriterion& crit, const Coupling& g)
{
    OdmReport r = select_rho(t, k, crit);
    evaluate(t, r, g);
    return r;
}

OdmReport odm_value_at(const RhoPolynomialTable& t, int k, const Cx& rho, const Coupling& g)
{
    if (k < 0 || k > t.max_order())
        throw UsageError("order " + std::to_string(k) + " outside the table");
    OdmReport r;
    r.k = k;
    r.rho = rho;
    r.chosen_from = "given";
    evaluate(t, r, g);
    return r;
}

FixedPointResult fixed_point_at(const RhoPolynomialTable& beta, int k, const Cx& rho)
{
    const MappingSpec& m = beta.mapping;
    if (!m.beta_covariant)
        throw UsageError("fixed_point needs a beta-covariant table");
    check_order(beta, k);
    // beta_lambda / lambda = sum_{l>=1} P_l(rho) lambda^(l-1)
    CPoly q;
    for (int l = 1; l <= k; ++l)
        q.push_back(eval_c(beta[l], rho));
    CPoly full = q;
    Real cmax = 0;
    for (const auto& c : q)
        cmax = std::max<Real>(cmax, abs(c));
    // when rho is a root of P_k the top coefficient is rounding noise
    const Real cut = eps_digits(10) * cmax;
    while (q.size() > 1 && abs(q.back()) <= cut)
        q.pop_back();
    if (q.size() < 2)
        throw FixedPointFailure("order " + std::to_string(k) + ": truncated beta has no nontrivial zero");

    std::vector<Root> roots;
    if (is_real(rho)) {
        Poly rq;
        for (const auto& c : q)
            rq.push_back(c.re);
        roots = polynomial_roots(rq);
    } else {
        roots = polynomial_roots(q);
    }
    const Root* best = nullptr;
    auto better = [](const Root& a, const Root* b) {
        if (!b)
            return true;
        if (a.real != b->real)
            return a.real;
        Real ma = abs(a.z), mb = abs(b->z);
        if (ma != mb)
            return ma < mb;
        return a.z.im > b->z.im;
    };
    for (const Root& r : roots)
        if (r.z.re > 0 && r.z.re < 1 && better(r, best))
            best = &r;
    if (!best)
        throw FixedPointFailure("order " + std::to_string(k) + ": no zero with 0 < Re lambda < 1");

    FixedPointResult fp;
    fp.k = k;
    fp.selection.k = k;
    fp.selection.rho = rho;
    fp.selection.chosen_from = "given";
    fp.lambda_star = best->z;
    const Cx& lam = fp.lambda_star;
    const Cx om = Cx(1) - lam;
    const Cx om_a = pow(om, -m.alpha);  // (1-lambda)^(-alpha)
    Cx dg;                             // dg/dlambda
    if (m.family == MappingFamily::ShiftedPower) {
        fp.g_star_c = rho * (om_a - Cx(1));
        dg = rho * Cx(m.alpha) * om_a / om;
    } else {
        fp.g_star_c = rho * lam * om_a;
        dg = rho * om_a / om * (om + Cx(m.alpha) * lam);
    }
    // d beta_lambda / d lambda from the full truncated series
    Cx dbl(0), lp(1);
    for (size_t i = 0; i < full.size(); ++i) {
        dbl += full[i] * Cx(static_cast<int>(i + 1)) * lp;
        lp *= lam;
    }
    // beta = alpha rho (1-lambda)^(-alpha-1) beta_lambda; at a zero only the derivative term survives
    fp.omega_c = Cx(m.alpha) * rho * om_a / om * dbl / dg;
    fp.g_star = fp.g_star_c.re;
    fp.omega = fp.omega_c.re;
    return fp;
}

FixedPointResult fixed_point(const RhoPolynomialTable& beta, int k, const RhoSelectionCriterion& crit)
{
    OdmReport sel = select_rho(beta, k, crit);
    FixedPointResult fp = fixed_point_at(beta, k, sel.rho);
    fp.selection = std::move(sel);
    return fp;
}

ExponentsResult exponents_at(const Real& g_star, const RhoPolynomialTable& gamma_inv,
                             const RhoPolynomialTable& eta_over_g2, int k, const RhoSelectionCriterion& crit,
                             const RhoPolynomialTable* nu_inv)
{
    if (!(g_star > 0))
        throw UsageError("exponents_at: g* must be positive");
    const Coupling g(g_star);
    ExponentsResult e;
    e.k = k;
    e.gamma_report = odm_value(gamma_inv, k, crit, g);
    e.gamma = 1 / e.gamma_report.value;

    const int ke = k - 2;
    if (ke < 1) {
        e.eta_report = odm_value_at(eta_over_g2, std::max(ke, 0), e.gamma_report.rho, g);
    } else {
        try {
            e.eta_report = odm_value(eta_over_g2, ke, crit, g);
        } catch (const SelectionFailure& err) {
            e.eta_report = odm_value_at(eta_over_g2, ke, e.gamma_report.rho, g);
            e.eta_report.flagged = true;
            e.eta_report.diagnostic = std::string(err.what()) + "; reused the gamma^{-1} rho";
        }
    }
    e.eta = g_star * g_star * e.eta_report.value;
    e.nu_scaling = e.gamma / (2 - e.eta);
    if (nu_inv) {
        e.nu_report = odm_value(*nu_inv, k, crit, g);
        e.nu_direct = 1 / e.nu_report.value;
        e.has_nu_direct = true;
    }
    return e;
}

LinearFit fit_line(const std::vector<Real>& x, const std::vector<Real>& y)
{
    const size_t n = x.size();
    if (n < 2 || y.size() != n)
        throw FitFailure("linear fit needs at least two points");
    Real sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const Real mx = sx / n, my = sy / n;
    Real sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0)
        throw FitFailure("linear fit: abscissae coincide");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.points = static_cast<int>(n);
    return f;
}

namespace {

ConvergenceFit fit_parities(const std::vector<int>& k, const std::vector<Real>& x, const std::vector<Real>& y)
{
    std::vector<Real> xe, ye, xo, yo;
    for (size_t i = 0; i < k.size(); ++i) {
        if (k[i] % 2 == 0) {
            xe.push_back(x[i]);
            ye.push_back(y[i]);
        } else {
            xo.push_back(x[i]);
            yo.push_back(y[i]);
        }
    }
    return ConvergenceFit{fit_line(x, y), fit_line(xe, ye), fit_line(xo, yo)};
}

}  // namespace

ConvergenceStudy convergence_study(const RhoPolynomialTable& t, const RhoSelectionCriterion& crit, int K,
                                   const Coupling& g, std::optional<Real> oracle, const StudyOptions& opt)
{
    if (K > t.max_order() - 1)
        throw UsageError("convergence_study: K must be at most source order - 1");
    if (opt.k_min < 1 || opt.k_min > K)
        throw UsageError("convergence_study: bad order range");
    crit.validate();
    const int n = K - opt.k_min + 1;
    ConvergenceStudy s;
    s.reports.resize(static_cast<size_t>(n));
    s.delta.resize(static_cast<size_t>(n));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(n));

    auto run = [&](int i) {
        const int k = opt.k_min + i;
        try {
            s.reports[i] = odm_value(t, k, crit, g);
        } catch (const SelectionFailure& e) {
            s.reports[i].k = k;
            s.reports[i].diagnostic = e.what();
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            run(i);
    } else {
        for (int i = 0; i < n; ++i)
            run(i);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    s.fit_from = opt.fit_from > 0 ? opt.fit_from : opt.k_min;
    s.error_exponent = opt.error_vs_k ? Real(1) : 1 - 1 / t.mapping.alpha;
    std::vector<int> ks, ke;
    std::vector<Real> xr, yr, xe, ye;
    for (int i = 0; i < n; ++i) {
        const OdmReport& r = s.reports[i];
        if (!r.evaluated)
            continue;
        if (oracle)
            s.delta[i] = r.value - *oracle;
        if (r.k < s.fit_from)
            continue;
        ks.push_back(r.k);
        xr.push_back(Real(r.k));
        yr.push_back(1 / abs(r.rho));
        if (s.delta[i] && *s.delta[i] != 0) {
            ke.push_back(r.k);
            xe.push_back(mp::pow(Real(r.k), s.error_exponent));
            ye.push_back(mp::log(mp::abs(*s.delta[i])));
        }
    }
    if (ks.size() < 6)
        throw FitFailure("convergence_study: only " + std::to_string(ks.size()) + " usable orders (need 6)");
    s.inverse_rho = fit_parities(ks, xr, yr);
    if (oracle) {
        if (ke.size() < 6)
            throw FitFailure("convergence_study: only " + std::to_string(ke.size()) + " usable error points");
        s.log_error = fit_parities(ke, xe, ye);
    }
    return s;
}

}  // namespace resum
