#include "resum/borel.hpp"

#include "resum/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

namespace resum {

namespace mp = boost::multiprecision;

void BorelConfig::validate() const
{
    if (sigma < 0)
        throw UsageError("Borel: sigma must be >= 0");
    if (!(a > 0))
        throw UsageError("Borel: a must be > 0");
    if (truncation == 0 || truncation < -1)
        throw UsageError("Borel: truncation must be >= 1");
}

PowerSeries borel_leroy_transform(const PowerSeries& s, const Real& sigma)
{
    if (sigma < 0)
        throw UsageError("borel_leroy_transform: sigma must be >= 0");
    std::vector<Real> b(s.coeffs().size());
    Real gam = boost::math::tgamma(sigma + 1);
    for (int k = 0; k <= s.order(); ++k) {
        b[k] = s[k] / gam;
        gam *= sigma + k + 1;
    }
    return PowerSeries(std::move(b), s.var());
}

PowerSeries conformal_map_coeffs(const PowerSeries& b, const Real& a)
{
    if (!(a > 0))
        throw UsageError("conformal_map_coeffs: a must be > 0");
    const int K = b.order();
    std::vector<Real> z(static_cast<size_t>(K + 1), Real(0));
    for (int k = 1; k <= K; ++k)
        z[k] = 4 * Real(k) / a;
    PowerSeries zu(std::move(z), "u");
    return compose(b.relabeled("u"), zu);
}

Real conformal_u(const Real& z, const Real& a)
{
    Real s = mp::sqrt(1 + a * z);
    return (s - 1) / (s + 1);
}

namespace {

Real laplace(const std::function<Real(const Real&)>& B, const Real& sigma, const QuadratureSettings& q,
             Real* err)
{
    auto f = [&](const Real& t) {
        Real w = mp::exp(-t);
        if (w == 0)
            return w;  // far tail; B(t) may be inf/inf there
        if (sigma != 0)
            w *= mp::pow(t, sigma);
        return w * B(t);
    };
    QuadratureResult r = integrate_half_line(f, q);
    if (err)
        *err = r.error;
    return r.value;
}

}  // namespace

BorelResult borel_sum(const PowerSeries& s, const BorelConfig& cfg, const Real& g)
{
    cfg.validate();
    if (!(g > 0))
        throw DomainError("borel_sum: g must be > 0");
    PowerSeries src = cfg.truncation > 0 ? s.truncated(cfg.truncation) : s;
    const PowerSeries d = conformal_map_coeffs(borel_leroy_transform(src, cfg.sigma), cfg.a);
    const int K = d.order();
    auto mapped = [&](int order) {
        return [&, order](const Real& t) {
            Real u = conformal_u(g * t, cfg.a);
            Real v = 0;
            for (int k = order; k >= 0; --k)
                v = v * u + d[k];
            return v;
        };
    };
    BorelResult r;
    r.value = laplace(mapped(K), cfg.sigma, cfg.quadrature, &r.quadrature_error);
    r.truncation_error = K >= 1 ? mp::abs(r.value - laplace(mapped(K - 1), cfg.sigma, cfg.quadrature, nullptr))
                                : Real(0);
    return r;
}

BorelResult borel_pade_sum(const PowerSeries& s, const Real& sigma, int L, int M, const Real& g,
                           const QuadratureSettings& q)
{
    if (!(g > 0))
        throw DomainError("borel_pade_sum: g must be > 0");
    const PadeApproximant p = pade_fit(borel_leroy_transform(s, sigma), L, M);
    if (M > 0 && degree(p.denominator) >= 1) {
        for (const Root& r : polynomial_roots(p.denominator))
            if (r.real && r.z.re > 0)
                throw SummabilityError("Borel-Pade [" + std::to_string(L) + "/" + std::to_string(M) +
                                       "]: pole on the positive axis at z = " + to_string(r.z.re, 12));
    }
    auto B = [&](const Real& t) {
        const Real z = g * t;
        return horner(p.numerator, z) / horner(p.denominator, z);
    };
    BorelResult r;
    r.value = laplace(B, sigma, q, &r.quadrature_error);
    r.truncation_error = 0;
    return r;
}

}  // namespace resum
