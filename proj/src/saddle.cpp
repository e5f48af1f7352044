#include "resum/saddle.hpp"

#include "resum/errors.hpp"

#include <array>
#include <optional>

namespace resum {

namespace mp = boost::multiprecision;

namespace {

struct System {
    Real a;

    // h(l) = (1/l)(1-l)^(a-1)((a-1)l+1), k(l) = (1/l)(1-l)^a
    Real h(const Real& l) const { return mp::pow(1 - l, a - 1) * ((a - 1) * l + 1) / l; }
    Real k(const Real& l) const { return mp::pow(1 - l, a) / l; }
    Real dh(const Real& l) const
    {
        Real om = 1 - l, q = (a - 1) * l + 1;
        return -mp::pow(om, a - 1) * q / (l * l) - (a - 1) * mp::pow(om, a - 2) * q / l +
               (a - 1) * mp::pow(om, a - 1) / l;
    }
    Real dk(const Real& l) const
    {
        Real om = 1 - l;
        return -mp::pow(om, a) / (l * l) - a * mp::pow(om, a - 1) / l;
    }
    std::array<Real, 2> F(const Real& mu, const Real& l) const
    {
        return {mu + h(l), k(l) - mu * mp::log(-l)};
    }
    // eliminating mu: (1-l) + ((a-1)l+1) ln(-l) = 0 up to a positive factor
    Real reduced(const Real& l) const { return (1 - l) + ((a - 1) * l + 1) * mp::log(-l); }
};

Real norm2(const std::array<Real, 2>& f)
{
    return mp::hypot(f[0], f[1]);
}

std::optional<SaddleSolution> newton(const System& s, Real mu, Real l)
{
    const Real tol = eps_digits(8);
    std::array<Real, 2> f = s.F(mu, l);
    for (int it = 0; it < 200; ++it) {
        Real fn = norm2(f);
        if (fn <= tol)
            break;
        // J = [[1, h'], [-ln(-l), k' - mu/l]]
        Real j11 = 1, j12 = s.dh(l), j21 = -mp::log(-l), j22 = s.dk(l) - mu / l;
        Real det = j11 * j22 - j12 * j21;
        if (det == 0)
            return std::nullopt;
        Real dmu = (f[0] * j22 - j12 * f[1]) / det;
        Real dl = (j11 * f[1] - j21 * f[0]) / det;
        Real step = 1;
        bool accepted = false;
        for (int h = 0; h < 60; ++h, step /= 2) {
            Real nl = l - step * dl;
            if (!(nl > -1 && nl < 0))
                continue;
            Real nmu = mu - step * dmu;
            auto nf = s.F(nmu, nl);
            if (norm2(nf) < fn) {
                mu = nmu;
                l = nl;
                f = nf;
                accepted = true;
                break;
            }
        }
        if (!accepted)
            return std::nullopt;
    }
    if (!(norm2(f) <= tol) || !(mu > 0))
        return std::nullopt;
    return SaddleSolution{s.a, mu, l, mp::abs(f[0]), mp::abs(f[1])};
}

std::optional<SaddleSolution> bisection(const System& s)
{
    // scan for a sign change of the reduced equation, then bisect
    const int n = 200;
    Real prev_l = Real(-1) + Real(1) / n;
    Real prev = s.reduced(prev_l);
    for (int i = 2; i < n; ++i) {
        Real l = Real(-1) + Real(i) / n;
        Real v = s.reduced(l);
        if ((v > 0) != (prev > 0)) {
            Real lo = prev_l, hi = l, flo = prev;
            const Real tol = eps_digits(4);
            while (hi - lo > tol) {
                Real mid = (lo + hi) / 2;
                Real fm = s.reduced(mid);
                if ((fm > 0) == (flo > 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            Real lam = (lo + hi) / 2;
            return newton(s, -s.h(lam), lam);
        }
        prev = v;
        prev_l = l;
    }
    return std::nullopt;
}

}  // namespace

SaddleSolution solve_saddle(const Real& alpha)
{
    if (!(alpha > 1))
        throw UsageError("solve_saddle: alpha must be > 1");
    System s{alpha};
    if (auto r = newton(s, Real("4.5"), Real("-0.2")))
        return *r;
    for (int i = 1; i <= 9; ++i) {
        Real l = Real(-5 * i) / 100;
        if (auto r = newton(s, -s.h(l), l))
            return *r;
    }
    if (auto r = bisection(s))
        return *r;
    throw SolverFailure("solve_saddle: no convergence for alpha = " + to_string(alpha, 12));
}

D0Rate d0_exact_rate()
{
    auto f = [](const Real& R) {
        Real s = mp::sqrt(R * R + 9);
        return s / R - mp::log((s + R) / 3);
    };
    auto df = [](const Real& R) {
        Real s = mp::sqrt(R * R + 9);
        // d/dR [s/R] = -9/(R^2 s);  d/dR ln(s+R) = 1/s
        return -9 / (R * R * s) - 1 / s;
    };
    Real lo = 1, hi = 20, R = Real("4.5");
    const Real tol = eps_digits(4);
    for (int it = 0; it < 500; ++it) {
        Real v = f(R);
        if (v > 0)
            lo = R;
        else
            hi = R;
        Real nR = R - v / df(R);
        if (!(nR > lo && nR < hi))
            nR = (lo + hi) / 2;
        if (mp::abs(nR - R) <= tol * R) {
            R = nR;
            break;
        }
        R = nR;
    }
    return D0Rate{R, mp::exp(-3 / R)};
}

Real predicted_R(const Real& alpha, const Real& A)
{
    if (!(A > 0))
        throw UsageError("predicted_R: A must be > 0");
    return solve_saddle(alpha).mu * A;
}

}  // namespace resum
