#include "resum/models.hpp"

#include "resum/errors.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace resum {

namespace mp = boost::multiprecision;

PowerSeries d0_partition_coeffs(int K)
{
    if (K < 0)
        throw UsageError("d0_partition_coeffs: negative order");
    std::vector<Real> z(static_cast<size_t>(K + 1));
    z[0] = 1;
    // Z_k = (-1/24)^k (4k-1)!!/k!
    for (int k = 1; k <= K; ++k)
        z[k] = -z[k - 1] * Real((4 * k - 1) * (4 * k - 3)) / (24 * k);
    return PowerSeries(std::move(z), "g");
}

Real d0_strong_amplitude()
{
    const Real pi = mp::atan(Real(1)) * 4;
    return mp::pow(Real(24), Real(1) / 4) * mp::sqrt(pi) / (2 * boost::math::tgamma(Real(3) / 4));
}

Real d0_partition_value(const Coupling& g, const QuadratureSettings& q)
{
    if (g.infinite)
        return d0_strong_amplitude();
    if (g.value < 0)
        throw DomainError("d0_partition_value: g < 0, the integral diverges");
    if (g.value == 0)
        return Real(1);
    const Real c = g.value / 24;
    auto f = [&c](const Real& x) {
        Real x2 = x * x;
        return mp::exp(-x2 / 2 - c * x2 * x2);
    };
    const Real pi = mp::atan(Real(1)) * 4;
    return 2 * integrate_half_line(f, q).value / mp::sqrt(2 * pi);
}

Real d0_partition_bessel(const Real& g)
{
    if (!(g > 0))
        throw DomainError("d0_partition_bessel: needs g > 0");
    const Real pi = mp::atan(Real(1)) * 4;
    const Real y = Real(3) / (4 * g);
    return mp::sqrt(Real(12) / g) * mp::exp(y) * boost::math::cyl_bessel_k(Real(1) / 4, y) /
           (2 * mp::sqrt(2 * pi));
}

PowerSeries anharmonic_ground_coeffs(int K)
{
    if (K < 0)
        throw UsageError("anharmonic_ground_coeffs: negative order");
    // Bender-Wu for H = p^2/2 + x^2/2 + l x^4 with psi = exp(-x^2/2) sum_k l^k sum_j A[k][j] x^(2j),
    // A[k][0] = delta_k0.  Then E_k(l) = eps_k and l = g/24.
    std::vector<std::vector<Real>> A(static_cast<size_t>(K + 1));
    std::vector<Real> eps(static_cast<size_t>(K + 1));
    A[0] = {Real(1)};
    eps[0] = Real(1) / 2;
    for (int k = 1; k <= K; ++k) {
        auto& a = A[k];
        a.assign(static_cast<size_t>(2 * k + 2), Real(0));
        for (int j = 2 * k; j >= 1; --j) {
            Real s = 0;
            for (int m = 1; m < k; ++m)
                if (j < static_cast<int>(A[k - m].size()))
                    s += eps[m] * A[k - m][j];
            s += Real((2 * j + 2) * (2 * j + 1)) / 2 * a[j + 1];
            if (j - 2 >= 0 && j - 2 < static_cast<int>(A[k - 1].size()))
                s -= A[k - 1][j - 2];
            a[j] = s / (2 * j);
        }
        eps[k] = -a[1];
    }
    std::vector<Real> e(static_cast<size_t>(K + 1));
    Real scale = 1;
    for (int k = 0; k <= K; ++k) {
        e[k] = eps[k] / scale;
        scale *= 24;
    }
    return PowerSeries(std::move(e), "g");
}

namespace {

// Pentadiagonal symmetric matrix on even oscillator states |2m>, m < n.
struct Band {
    std::vector<Real> d0, d1, d2;
};

Band quartic_matrix(int n, const Real& omega, const Real& c2, const Real& c4)
{
    // x^2 restricted to even states, with one extra row so that x^4 = x^2 x^2 is exact
    std::vector<Real> xd(static_cast<size_t>(n + 2)), xo(static_cast<size_t>(n + 2));
    for (int m = 0; m < n + 2; ++m) {
        xd[m] = Real(4 * m + 1) / (2 * omega);
        xo[m] = mp::sqrt(Real((2 * m + 1) * (2 * m + 2))) / (2 * omega);
    }
    Band b;
    b.d0.resize(n);
    b.d1.resize(n);
    b.d2.resize(n);
    for (int m = 0; m < n; ++m) {
        Real x4d = xd[m] * xd[m] + xo[m] * xo[m];
        if (m > 0)
            x4d += xo[m - 1] * xo[m - 1];
        Real x4o1 = xd[m] * xo[m] + xo[m] * xd[m + 1];
        Real x4o2 = xo[m] * xo[m + 1];
        b.d0[m] = omega * Real(4 * m + 1) / 4 + c2 * xd[m] + c4 * x4d;
        b.d1[m] = -omega * mp::sqrt(Real((2 * m + 1) * (2 * m + 2))) / 4 + c2 * xo[m] + c4 * x4o1;
        b.d2[m] = c4 * x4o2;
    }
    return b;
}

// Number of eigenvalues below s (Sylvester inertia of the banded LDL^T).
int count_below(const Band& b, const Real& s, const Real& tiny)
{
    const int n = static_cast<int>(b.d0.size());
    std::vector<Real> D(static_cast<size_t>(n));
    std::vector<Real> L1(static_cast<size_t>(n)), L2(static_cast<size_t>(n));  // L[i+1][i], L[i+2][i]
    int neg = 0;
    for (int i = 0; i < n; ++i) {
        Real d = b.d0[i] - s;
        if (i >= 1)
            d -= L1[i - 1] * L1[i - 1] * D[i - 1];
        if (i >= 2)
            d -= L2[i - 2] * L2[i - 2] * D[i - 2];
        if (d == 0)
            d = tiny;
        D[i] = d;
        if (d < 0)
            ++neg;
        if (i + 1 < n) {
            Real t = b.d1[i];
            if (i >= 1)
                t -= L2[i - 1] * L1[i - 1] * D[i - 1];
            L1[i] = t / d;
        }
        if (i + 2 < n)
            L2[i] = b.d2[i] / d;
    }
    return neg;
}

Real lowest_eigenvalue(const Band& b)
{
    const int n = static_cast<int>(b.d0.size());
    Real lo = b.d0[0], hi = b.d0[0];
    for (int i = 0; i < n; ++i) {
        Real r = mp::abs(b.d1[i]) + mp::abs(b.d2[i]);
        if (i >= 1)
            r += mp::abs(b.d1[i - 1]);
        if (i >= 2)
            r += mp::abs(b.d2[i - 2]);
        lo = std::min<Real>(lo, b.d0[i] - r);
        hi = std::min<Real>(hi, b.d0[i]);
    }
    const int digits = current_precision().decimal_digits;
    const Real tol = pow10(4 - digits);
    const Real tiny = pow10(-2 * digits);
    while (hi - lo > tol * std::max<Real>(Real(1), mp::abs(hi))) {
        Real mid = (lo + hi) / 2;
        if (count_below(b, mid, tiny) == 0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

struct QuarticParams {
    Real c2, c4, omega;
};

QuarticParams quartic_params(const Coupling& g)
{
    if (!g.infinite && g.value < 0)
        throw DomainError("anharmonic ground state: g < 0 has no bound state");
    QuarticParams p;
    p.c2 = g.infinite ? Real(0) : Real(1) / 2;
    p.c4 = g.infinite ? Real(1) / 24 : g.value / 24;
    // basis frequency from the Gaussian variational estimate: w^3 - 2 c2 w - 6 c4 = 0
    double c2 = static_cast<double>(p.c2), c4 = static_cast<double>(p.c4);
    double w = std::max(1.0, std::cbrt(6 * c4));
    for (int i = 0; i < 100; ++i)
        w -= (w * w * w - 2 * c2 * w - 6 * c4) / (3 * w * w - 2 * c2);
    // round so the basis does not depend on the last bits of the Newton iterate
    p.omega = Real(std::round(w * 1e6) / 1e6);
    return p;
}

}  // namespace

Real anharmonic_ground_fixed(const Coupling& g, int even_states)
{
    if (even_states < 1)
        throw UsageError("basis must hold at least one state");
    QuarticParams p = quartic_params(g);
    return lowest_eigenvalue(quartic_matrix(even_states, p.omega, p.c2, p.c4));
}

GroundState anharmonic_ground_state(const Coupling& g, const DiagonalizationOptions& opt)
{
    QuarticParams p = quartic_params(g);
    if (!g.infinite && g.value == 0)
        return GroundState{Real(1) / 2, 1, Real(0)};
    int n = std::max(2, opt.initial_basis);
    Real prev = lowest_eigenvalue(quartic_matrix(n, p.omega, p.c2, p.c4));
    while (2 * n <= opt.max_basis) {
        n *= 2;
        Real e = lowest_eigenvalue(quartic_matrix(n, p.omega, p.c2, p.c4));
        Real change = mp::abs(e - prev);
        if (change <= opt.relative_tolerance * mp::abs(e))
            return GroundState{e, n, change};
        prev = e;
    }
    throw ResourceError("anharmonic ground state not stable within " + std::to_string(opt.max_basis) +
                        " basis states");
}

Real anharmonic_ground_value(const Coupling& g, const DiagonalizationOptions& opt)
{
    return anharmonic_ground_state(g, opt).energy;
}

RgSeriesSet rg_series()
{
    const char* beta[] = {"0", "-1", "1", "-308/729", "0.3510695977", "-0.3765268283", "0.49554751", "-0.749689"};
    const char* gamma_inv[] = {"1",           "-1/6",         "1/27",         "-0.0230696212",
                               "0.0198868202", "-0.0224595215", "0.0303679053", "-0.046877951"};
    const char* eta[] = {"0",             "0",            "0.0109739368", "0.0009142222",
                         "0.0017962228", "-0.0006537035", "0.0012749100", "-0.001697694"};
    auto load = [](const char* const* v) {
        std::vector<std::string> s(v, v + 8);
        return PowerSeries::parse(s, "g̃");
    };
    return RgSeriesSet{load(beta), load(gamma_inv), load(eta), parse_real("0.147774232")};
}

PowerSeries rg_nu_inverse(const RgSeriesSet& rg)
{
    std::vector<Real> c = rg.eta.coeffs();
    for (auto& x : c)
        x = -x;
    c[0] += 2;
    return multiply(PowerSeries(std::move(c), rg.eta.var()), rg.gamma_inv);
}

}  // namespace resum
