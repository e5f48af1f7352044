#include "resum/polynomial.hpp"

#include "resum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace resum {

namespace mp = boost::multiprecision;

Real horner(const Poly& p, const Real& x)
{
    Real s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        s = s * x + *it;
    return s;
}

Cx horner(const Poly& p, const Cx& x)
{
    Cx s(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        s *= x;
        s.re += *it;
    }
    return s;
}

Cx horner(const CPoly& p, const Cx& x)
{
    Cx s(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        s *= x;
        s += *it;
    }
    return s;
}

Poly derivative(const Poly& p)
{
    if (p.size() <= 1)
        return Poly{Real(0)};
    Poly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i)
        d[i - 1] = p[i] * static_cast<int>(i);
    return d;
}

CPoly derivative(const CPoly& p)
{
    if (p.size() <= 1)
        return CPoly{Cx(0)};
    CPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i)
        d[i - 1] = p[i] * Cx(static_cast<int>(i));
    return d;
}

int degree(const Poly& p)
{
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0)
            return i;
    return -1;
}

namespace {

bool is_zero(const Cx& c) { return c.re == 0 && c.im == 0; }

double log_abs(const Cx& c)
{
    return static_cast<double>(mp::log(abs(c)));
}

// Starting points on circles read off the upper convex hull of
// (i, log|c_i|) (Bini's Newton-polygon initialisation).
std::vector<Cx> initial_guesses(const CPoly& p)
{
    const int n = static_cast<int>(p.size()) - 1;
    std::vector<std::pair<int, double>> pts;
    for (int i = 0; i <= n; ++i)
        if (!is_zero(p[i]))
            pts.emplace_back(i, log_abs(p[i]));
    std::vector<std::pair<int, double>> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            double cross = (b.first - a.first) * (q.second - a.second) -
                           (b.second - a.second) * (q.first - a.first);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    std::vector<Cx> z;
    z.reserve(n);
    const double two_pi = 6.283185307179586;
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        int cnt = hull[s + 1].first - hull[s].first;
        double logr = (hull[s].second - hull[s + 1].second) / cnt;
        Real r = mp::exp(Real(logr));
        for (int j = 0; j < cnt; ++j) {
            double th = two_pi * j / cnt + two_pi * static_cast<double>(z.size()) / n + 0.4;
            z.emplace_back(r * mp::cos(Real(th)), r * mp::sin(Real(th)));
        }
    }
    return z;
}

void aberth(const CPoly& p, std::vector<Cx>& z)
{
    const int n = static_cast<int>(z.size());
    const int digits = current_precision().decimal_digits;
    const Real step_tol = pow10(2 - digits);
    const Real res_tol = pow10(2 - digits);
    std::vector<Real> absc(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        absc[i] = abs(p[i]);
    std::vector<char> done(static_cast<size_t>(n), 0);
    const int max_iter = 200 + 40 * digits;
    for (int it = 0; it < max_iter; ++it) {
        bool moved = false;
        for (int i = 0; i < n; ++i) {
            if (done[i])
                continue;
            const Cx& x = z[i];
            Cx f(0), df(0);
            Real ax = abs(x), bound = 0;
            for (size_t k = p.size(); k-- > 0;) {
                df *= x;
                df += f;
                f *= x;
                f += p[k];
                bound = bound * ax + absc[k];
            }
            if (abs(f) <= res_tol * bound) {
                done[i] = 1;
                continue;
            }
            Cx ratio;
            if (is_zero(df))
                ratio = Cx(step_tol * (1 + ax));
            else
                ratio = f / df;
            Cx s(0);
            for (int j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                Cx d = x - z[j];
                if (is_zero(d))
                    d = Cx(step_tol * (1 + ax), step_tol);
                s += Cx(1) / d;
            }
            Cx w = ratio / (Cx(1) - ratio * s);
            z[i] -= w;
            moved = true;
            if (abs(w) <= step_tol * abs(z[i]))
                done[i] = 1;
        }
        if (!moved)
            return;
    }
}

bool less_root(const Root& a, const Root& b)
{
    Real ma = abs(a.z), mb = abs(b.z);
    if (ma != mb)
        return ma > mb;
    if (a.z.re != b.z.re)
        return a.z.re > b.z.re;
    return a.z.im > b.z.im;
}

std::vector<Root> roots_impl(CPoly p, bool real_coeffs)
{
    while (!p.empty() && is_zero(p.back()))
        p.pop_back();
    if (p.size() < 2)
        throw UsageError("root finding needs a polynomial of degree >= 1");
    int zeros = 0;
    while (is_zero(p[zeros]))
        ++zeros;
    p.erase(p.begin(), p.begin() + zeros);
    const int n = static_cast<int>(p.size()) - 1;

    std::vector<Cx> z;
    if (n == 1) {
        z.push_back(-p[0] / p[1]);
    } else if (n > 1) {
        z = initial_guesses(p);
        aberth(p, z);
    }

    const int digits = current_precision().decimal_digits;
    const Real cluster_tol = pow10(-digits / 4);

    // merge clusters (multiple roots converge only to eps^(1/m))
    std::vector<int> parent(z.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j) {
            Real scale = std::max<Real>(Real(1), abs(z[i]));
            if (abs(z[i] - z[j]) <= cluster_tol * scale)
                parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
        }
    std::vector<Root> out;
    for (size_t i = 0; i < z.size(); ++i) {
        if (find(static_cast<int>(i)) != static_cast<int>(i))
            continue;
        Cx sum(0);
        int m = 0;
        for (size_t j = 0; j < z.size(); ++j)
            if (find(static_cast<int>(j)) == static_cast<int>(i)) {
                sum += z[j];
                ++m;
            }
        out.push_back(Root{sum / Cx(m), m, false});
    }

    if (real_coeffs) {
        Poly rp(p.size());
        for (size_t i = 0; i < p.size(); ++i)
            rp[i] = p[i].re;
        const Real res_tol = pow10(8 - digits);
        for (auto& r : out) {
            if (mp::abs(r.z.im) > cluster_tol * std::max<Real>(Real(1), abs(r.z)))
                continue;
            // an m-fold root is a simple root of the (m-1)th derivative
            Poly q = rp;
            for (int i = 1; i < r.multiplicity; ++i)
                q = derivative(q);
            Poly dq = derivative(q);
            Real x = r.z.re;
            for (int it = 0; it < 100; ++it) {
                Real d = horner(dq, x);
                if (d == 0)
                    break;
                Real step = horner(q, x) / d;
                x -= step;
                if (mp::abs(step) <= pow10(-digits) * std::max<Real>(Real(1), mp::abs(x)))
                    break;
            }
            Real scale = 0, ax = mp::abs(x);
            for (auto it = rp.rbegin(); it != rp.rend(); ++it)
                scale = scale * ax + mp::abs(*it);
            if (mp::abs(horner(rp, x)) < scale * res_tol) {
                r.z = Cx(x);
                r.real = true;
            }
        }
    }
    if (zeros > 0)
        out.push_back(Root{Cx(0), zeros, true});
    std::sort(out.begin(), out.end(), less_root);
    return out;
}

}  // namespace

std::vector<Root> polynomial_roots(const CPoly& p)
{
    return roots_impl(p, false);
}

std::vector<Root> polynomial_roots(const Poly& p)
{
    CPoly c(p.begin(), p.end());
    return roots_impl(std::move(c), true);
}

std::vector<Root> polynomial_real_roots_multiplicity(const Poly& p)
{
    if (degree(p) < 1)
        throw UsageError("polynomial_real_roots: degree must be at least 1");
    std::vector<Root> all = polynomial_roots(p);
    std::vector<Root> out;
    for (auto& r : all)
        if (r.real)
            out.push_back(r);
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.z.re > b.z.re; });
    return out;
}

std::vector<Real> polynomial_real_roots(const Poly& p)
{
    std::vector<Real> out;
    for (auto& r : polynomial_real_roots_multiplicity(p))
        out.push_back(r.z.re);
    return out;
}

}  // namespace resum
