#include "resum/series.hpp"

#include "resum/errors.hpp"

#include <algorithm>

namespace resum {

PowerSeries::PowerSeries(std::vector<Real> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var))
{
    if (coeffs_.empty())
        throw UsageError("power series needs at least one coefficient");
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!is_finite(coeffs_[i]))
            throw DomainError("non-finite coefficient at order " + std::to_string(i));
}

PowerSeries PowerSeries::constant(const Real& c, int order, std::string var)
{
    std::vector<Real> v(static_cast<size_t>(order + 1), Real(0));
    v[0] = c;
    return PowerSeries(std::move(v), std::move(var));
}

PowerSeries PowerSeries::parse(const std::vector<std::string>& coeffs, std::string var)
{
    std::vector<Real> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs)
        v.push_back(parse_real(s));
    return PowerSeries(std::move(v), std::move(var));
}

PowerSeries PowerSeries::truncated(int order) const
{
    if (order < 0)
        throw UsageError("negative truncation order");
    std::vector<Real> v(coeffs_.begin(), coeffs_.begin() + std::min<size_t>(coeffs_.size(), order + 1));
    v.resize(static_cast<size_t>(order + 1), Real(0));
    return PowerSeries(std::move(v), var_);
}

PowerSeries PowerSeries::relabeled(std::string var) const
{
    PowerSeries r = *this;
    r.var_ = std::move(var);
    return r;
}

PowerSeries PowerSeries::shifted_down(int n) const
{
    if (n < 0 || n > order())
        throw UsageError("shift out of range");
    for (int i = 0; i < n; ++i)
        if (coeffs_[i] != 0)
            throw DomainError("cannot divide by " + var_ + "^" + std::to_string(n) +
                              ": coefficient " + std::to_string(i) + " is nonzero");
    return PowerSeries(std::vector<Real>(coeffs_.begin() + n, coeffs_.end()), var_);
}

Real PowerSeries::evaluate(const Real& x) const
{
    Real s = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        s = s * x + *it;
    return s;
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b)
{
    if (a.var() != b.var())
        throw UsageError("multiply: variable mismatch '" + a.var() + "' vs '" + b.var() + "'");
    const int K = std::min(a.order(), b.order());
    std::vector<Real> c(static_cast<size_t>(K + 1), Real(0));
    for (int i = 0; i <= K; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= K; ++j)
            c[i + j] += a[i] * b[j];
    }
    return PowerSeries(std::move(c), a.var());
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b)
{
    if (a.var() != b.var())
        throw UsageError("add: variable mismatch '" + a.var() + "' vs '" + b.var() + "'");
    const int K = std::min(a.order(), b.order());
    std::vector<Real> c(static_cast<size_t>(K + 1));
    for (int i = 0; i <= K; ++i)
        c[i] = a[i] + b[i];
    return PowerSeries(std::move(c), a.var());
}

PowerSeries scale(const PowerSeries& a, const Real& s)
{
    std::vector<Real> c = a.coeffs();
    for (auto& x : c)
        x *= s;
    return PowerSeries(std::move(c), a.var());
}

PowerSeries binomial_series(const Real& p, int order, std::string var)
{
    if (order < 0)
        throw UsageError("binomial_series: negative order");
    std::vector<Real> c(static_cast<size_t>(order + 1));
    c[0] = 1;
    for (int k = 1; k <= order; ++k)
        c[k] = c[k - 1] * (Real(k - 1) - p) / k;
    return PowerSeries(std::move(c), std::move(var));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner)
{
    if (inner[0] != 0)
        throw DomainError("compose: inner series has nonzero constant term");
    const int K = std::min(outer.order(), inner.order());
    // Horner: (((o_K) x + o_{K-1}) x + ...) with x = inner
    std::vector<Real> acc(static_cast<size_t>(K + 1), Real(0));
    std::vector<Real> next(static_cast<size_t>(K + 1));
    for (int n = K; n >= 0; --n) {
        std::fill(next.begin(), next.end(), Real(0));
        for (int i = 0; i <= K; ++i) {
            if (acc[i] == 0)
                continue;
            for (int j = 1; i + j <= K; ++j)
                next[i + j] += acc[i] * inner[j];
        }
        next[0] += outer[n];
        std::swap(acc, next);
    }
    return PowerSeries(std::move(acc), inner.var());
}

Real ratio_growth_constant(const PowerSeries& s, int tail)
{
    if (tail < 4 || s.order() < tail)
        throw UsageError("ratio_growth_constant: need order >= tail >= 4");
    const int K = s.order();
    Real sum = 0;
    for (int k = K - tail + 1; k <= K; ++k) {
        if (s[k] == 0 || s[k - 1] == 0 || (s[k] > 0) == (s[k - 1] > 0))
            throw DiagnosticError("ratio_growth_constant: coefficients do not alternate at order " +
                                  std::to_string(k));
        sum += -Real(k) * s[k - 1] / s[k];
    }
    return sum / tail;
}

}  // namespace resum
