#pragma once

#include "resum/real.hpp"

#include <string>
#include <vector>

namespace resum {

// Dense truncated power series: coeffs[i] multiplies var^i, order == coeffs.size()-1.
class PowerSeries {
public:
    PowerSeries() : coeffs_{Real(0)} {}
    explicit PowerSeries(std::vector<Real> coeffs, std::string var = "g");

    static PowerSeries constant(const Real& c, int order, std::string var = "g");
    // Builds from decimal strings (or p/q rationals).
    static PowerSeries parse(const std::vector<std::string>& coeffs, std::string var = "g");

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Real>& coeffs() const { return coeffs_; }
    const Real& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
    const std::string& var() const { return var_; }

    PowerSeries truncated(int order) const;
    PowerSeries relabeled(std::string var) const;
    // Drops the first `n` coefficients: f/var^n (they must be zero).
    PowerSeries shifted_down(int n) const;

    Real evaluate(const Real& x) const;  // plain partial sum

private:
    std::vector<Real> coeffs_;
    std::string var_;
};

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);
PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, const Real& c);

// Taylor coefficients of (1-x)^p.
PowerSeries binomial_series(const Real& p, int order, std::string var = "λ");

// outer(inner(x)); inner must have zero constant term.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

// Average of -k f_{k-1}/f_k over the last `tail` orders; estimates A for
// f_k ~ (-1)^k k^b A^{-k} k!.
Real ratio_growth_constant(const PowerSeries& s, int tail);

}  // namespace resum
