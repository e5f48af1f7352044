#pragma once

#include "resum/coupling.hpp"
#include "resum/mapping.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace resum {

enum class SelectionMode {
    Root,        // zeros of P_k
    Stationary,  // zeros of P_k'
    Mixed,       // roots when any exist, else stationary points
    StationaryThenRoot,
};

std::string to_string(SelectionMode m);
SelectionMode parse_selection_mode(const std::string& s);

struct RhoSelectionCriterion {
    SelectionMode mode = SelectionMode::Mixed;
    Real smallness = Real(1) / 2;  // tau
    // Candidates off the real axis (representative with Im >= 0).  Only sensible
    // where lambda(g) continues analytically: shifted-power family or g = inf.
    bool allow_complex = false;
    // Drop candidates whose modulus is below this fraction of the largest one.
    Real cluster_fraction = 0;

    void validate() const;
};

struct RhoCandidate {
    Cx rho;
    Real abs_p;   // |P_k(rho)|
    Real abs_dp;  // |P_k'(rho)|
    Real ratio;   // smallness ratio, passes when <= tau
    bool stationary = false;
    bool passes = false;
};

struct OdmReport {
    int k = 0;
    Cx rho;
    std::vector<RhoCandidate> candidates;
    std::string chosen_from;  // "root", "stationary" or "given"
    bool flagged = false;     // no candidate passed the smallness test
    std::string diagnostic;

    bool evaluated = false;
    Real value;       // real part of the approximant
    Real value_imag;  // nonzero only for complex rho
    bool has_error_estimate = false;
    Real error_estimate;
    Cx lambda;
};

OdmReport select_rho(const RhoPolynomialTable& t, int k, const RhoSelectionCriterion& crit);

// Approximant with rho chosen by the criterion.  At g = inf (power-cut only) the value
// is the amplitude of g^(p/alpha): rho^(p/alpha) sum_l P_l(rho).
OdmReport odm_value(const RhoPolynomialTable& t, int k, const RhoSelectionCriterion& crit,
                    const Coupling& g);
// Same with a prescribed rho.
OdmReport odm_value_at(const RhoPolynomialTable& t, int k, const Cx& rho, const Coupling& g);
// Fills value, lambda and error estimate of an existing selection.
void evaluate(const RhoPolynomialTable& t, OdmReport& r, const Coupling& g);

struct FixedPointResult {
    int k = 0;
    OdmReport selection;
    Cx lambda_star;
    Cx g_star_c;
    Cx omega_c;
    Real g_star;  // real parts
    Real omega;
};

// Zero of the truncated beta_lambda; throws FixedPointFailure when no zero has
// 0 < Re lambda < 1.
FixedPointResult fixed_point(const RhoPolynomialTable& beta, int k, const RhoSelectionCriterion& crit);
FixedPointResult fixed_point_at(const RhoPolynomialTable& beta, int k, const Cx& rho);

struct ExponentsResult {
    int k = 0;
    Real gamma;
    Real eta;
    Real nu_direct;   // from the separately summed 1/nu series (when given)
    Real nu_scaling;  // gamma / (2 - eta)
    bool has_nu_direct = false;
    OdmReport gamma_report, eta_report, nu_report;
};

// gamma^{-1} and 1/nu summed at order k, eta/g^2 at order k-2.  When the eta/g^2
// polynomial offers no candidate, the rho selected for gamma^{-1} is reused and the
// eta report is flagged.
ExponentsResult exponents_at(const Real& g_star, const RhoPolynomialTable& gamma_inv,
                             const RhoPolynomialTable& eta_over_g2, int k,
                             const RhoSelectionCriterion& crit,
                             const RhoPolynomialTable* nu_inv = nullptr);

struct LinearFit {
    Real slope;
    Real intercept;
    int points = 0;
};

LinearFit fit_line(const std::vector<Real>& x, const std::vector<Real>& y);  // throws FitFailure below 2 points

struct ConvergenceFit {
    LinearFit full, even, odd;
};

struct ConvergenceStudy {
    std::vector<OdmReport> reports;  // orders k_min..K, failures have evaluated == false
    std::vector<std::optional<Real>> delta;  // value - oracle
    std::optional<ConvergenceFit> inverse_rho;  // 1/|rho_k| vs k; R_fit = 1/slope
    std::optional<ConvergenceFit> log_error;    // ln|delta_k| vs k^exponent
    Real error_exponent;  // 1 or 1 - 1/alpha
    int fit_from = 0;
};

struct StudyOptions {
    int k_min = 1;
    int fit_from = 0;  // first order entering the fits (0: k_min)
    // ln|delta| is fitted against k^(1-1/alpha) unless this is set (alpha = 2 d=0 case uses k)
    bool error_vs_k = false;
    bool parallel = true;
};

// Runs orders k_min..K; orders are independent and may run in parallel.
ConvergenceStudy convergence_study(const RhoPolynomialTable& t, const RhoSelectionCriterion& crit, int K,
                                   const Coupling& g, std::optional<Real> oracle,
                                   const StudyOptions& opt = {});

}  // namespace resum
