#include "commands.hpp"

#include "pipelines.hpp"
#include "reference_tables.hpp"
#include "series_file.hpp"

#include "resum/borel.hpp"
#include "resum/errors.hpp"
#include "resum/models.hpp"
#include "resum/odm.hpp"
#include "resum/pade.hpp"
#include "resum/saddle.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace resum::cli {

namespace mp = boost::multiprecision;

namespace {

const int kDefaultPrecision = 64;

// ---- config access ----

void allow_only(const Json& c, std::initializer_list<const char*> keys, const std::string& what)
{
    std::set<std::string> ok{"command", "precision"};
    for (const char* k : keys)
        ok.insert(k);
    for (auto it = c.begin(); it != c.end(); ++it)
        if (!ok.count(it.key()))
            throw UsageError("option '" + it.key() + "' does not apply to " + what);
}

std::string str_at(const Json& c, const char* key)
{
    if (!c.contains(key))
        throw UsageError(std::string("missing option '") + key + "'");
    if (!c[key].is_string())
        throw UsageError(std::string("option '") + key + "' must be a string");
    return c[key].get<std::string>();
}

int int_at(const Json& c, const char* key)
{
    if (!c.contains(key))
        throw UsageError(std::string("missing option '") + key + "'");
    if (!c[key].is_number_integer())
        throw UsageError(std::string("option '") + key + "' must be an integer");
    return c[key].get<int>();
}

bool bool_at(const Json& c, const char* key)
{
    if (!c[key].is_boolean())
        throw UsageError(std::string("option '") + key + "' must be true or false");
    return c[key].get<bool>();
}

Real real_at(const Json& c, const char* key)
{
    try {
        return parse_real(str_at(c, key));
    } catch (const ParseError& e) {
        throw UsageError(std::string("option '") + key + "': " + e.what());
    }
}

template <class T>
void default_to(Json& c, const char* key, const T& v)
{
    if (!c.contains(key))
        c[key] = v;
}

// ---- shared pieces ----

void odm_defaults(Json& c)
{
    default_to(c, "family", "power-cut");
    default_to(c, "alpha", "2");
    default_to(c, "prefactor_p", "0");
    default_to(c, "mode", "mixed");
    default_to(c, "tau", "0.5");
    default_to(c, "allow_complex", false);
    default_to(c, "cluster_fraction", "0");
}

MappingSpec mapping_from(const Json& c)
{
    MappingSpec m;
    m.family = parse_family(str_at(c, "family"));
    m.alpha = real_at(c, "alpha");
    m.prefactor_p = real_at(c, "prefactor_p");
    m.validate();
    return m;
}

RhoSelectionCriterion criterion_from(const Json& c)
{
    RhoSelectionCriterion r;
    r.mode = parse_selection_mode(str_at(c, "mode"));
    r.smallness = real_at(c, "tau");
    r.allow_complex = bool_at(c, "allow_complex");
    r.cluster_fraction = real_at(c, "cluster_fraction");
    r.validate();
    return r;
}

Coupling coupling_at(const Json& c, const char* key)
{
    try {
        return Coupling::parse(str_at(c, key));
    } catch (const ParseError& e) {
        throw UsageError(std::string("option '") + key + "': " + e.what());
    }
}

Json base_report(const Json& config)
{
    Json r;
    r["schema"] = kSchemaVersion;
    r["tool"] = "resum";
    r["config"] = config;
    return r;
}

struct Checks {
    Json list = Json::array();
    int failed = 0;

    void add(const std::string& name, bool pass, const std::string& detail)
    {
        list.push_back(Json{{"name", name}, {"pass", pass}, {"detail", detail}});
        if (!pass)
            ++failed;
    }
    void finish(Outcome& o, const std::string& what)
    {
        o.report["checks"] = list;
        o.report["status"] = failed ? "fail" : "pass";
        o.exit_code = failed ? kToleranceViolation : kPass;
        std::ostringstream os;
        os << what << ": " << list.size() - failed << "/" << list.size() << " checks passed\n";
        for (const auto& c : list)
            if (!c["pass"].get<bool>())
                os << "  FAIL " << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
        o.summary = os.str();
    }
};

std::string within(const Real& got, const Real& target, const Real& tol)
{
    std::ostringstream os;
    os << short_num(got, 12) << " vs " << short_num(target, 12) << " (|diff| " << short_num(mp::abs(got - target), 3)
       << ", tol " << short_num(tol, 3) << ")";
    return os.str();
}

bool close(const Real& got, const Real& target, const Real& tol)
{
    return mp::abs(got - target) <= tol;
}

Json odm_report_json(const OdmReport& r)
{
    Json j;
    j["k"] = r.k;
    j["rho"] = complex_json(r.rho);
    j["chosen_from"] = r.chosen_from;
    j["flagged"] = r.flagged;
    if (!r.diagnostic.empty())
        j["diagnostic"] = r.diagnostic;
    if (r.evaluated) {
        j["value"] = full(r.value);
        if (r.value_imag != 0)
            j["value_imag"] = full(r.value_imag);
        if (r.has_error_estimate)
            j["error_estimate"] = full(r.error_estimate);
        j["lambda"] = complex_json(r.lambda);
    }
    return j;
}

Json fit_json(const ConvergenceFit& f, bool invert)
{
    auto one = [invert](const LinearFit& l) {
        Json j{{"slope", full(l.slope)}, {"intercept", full(l.intercept)}, {"points", l.points}};
        if (invert)
            j["R"] = full(1 / l.slope);
        return j;
    };
    return Json{{"full", one(f.full)}, {"even", one(f.even)}, {"odd", one(f.odd)}};
}

// ---- sum ----

Json normalize_sum(Json c)
{
    const std::string method = str_at(c, "method");
    default_to(c, "g", "1");
    if (!c.contains("series"))
        throw UsageError("sum needs a series");
    if (method == "odm") {
        allow_only(c, {"series", "method", "g", "order", "family", "alpha", "prefactor_p", "mode", "tau",
                       "allow_complex", "cluster_fraction"},
                   "method odm");
        odm_defaults(c);
        int_at(c, "order");
    } else if (method == "borel-map") {
        allow_only(c, {"series", "method", "g", "order", "sigma", "a"}, "method borel-map");
        default_to(c, "sigma", "0");
        default_to(c, "order", -1);
        if (!c.contains("a")) {
            SeriesFile f = series_file_from_json(c["series"]);
            if (!f.large_order)
                throw UsageError("borel-map needs --a or a large_order entry in the series file");
            c["a"] = "1/" + f.large_order->A;
        }
    } else if (method == "borel-pade" || method == "pade") {
        if (method == "pade")
            allow_only(c, {"series", "method", "g", "L", "M"}, "method pade");
        else
            allow_only(c, {"series", "method", "g", "sigma", "L", "M"}, "method borel-pade");
        if (method == "borel-pade")
            default_to(c, "sigma", "0");
        int_at(c, "L");
        int_at(c, "M");
    } else {
        throw UsageError("unknown method '" + method + "' (odm, borel-map, borel-pade, pade)");
    }
    return c;
}

Outcome run_sum(const Json& c)
{
    Outcome o;
    o.report = base_report(c);
    const std::string method = str_at(c, "method");
    const PowerSeries s = series_file_from_json(c["series"]).series();
    const Coupling g = coupling_at(c, "g");
    if (g.infinite && method != "odm")
        throw UsageError("g = inf is only available with method odm");
    Json res;
    std::ostringstream os;
    if (method == "odm") {
        const int k = int_at(c, "order");
        if (k > s.order())
            throw UsageError("order " + std::to_string(k) + " exceeds the series order " + std::to_string(s.order()));
        RhoPolynomialTable t = build_rho_table(s, mapping_from(c));
        OdmReport r = odm_value(t, k, criterion_from(c), g);
        res = odm_report_json(r);
        os << "value          " << full(r.value) << "\n";
        if (r.value_imag != 0)
            os << "imaginary part " << full(r.value_imag) << "\n";
        if (r.has_error_estimate)
            os << "error estimate " << short_num(r.error_estimate, 6) << "\n";
        os << "rho            " << short_num(r.rho.re, 15);
        if (r.rho.im != 0)
            os << " + " << short_num(r.rho.im, 15) << "i";
        os << " (" << r.chosen_from << (r.flagged ? ", flagged" : "") << ")\n";
        if (!r.diagnostic.empty())
            os << "diagnostic     " << r.diagnostic << "\n";
    } else if (method == "borel-map") {
        BorelConfig bc;
        bc.sigma = real_at(c, "sigma");
        bc.a = real_at(c, "a");
        bc.truncation = int_at(c, "order");
        BorelResult r = borel_sum(s, bc, g.value);
        res = Json{{"value", full(r.value)},
                   {"error_estimate", full(r.truncation_error)},
                   {"quadrature_error", full(r.quadrature_error)}};
        os << "value          " << full(r.value) << "\n"
           << "error estimate " << short_num(r.truncation_error, 6) << "\n"
           << "quadrature     " << short_num(r.quadrature_error, 6) << "\n";
    } else {
        const int L = int_at(c, "L"), M = int_at(c, "M");
        auto approx = [&](int l) -> Real {
            if (method == "pade")
                return pade_eval_checked(pade_fit(s, l, M), g.value).value;
            return borel_pade_sum(s, real_at(c, "sigma"), l, M, g.value).value;
        };
        Real v;
        bool near_pole = false;
        if (method == "pade") {
            PadeValue pv = pade_eval_checked(pade_fit(s, L, M), g.value);
            v = pv.value;
            near_pole = pv.near_pole;
        } else {
            v = approx(L);
        }
        res["value"] = full(v);
        os << "value          " << full(v) << "\n";
        // neighbouring approximant as a rough error estimate
        if (L >= 1) {
            try {
                Real e = mp::abs(v - approx(L - 1));
                res["error_estimate"] = full(e);
                os << "error estimate " << short_num(e, 6) << " (vs [" << L - 1 << "/" << M << "])\n";
            } catch (const Error& e) {
                res["error_estimate_unavailable"] = e.what();
            }
        }
        if (near_pole) {
            res["diagnostic"] = "evaluation point is close to a pole of the approximant";
            os << "diagnostic     evaluation point is close to a pole of the approximant\n";
        }
    }
    o.report["result"] = res;
    o.report["status"] = "pass";
    o.summary = os.str();
    return o;
}

// ---- study ----

Json normalize_study(Json c)
{
    allow_only(c, {"series", "g", "max_order", "k_min", "fit_from", "oracle", "error_vs_k", "family", "alpha",
                   "prefactor_p", "mode", "tau", "allow_complex", "cluster_fraction"},
               "study");
    if (!c.contains("series"))
        throw UsageError("study needs a series");
    odm_defaults(c);
    default_to(c, "g", "inf");
    default_to(c, "k_min", 1);
    default_to(c, "fit_from", 0);
    default_to(c, "oracle", "none");
    default_to(c, "error_vs_k", false);
    int_at(c, "max_order");
    const std::string oracle = str_at(c, "oracle");
    if (oracle != "quadrature" && oracle != "diagonalization" && oracle != "none")
        throw UsageError("oracle must be quadrature, diagonalization or none");
    return c;
}

Outcome run_study(const Json& c)
{
    Outcome o;
    o.report = base_report(c);
    const SeriesFile f = series_file_from_json(c["series"]);
    const PowerSeries s = f.series();
    const int K = int_at(c, "max_order");
    if (K + 1 > s.order())
        throw UsageError("max order " + std::to_string(K) + " needs coefficients through order " +
                         std::to_string(K + 1) + "; the series stops at " + std::to_string(s.order()));
    const Coupling g = coupling_at(c, "g");
    const std::string oracle_kind = str_at(c, "oracle");

    std::optional<Real> oracle;
    std::string oracle_note;
    if (oracle_kind != "none") {
        const std::string kind = f.source_kind();
        if (kind.empty()) {
            oracle_note = "no oracle for a coefficient file; error estimates only";
        } else if (oracle_kind == "quadrature" && kind == "d0") {
            oracle = g.infinite ? d0_strong_amplitude() : d0_partition_value(g);
        } else if (oracle_kind == "diagonalization" && kind == "anharmonic") {
            DiagonalizationOptions d;
            d.relative_tolerance = eps_digits(current_precision().decimal_digits / 2);
            oracle = anharmonic_ground_value(g, d);
        } else {
            throw UsageError("oracle " + oracle_kind + " is not available for generator " + kind);
        }
    }

    StudyOptions opt;
    opt.k_min = int_at(c, "k_min");
    opt.fit_from = int_at(c, "fit_from");
    opt.error_vs_k = bool_at(c, "error_vs_k");
    RhoPolynomialTable t = build_rho_table(s, mapping_from(c));
    ConvergenceStudy st = convergence_study(t, criterion_from(c), K, g, oracle, opt);

    CsvTable csv({"k", "rho_re", "rho_im", "chosen_from", "flagged", "value", "error_estimate", "delta"});
    Json orders = Json::array();
    std::vector<Real> ek, elog;  // for the estimate-based rate when there is no oracle
    std::vector<Real> ek_even, elog_even, ek_odd, elog_odd;
    for (size_t i = 0; i < st.reports.size(); ++i) {
        const OdmReport& r = st.reports[i];
        Json j = odm_report_json(r);
        if (st.delta[i])
            j["delta"] = full(*st.delta[i]);
        orders.push_back(j);
        if (!r.evaluated) {
            csv.add({std::to_string(r.k), "", "", r.chosen_from, "true", "", "", ""});
            continue;
        }
        csv.add({std::to_string(r.k), short_num(r.rho.re), short_num(r.rho.im), r.chosen_from,
                 r.flagged ? "true" : "false", short_num(r.value), r.has_error_estimate ? short_num(r.error_estimate) : "",
                 st.delta[i] ? short_num(*st.delta[i]) : ""});
        if (r.has_error_estimate && r.error_estimate > 0 && r.k >= std::max(opt.k_min, opt.fit_from)) {
            Real x = opt.error_vs_k ? Real(r.k) : mp::pow(Real(r.k), st.error_exponent);
            Real y = mp::log(r.error_estimate);
            ek.push_back(x);
            elog.push_back(y);
            (r.k % 2 ? ek_odd : ek_even).push_back(x);
            (r.k % 2 ? elog_odd : elog_even).push_back(y);
        }
    }
    Json res;
    res["orders"] = orders;
    if (st.inverse_rho)
        res["R_fit"] = fit_json(*st.inverse_rho, true);
    res["error_exponent"] = full(st.error_exponent);
    if (st.log_error) {
        res["rate_fit"] = fit_json(*st.log_error, false);
        res["rate_fit_source"] = "oracle";
    } else if (ek_even.size() >= 2 && ek_odd.size() >= 2) {
        res["rate_fit"] = fit_json(ConvergenceFit{fit_line(ek, elog), fit_line(ek_even, elog_even),
                                                  fit_line(ek_odd, elog_odd)},
                                   false);
        res["rate_fit_source"] = "error_estimate";
    }
    if (!oracle_note.empty())
        res["flagged"] = oracle_note;
    o.report["result"] = res;
    o.report["status"] = "pass";
    o.csv = csv.str();

    std::ostringstream os;
    os << "orders " << opt.k_min << ".." << K << ", oracle " << (oracle ? oracle_kind : std::string("none")) << "\n";
    if (!oracle_note.empty())
        os << "flagged: " << oracle_note << "\n";
    if (st.inverse_rho)
        os << "R_fit     " << short_num(1 / st.inverse_rho->full.slope, 6) << " (even "
           << short_num(1 / st.inverse_rho->even.slope, 6) << ", odd " << short_num(1 / st.inverse_rho->odd.slope, 6)
           << ")\n";
    if (res.contains("rate_fit"))
        os << "rate_fit  " << short_num(parse_real(res["rate_fit"]["full"]["slope"].get<std::string>()), 6) << " per "
           << (opt.error_vs_k ? "k" : "k^" + short_num(st.error_exponent, 4)) << " ("
           << res["rate_fit_source"].get<std::string>() << ")\n";
    o.summary = os.str();
    return o;
}

// ---- reproduce ----

Outcome reproduce_saddle(const Json& c)
{
    Outcome o;
    o.report = base_report(c);
    Checks ck;
    const Real tol("1e-8"), rtol("1e-12");
    CsvTable csv({"alpha", "mu", "minus_lambda", "ref_mu", "ref_minus_lambda", "delta_mu", "delta_minus_lambda"});
    Json rows = Json::array();
    for (const auto& row : ref::saddle_table()) {
        SaddleSolution s = solve_saddle(parse_real(row.alpha));
        Real rmu = parse_real(row.mu), rl = parse_real(row.minus_lambda);
        csv.add({row.alpha, short_num(s.mu), short_num(-s.lambda), row.mu, row.minus_lambda, short_num(s.mu - rmu, 3),
                 short_num(-s.lambda - rl, 3)});
        rows.push_back(Json{{"alpha", row.alpha}, {"mu", full(s.mu)}, {"lambda", full(s.lambda)},
                            {"residual1", full(s.residual1)}, {"residual2", full(s.residual2)}});
        ck.add(std::string("mu alpha=") + row.alpha, close(s.mu, rmu, tol), within(s.mu, rmu, tol));
        ck.add(std::string("lambda alpha=") + row.alpha, close(-s.lambda, rl, tol), within(-s.lambda, rl, tol));
        ck.add(std::string("residual alpha=") + row.alpha, s.residual1 < rtol && s.residual2 < rtol,
               short_num(std::max<Real>(s.residual1, s.residual2), 3));
    }
    o.report["result"] = Json{{"rows", rows}};
    o.csv = csv.str();
    ck.finish(o, "saddle-table");
    return o;
}

struct OdmRowData {
    Real inv_rho, delta, ln;
};

OdmRowData odm_row(const pipelines::OdmRun& run, int k)
{
    size_t i = static_cast<size_t>(k - run.setup.k_min);
    const OdmReport& r = run.study.reports.at(i);
    if (!r.evaluated || !run.study.delta[i])
        throw SolverFailure("order " + std::to_string(k) + " was not evaluated: " + r.diagnostic);
    Real d = *run.study.delta[i];
    return OdmRowData{1 / abs(r.rho), d, mp::log(mp::abs(d))};
}

Json odm_run_json(const pipelines::OdmRun& run)
{
    Json orders = Json::array();
    for (size_t i = 0; i < run.study.reports.size(); ++i) {
        Json j = odm_report_json(run.study.reports[i]);
        if (run.study.delta[i])
            j["delta"] = full(*run.study.delta[i]);
        orders.push_back(j);
    }
    Json r{{"oracle", full(run.oracle)}, {"orders", orders}};
    if (run.study.inverse_rho)
        r["R_fit"] = fit_json(*run.study.inverse_rho, true);
    if (run.study.log_error)
        r["rate_fit"] = fit_json(*run.study.log_error, false);
    return r;
}

CsvTable odm_csv(const pipelines::OdmRun& run, const std::vector<ref::OdmRow>& table, const char* delta_name)
{
    CsvTable csv({"k", "inv_rho", delta_name, "ln_abs_delta", "ref_inv_rho", "ref_ln_abs_delta", "rel_delta_inv_rho",
                  "delta_ln_abs_delta"});
    for (const auto& row : table) {
        OdmRowData d = odm_row(run, row.k);
        Real ri = parse_real(row.inv_rho), rl = parse_real(row.ln_abs_delta);
        // tabulated delta is exact minus approximant
        Real shown = std::string(delta_name) == "abs_delta" ? mp::abs(d.delta) : d.delta;
        csv.add({std::to_string(row.k), short_num(d.inv_rho, 8), short_num(shown, 3), short_num(d.ln, 6), row.inv_rho,
                 row.ln_abs_delta, short_num((d.inv_rho - ri) / ri, 3), short_num(d.ln - rl, 3)});
    }
    return csv;
}

Outcome reproduce_d0_strong(const Json& c)
{
    Outcome o;
    o.report = base_report(c);
    pipelines::OdmRun run = pipelines::run_d0_strong();
    Checks ck;
    for (const auto& row : ref::d0_strong_table()) {
        OdmRowData d = odm_row(run, row.k);
        Real ri = parse_real(row.inv_rho), rl = parse_real(row.ln_abs_delta);
        Real rel = mp::abs(d.inv_rho - ri) / ri;
        ck.add("1/rho k=" + std::to_string(row.k), rel <= Real("0.02"),
               short_num(d.inv_rho, 8) + " vs " + row.inv_rho + " (rel " + short_num(rel, 3) + ", tol 2e-2)");
        ck.add("ln|delta| k=" + std::to_string(row.k), close(d.ln, rl, Real("1.5")), within(d.ln, rl, Real("1.5")));
    }
    if (!run.study.inverse_rho || !run.study.log_error)
        throw FitFailure("odm-d0-strong: fits unavailable");
    Real slope = run.study.inverse_rho->full.slope;
    ck.add("slope of 1/rho", close(slope, Real("0.2209"), Real("0.005")),
           within(slope, Real("0.2209"), Real("0.005")));
    Real rate = -run.study.log_error->full.slope;
    ck.add("-d ln|delta|/dk", rate >= Real("0.6") && rate <= Real("0.75"), short_num(rate, 6) + " in [0.6, 0.75]");
    o.report["result"] = odm_run_json(run);
    o.csv = odm_csv(run, ref::d0_strong_table(), "minus_delta").str();
    ck.finish(o, "odm-d0-strong");
    return o;
}

Outcome reproduce_d0_g5(const Json& c)
{
    Outcome o;
    o.report = base_report(c);
    pipelines::OdmRun run = pipelines::run_d0_g5();
    Checks ck;
    // monotone decrease of |delta| along odd and even rows of the table
    for (int parity = 0; parity < 2; ++parity) {
        bool mono = true;
        std::string trail;
        Real prev = 0;
        bool first = true;
        for (const auto& row : ref::d0_g5_table()) {
            if (row.k % 2 != parity)
                continue;
            Real ln = odm_row(run, row.k).ln;
            if (!first && !(ln < prev))
                mono = false;
            trail += (first ? "" : ", ") + short_num(ln, 4);
            prev = ln;
            first = false;
        }
        ck.add(std::string("monotone |delta| on ") + (parity ? "odd" : "even") + " rows", mono, trail);
    }
    Real ln60 = odm_row(run, 60).ln;
    ck.add("ln|delta| k=60", ln60 <= -24, short_num(ln60, 6) + " <= -24");
    if (!run.study.inverse_rho)
        throw FitFailure("odm-d0-g5: fit unavailable");
    Real R = 1 / run.study.inverse_rho->full.slope, Rt = parse_real(ref::kD0G5AverageR);
    ck.add("R_fit", mp::abs(R - Rt) <= Real("0.15") * Rt,
           short_num(R, 6) + " vs " + ref::kD0G5AverageR + " (rel " + short_num(mp::abs(R - Rt) / Rt, 3) + ", tol 0.15)");
    Real Rp = predicted_R(4, Real(3) / 2), Rpt = parse_real(ref::kD0G5PredictedR);
    ck.add("predicted R", close(Rp, Rpt, Real("1e-4")), within(Rp, Rpt, Real("1e-4")));
    o.report["result"] = odm_run_json(run);
    o.report["result"]["predicted_R"] = full(Rp);
    o.csv = odm_csv(run, ref::d0_g5_table(), "abs_delta").str();
    ck.finish(o, "odm-d0-g5");
    return o;
}

Outcome reproduce_fixed_point(const Json& c)
{
    Outcome o;
    o.report = base_report(c);
    Checks ck;
    auto fps = pipelines::run_phi4_fixed_points(3, 7);
    CsvTable csv({"k", "g_star", "omega", "ref_g_star", "ref_omega", "delta_g_star", "delta_omega", "rho_re", "rho_im",
                  "chosen_from"});
    Json rows = Json::array();
    for (const auto& row : ref::phi4_fixed_point_table()) {
        const FixedPointResult& f = fps.at(static_cast<size_t>(row.k - 3));
        Real rg = parse_real(row.g_star), rw = parse_real(row.omega);
        Real tol = row.k >= 5 ? Real("0.002") : Real("0.005");
        csv.add({std::to_string(row.k), short_num(f.g_star, 8), short_num(f.omega, 8), row.g_star, row.omega,
                 short_num(f.g_star - rg, 3), short_num(f.omega - rw, 3), short_num(f.selection.rho.re, 8),
                 short_num(f.selection.rho.im, 8), f.selection.chosen_from});
        Json j = odm_report_json(f.selection);
        j["g_star"] = complex_json(f.g_star_c);
        j["omega"] = complex_json(f.omega_c);
        j["lambda_star"] = complex_json(f.lambda_star);
        rows.push_back(j);
        ck.add("g* k=" + std::to_string(row.k), close(f.g_star, rg, tol), within(f.g_star, rg, tol));
        ck.add("omega k=" + std::to_string(row.k), close(f.omega, rw, tol), within(f.omega, rw, tol));
    }
    o.report["result"] = Json{{"rows", rows}};
    o.csv = csv.str();
    ck.finish(o, "phi4-fixed-point");
    return o;
}

Outcome reproduce_exponents(const Json& c)
{
    Outcome o;
    o.report = base_report(c);
    Checks ck;
    const Real tol("0.002");
    auto ex = pipelines::run_phi4_exponents(parse_real(ref::kExponentsGStar), 3, 7);
    CsvTable csv({"k", "gamma", "nu", "eta", "ref_gamma", "ref_nu", "ref_eta", "delta_gamma", "delta_nu", "delta_eta",
                  "scaling_residual", "eta_flagged"});
    Json rows = Json::array();
    for (const auto& row : ref::phi4_exponents_table()) {
        const ExponentsResult& e = ex.at(static_cast<size_t>(row.k - 3));
        Real rg = parse_real(row.gamma), rn = parse_real(row.nu);
        Real scaling = mp::abs(e.gamma - e.nu_direct * (2 - e.eta));
        std::string deta, reta = row.eta ? row.eta : "";
        if (row.eta)
            deta = short_num(e.eta - parse_real(row.eta), 3);
        csv.add({std::to_string(row.k), short_num(e.gamma, 8), short_num(e.nu_direct, 8), short_num(e.eta, 8), row.gamma,
                 row.nu, reta, short_num(e.gamma - rg, 3), short_num(e.nu_direct - rn, 3), deta, short_num(scaling, 3),
                 e.eta_report.flagged ? "true" : "false"});
        rows.push_back(Json{{"k", e.k},
                            {"gamma", full(e.gamma)},
                            {"nu", full(e.nu_direct)},
                            {"nu_scaling", full(e.nu_scaling)},
                            {"eta", full(e.eta)},
                            {"gamma_inv", odm_report_json(e.gamma_report)},
                            {"nu_inv", odm_report_json(e.nu_report)},
                            {"eta_over_g2", odm_report_json(e.eta_report)}});
        const std::string k = std::to_string(row.k);
        ck.add("gamma k=" + k, close(e.gamma, rg, tol), within(e.gamma, rg, tol));
        ck.add("nu k=" + k, close(e.nu_direct, rn, tol), within(e.nu_direct, rn, tol));
        if (row.eta)
            ck.add("eta k=" + k, close(e.eta, parse_real(row.eta), tol), within(e.eta, parse_real(row.eta), tol));
        if (row.k >= 4)
            ck.add("scaling relation k=" + k, scaling <= Real("0.01"), short_num(scaling, 3) + " <= 0.01");
    }
    o.report["result"] = Json{{"g_star", ref::kExponentsGStar}, {"rows", rows}};
    o.csv = csv.str();
    ck.finish(o, "phi4-exponents");
    return o;
}

Outcome reproduce_borel(const Json& c)
{
    Outcome o;
    o.report = base_report(c);
    Checks ck;
    const std::string sig = str_at(c, "sigma");
    Real sigma = sig == "auto" ? pipelines::borel_select_sigma(7) : real_at(c, "sigma");
    auto rows = pipelines::run_borel_exponents(sigma, 2, 7);
    CsvTable csv({"k", "g_star", "nu", "gamma", "ref_g_star", "ref_nu", "ref_gamma", "delta_g_star", "delta_nu",
                  "delta_gamma"});
    Json jr = Json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto& t = ref::borel_map_table().at(i);
        csv.add({std::to_string(r.k), short_num(r.g_star, 8), short_num(r.nu, 8), short_num(r.gamma, 8), t.g_star, t.nu,
                 t.gamma, short_num(r.g_star - parse_real(t.g_star), 3), short_num(r.nu - parse_real(t.nu), 3),
                 short_num(r.gamma - parse_real(t.gamma), 3)});
        jr.push_back(Json{{"k", r.k}, {"g_star", full(r.g_star)}, {"nu", full(r.nu)}, {"gamma", full(r.gamma)}});
    }
    const auto& last = rows.back();
    const auto& t7 = ref::borel_map_table().back();
    ck.add("g* k=7", close(last.g_star, parse_real(t7.g_star), Real("0.02")),
           within(last.g_star, parse_real(t7.g_star), Real("0.02")));
    ck.add("nu k=7", close(last.nu, parse_real(t7.nu), Real("0.01")), within(last.nu, parse_real(t7.nu), Real("0.01")));
    ck.add("gamma k=7", close(last.gamma, parse_real(t7.gamma), Real("0.01")),
           within(last.gamma, parse_real(t7.gamma), Real("0.01")));
    auto at = [&](int k) -> const pipelines::BorelRowResult& { return rows.at(static_cast<size_t>(k - 2)); };
    auto stab = [&](const char* name, auto get) {
        Real early = mp::abs(get(at(4)) - get(at(3))), late = mp::abs(get(at(7)) - get(at(6)));
        ck.add(std::string("stabilization ") + name, late < early,
               "|6->7| " + short_num(late, 3) + " < |3->4| " + short_num(early, 3));
    };
    stab("g*", [](const pipelines::BorelRowResult& r) { return r.g_star; });
    stab("nu", [](const pipelines::BorelRowResult& r) { return r.nu; });
    stab("gamma", [](const pipelines::BorelRowResult& r) { return r.gamma; });
    o.report["result"] = Json{{"sigma", full(sigma)}, {"a", ref::kBorelA}, {"rows", jr}};
    o.csv = csv.str();
    ck.finish(o, "borel-map-exponents (sigma " + short_num(sigma, 2) + ")");
    return o;
}

Json normalize_reproduce(Json c)
{
    allow_only(c, {"table", "sigma"}, "reproduce");
    const std::string t = str_at(c, "table");
    const auto& ids = table_ids();
    if (std::find(ids.begin(), ids.end(), t) == ids.end())
        throw UsageError("unknown table id '" + t + "'");
    if (t == "borel-map-exponents")
        default_to(c, "sigma", "auto");
    else if (c.contains("sigma"))
        throw UsageError("option 'sigma' only applies to borel-map-exponents");
    return c;
}

Outcome run_reproduce(const Json& c)
{
    const std::string t = str_at(c, "table");
    if (t == "saddle-table")
        return reproduce_saddle(c);
    if (t == "odm-d0-strong")
        return reproduce_d0_strong(c);
    if (t == "odm-d0-g5")
        return reproduce_d0_g5(c);
    if (t == "phi4-fixed-point")
        return reproduce_fixed_point(c);
    if (t == "phi4-exponents")
        return reproduce_exponents(c);
    return reproduce_borel(c);
}

}  // namespace

const std::vector<std::string>& table_ids()
{
    static const std::vector<std::string> ids = {"saddle-table",     "odm-d0-strong",  "odm-d0-g5",
                                                 "phi4-fixed-point", "phi4-exponents", "borel-map-exponents"};
    return ids;
}

Outcome execute(const Json& raw)
{
    if (!raw.is_object())
        throw UsageError("config must be an object");
    Json c = raw;
    default_to(c, "precision", kDefaultPrecision);
    PrecisionScope scope(int_at(c, "precision"));
    const std::string cmd = str_at(c, "command");
    if (cmd == "sum")
        return run_sum(normalize_sum(c));
    if (cmd == "study")
        return run_study(normalize_study(c));
    if (cmd == "reproduce")
        return run_reproduce(normalize_reproduce(c));
    throw UsageError("unknown command '" + cmd + "'");
}

Outcome replay(const std::string& report_path)
{
    Json stored;
    try {
        stored = Json::parse(read_file(report_path));
    } catch (const Json::parse_error& e) {
        throw ParseError(report_path + ": " + e.what());
    }
    if (!stored.contains("config"))
        throw ParseError(report_path + ": no config echo");
    if (stored.value("schema", 0) != kSchemaVersion)
        throw ParseError(report_path + ": unsupported schema");
    Outcome o = execute(stored["config"]);
    if (o.report.dump() == stored.dump()) {
        o.summary += "replay: report reproduced identically\n";
    } else {
        o.summary += "replay: regenerated report differs from " + report_path + "\n";
        o.exit_code = kToleranceViolation;
    }
    return o;
}

}  // namespace resum::cli
