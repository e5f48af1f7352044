#include "commands.hpp"
#include "series_file.hpp"

#include "resum/errors.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <optional>

using namespace resum;
using namespace resum::cli;

namespace {

struct OdmFlags {
    std::optional<std::string> family, alpha, prefactor_p, mode, tau, cluster;
    bool allow_complex = false;

    void attach(CLI::App* app)
    {
        app->add_option("--family", family, "mapping family: power-cut or shifted-power");
        app->add_option("--alpha", alpha, "mapping exponent");
        app->add_option("--prefactor-p", prefactor_p, "prefactor exponent p, f = (1-lambda)^p * ...");
        app->add_option("--select", mode, "rho selection: root, stationary, mixed, stationary-then-root");
        app->add_option("--tau", tau, "smallness factor of the selection test");
        app->add_option("--cluster-fraction", cluster, "drop candidates below this fraction of the largest |rho|");
        app->add_flag("--allow-complex", allow_complex, "accept complex rho (shifted-power or g = inf)");
    }
    void put(Json& c) const
    {
        if (family)
            c["family"] = *family;
        if (alpha)
            c["alpha"] = *alpha;
        if (prefactor_p)
            c["prefactor_p"] = *prefactor_p;
        if (mode)
            c["mode"] = *mode;
        if (tau)
            c["tau"] = *tau;
        if (cluster)
            c["cluster_fraction"] = *cluster;
        if (allow_complex)
            c["allow_complex"] = true;
    }
};

int emit(const Outcome& o, const std::optional<std::string>& out, const std::optional<std::string>& csv)
{
    std::cout << o.summary;
    if (!o.csv.empty()) {
        if (csv)
            write_file(*csv, o.csv);
        else
            std::cout << o.csv;
    }
    if (out)
        write_file(*out, o.report.dump(2) + "\n");
    return o.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"resum: resummation of divergent perturbative series"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    std::optional<int> precision;
    std::optional<std::string> out, csv;
    app.add_option("--precision", precision, "working precision in decimal digits (default $RESUM_PRECISION or 64)");
    app.add_option("--out", out, "write the JSON report here");
    app.add_option("--csv", csv, "write CSV here instead of stdout");

    // sum
    auto* sum = app.add_subcommand("sum", "sum a series at one coupling");
    std::string sum_file, method, g = "1";
    std::optional<int> order, L, M;
    std::optional<std::string> sigma, a;
    OdmFlags sum_odm;
    sum->add_option("series", sum_file, "series file (YAML)")->required();
    sum->add_option("--method", method, "odm, borel-map, borel-pade or pade")->required();
    sum->add_option("--g", g, "coupling, or inf");
    sum->add_option("--order,-k", order, "truncation order");
    sum->add_option("--sigma", sigma, "Borel-Leroy parameter");
    sum->add_option("--a", a, "Borel-plane singularity scale (default 1/A from large_order)");
    sum->add_option("--L", L, "Pade numerator degree");
    sum->add_option("--M", M, "Pade denominator degree");
    sum_odm.attach(sum);

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "recompute a reference table and compare");
    std::string table;
    std::optional<std::string> rep_sigma;
    rep->add_option("table", table, "table id")->required()->check(CLI::IsMember(table_ids()));
    rep->add_option("--sigma", rep_sigma, "borel-map-exponents: Leroy parameter or 'auto'");

    // study
    auto* study = app.add_subcommand("study", "convergence study over orders");
    std::string study_file, study_g = "inf", oracle = "none";
    int max_order = 0;
    std::optional<int> k_min, fit_from;
    bool error_vs_k = false;
    OdmFlags study_odm;
    study->add_option("series", study_file, "series file (YAML)")->required();
    study->add_option("--max-order,-K", max_order, "highest order")->required();
    study->add_option("--k-min", k_min, "lowest order");
    study->add_option("--fit-from", fit_from, "first order entering the fits");
    study->add_option("--g", study_g, "coupling, or inf");
    study->add_option("--oracle", oracle, "quadrature, diagonalization or none")
        ->check(CLI::IsMember({"quadrature", "diagonalization", "none"}));
    study->add_flag("--error-vs-k", error_vs_k, "fit ln|delta| against k instead of k^(1-1/alpha)");
    study_odm.attach(study);

    // replay
    auto* rpl = app.add_subcommand("replay", "re-run the config echoed in a JSON report");
    std::string report_path;
    rpl->add_option("report", report_path, "JSON report")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kOperational;
    }

    const auto t0 = std::chrono::steady_clock::now();
    int rc = kOperational;
    try {
        Json c;
        c["precision"] = precision ? *precision : precision_from_env(64).decimal_digits;
        if (*sum) {
            c["command"] = "sum";
            PrecisionScope scope(c["precision"].get<int>());
            c["series"] = to_json(load_series_file(sum_file));
            c["method"] = method;
            c["g"] = g;
            if (order)
                c["order"] = *order;
            if (sigma)
                c["sigma"] = *sigma;
            if (a)
                c["a"] = *a;
            if (L)
                c["L"] = *L;
            if (M)
                c["M"] = *M;
            sum_odm.put(c);
            rc = emit(execute(c), out, csv);
        } else if (*rep) {
            c["command"] = "reproduce";
            c["table"] = table;
            if (rep_sigma)
                c["sigma"] = *rep_sigma;
            rc = emit(execute(c), out, csv);
        } else if (*study) {
            c["command"] = "study";
            PrecisionScope scope(c["precision"].get<int>());
            c["series"] = to_json(load_series_file(study_file));
            c["g"] = study_g;
            c["max_order"] = max_order;
            c["oracle"] = oracle;
            if (k_min)
                c["k_min"] = *k_min;
            if (fit_from)
                c["fit_from"] = *fit_from;
            if (error_vs_k)
                c["error_vs_k"] = true;
            study_odm.put(c);
            rc = emit(execute(c), out, csv);
        } else {
            rc = emit(replay(report_path), out, csv);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kOperational;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kOperational;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "wall time " << secs << " s\n";
    return rc;
}
