#include "doctest.h"

#include "commands.hpp"
#include "series_file.hpp"

#include "resum/errors.hpp"
#include "resum/models.hpp"

using namespace resum;
using namespace resum::cli;
namespace mp = boost::multiprecision;

namespace {

std::string data(const std::string& name)
{
    return std::string(RESUM_TEST_DATA) + "/" + name;
}

Json sum_config(const std::string& file, const std::string& method)
{
    Json c;
    c["command"] = "sum";
    c["series"] = to_json(load_series_file(data(file)));
    c["method"] = method;
    return c;
}

Real value_of(const Outcome& o)
{
    return parse_real(o.report["result"]["value"].get<std::string>());
}

}  // namespace

TEST_CASE("series file parse errors carry location and field")
{
    try {
        load_series_file(data("bad_coefficient.yaml"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string m = e.what();
        CHECK(m.find("bad_coefficient.yaml:4") != std::string::npos);
        CHECK(m.find("coefficients") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_series_file("name: x\n"), ParseError);
    CHECK_THROWS_AS(parse_series_file("name: x\ncoefficients: [\"1\"]\ngenerator: {kind: d0, order: 3}\n"), ParseError);
    CHECK_THROWS_AS(parse_series_file("name: x\ncoefficients: [\"1\"]\ncolour: red\n"), ParseError);
    CHECK_THROWS_AS(parse_series_file("name: x\ngenerator: {kind: rg_beta, order: 9}\n"), ParseError);
}

TEST_CASE("series file round trip through JSON")
{
    SeriesFile f = load_series_file(data("rg_beta.yaml"));
    SeriesFile g = series_file_from_json(to_json(f));
    CHECK(g.variable == "g̃");
    CHECK(g.series().order() == 7);
    PowerSeries a = f.series(), b = rg_series().beta;
    for (int k = 0; k <= 7; ++k)
        CHECK(a[k] == b[k]);
}

TEST_CASE("sum: [0/1] Pade of the alternating series")
{
    Json c = sum_config("alternating4.yaml", "pade");
    c["L"] = 0;
    c["M"] = 1;
    Outcome o = execute(c);
    CHECK(o.exit_code == kPass);
    CHECK(mp::abs(value_of(o) - Real("0.5")) < eps_digits(2));
}

TEST_CASE("sum: odm at g = inf on the d0 series")
{
    Json c = sum_config("d0_40.yaml", "odm");
    c["g"] = "inf";
    c["order"] = 30;
    c["prefactor_p"] = "1/2";
    Outcome o = execute(c);
    CHECK(mp::abs(value_of(o) - d0_strong_amplitude()) < Real("1e-10"));
    CHECK(o.report["config"]["mode"] == "mixed");
}

TEST_CASE("inconsistent options are usage errors")
{
    Json c = sum_config("alternating4.yaml", "pade");
    c["L"] = 0;
    c["M"] = 1;
    c["sigma"] = "1";
    CHECK_THROWS_AS(execute(c), UsageError);

    Json b = sum_config("alternating4.yaml", "borel-map");
    CHECK_THROWS_AS(execute(b), UsageError);  // no a and no large_order

    Json p = sum_config("alternating4.yaml", "pade");
    p["L"] = 0;
    p["M"] = 1;
    p["g"] = "inf";
    CHECK_THROWS_AS(execute(p), UsageError);

    Json s;
    s["command"] = "study";
    s["series"] = to_json(load_series_file(data("alternating4.yaml")));
    s["max_order"] = 3;
    s["oracle"] = "diagonalization";
    CHECK_THROWS_AS(execute(s), UsageError);
}

TEST_CASE("config echo reproduces the report")
{
    Json c = sum_config("d0_40.yaml", "odm");
    c["g"] = "2";
    c["order"] = 12;
    Outcome a = execute(c);
    Outcome b = execute(a.report["config"]);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.report["schema"] == 1);
    CHECK(a.report["tool"] == "resum");
    Outcome again = execute(c);
    CHECK(again.report.dump() == a.report.dump());
}

TEST_CASE("study of a coefficient-only series is flagged")
{
    Json c;
    c["command"] = "study";
    c["series"] = to_json(load_series_file(data("geometric.yaml")));
    c["g"] = "2";
    c["max_order"] = 29;
    c["k_min"] = 5;
    c["oracle"] = "quadrature";
    Outcome o = execute(c);
    CHECK(o.report["result"].contains("flagged"));
    CHECK(o.report["result"]["rate_fit_source"] == "error_estimate");
    CHECK(o.csv.find("k,rho_re,rho_im") == 0);
}

TEST_CASE("reproduce")
{
    Json c;
    c["command"] = "reproduce";
    c["table"] = "saddle-table";
    Outcome o = execute(c);
    CHECK(o.exit_code == kPass);
    CHECK(o.report["status"] == "pass");
    c["table"] = "no-such-table";
    CHECK_THROWS_AS(execute(c), UsageError);
}
