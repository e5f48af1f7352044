#include "series_file.hpp"

#include "resum/errors.hpp"
#include "resum/models.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

namespace resum::cli {

namespace {

const int kRgOrder = 7;

std::string where(const std::string& origin, const YAML::Node& n, const std::string& field)
{
    std::ostringstream os;
    os << origin;
    if (n.Mark().line >= 0)
        os << ":" << n.Mark().line + 1;
    os << ": field '" << field << "'";
    return os.str();
}

std::string scalar(const std::string& origin, const YAML::Node& n, const std::string& field)
{
    if (!n.IsScalar())
        throw ParseError(where(origin, n, field) + " must be a scalar");
    return n.Scalar();
}

}  // namespace

PowerSeries SeriesFile::series() const
{
    if (!generator)
        return PowerSeries::parse(coefficients, variable);
    const int K = generator->order;
    const std::string& kind = generator->kind;
    PowerSeries s = [&]() {
        if (kind == "d0")
            return d0_partition_coeffs(K);
        if (kind == "anharmonic")
            return anharmonic_ground_coeffs(K);
        if (K > kRgOrder)
            throw UsageError("generator " + kind + ": only " + std::to_string(kRgOrder) +
                             " orders are known");
        RgSeriesSet rg = rg_series();
        if (kind == "rg_beta")
            return rg.beta.truncated(K);
        if (kind == "rg_gamma_inv")
            return rg.gamma_inv.truncated(K);
        if (kind == "rg_eta")
            return rg.eta.truncated(K);
        throw UsageError("unknown generator kind '" + kind + "'");
    }();
    return s.relabeled(variable);
}

SeriesFile parse_series_file(const std::string& text, const std::string& origin)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ParseError(origin + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    if (!root.IsMap())
        throw ParseError(origin + ": expected a mapping at top level");

    for (auto it = root.begin(); it != root.end(); ++it) {
        std::string key = it->first.as<std::string>();
        if (key != "name" && key != "variable" && key != "coefficients" && key != "generator" &&
            key != "large_order")
            throw ParseError(where(origin, it->first, key) + " is not recognised");
    }

    SeriesFile f;
    if (root["name"])
        f.name = scalar(origin, root["name"], "name");
    if (root["variable"])
        f.variable = scalar(origin, root["variable"], "variable");

    const bool has_coeffs = static_cast<bool>(root["coefficients"]);
    const bool has_gen = static_cast<bool>(root["generator"]);
    if (has_coeffs == has_gen)
        throw ParseError(origin + ": exactly one of 'coefficients' and 'generator' is required");

    if (has_coeffs) {
        YAML::Node c = root["coefficients"];
        if (!c.IsSequence() || c.size() == 0)
            throw ParseError(where(origin, c, "coefficients") + " must be a non-empty list");
        for (size_t i = 0; i < c.size(); ++i) {
            std::string field = "coefficients[" + std::to_string(i) + "]";
            std::string v = scalar(origin, c[i], field);
            try {
                parse_real(v);
            } catch (const ParseError& e) {
                throw ParseError(where(origin, c[i], field) + ": " + e.what());
            }
            f.coefficients.push_back(v);
        }
    } else {
        YAML::Node g = root["generator"];
        if (!g.IsMap() || !g["kind"] || !g["order"])
            throw ParseError(where(origin, g, "generator") + " needs 'kind' and 'order'");
        Generator gen;
        gen.kind = scalar(origin, g["kind"], "generator.kind");
        if (gen.kind != "d0" && gen.kind != "anharmonic" && gen.kind != "rg_beta" &&
            gen.kind != "rg_gamma_inv" && gen.kind != "rg_eta")
            throw ParseError(where(origin, g["kind"], "generator.kind") + ": unknown kind '" + gen.kind + "'");
        std::string order = scalar(origin, g["order"], "generator.order");
        try {
            size_t used = 0;
            gen.order = std::stoi(order, &used);
            if (used != order.size() || gen.order < 0)
                throw std::invalid_argument(order);
        } catch (const std::exception&) {
            throw ParseError(where(origin, g["order"], "generator.order") + ": not a non-negative integer");
        }
        if (gen.kind.rfind("rg_", 0) == 0 && gen.order > kRgOrder)
            throw ParseError(where(origin, g["order"], "generator.order") + ": only " + std::to_string(kRgOrder) +
                             " orders are known for " + gen.kind);
        f.generator = gen;
    }

    if (root["large_order"]) {
        YAML::Node lo = root["large_order"];
        if (!lo.IsMap() || !lo["A"] || !lo["b"])
            throw ParseError(where(origin, lo, "large_order") + " needs 'A' and 'b'");
        LargeOrder l{scalar(origin, lo["A"], "large_order.A"), scalar(origin, lo["b"], "large_order.b")};
        for (const auto& [field, v] : {std::pair{"large_order.A", l.A}, std::pair{"large_order.b", l.b}}) {
            try {
                parse_real(v);
            } catch (const ParseError& e) {
                throw ParseError(where(origin, lo, field) + ": " + e.what());
            }
        }
        f.large_order = l;
    }
    return f;
}

SeriesFile load_series_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open series file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_series_file(ss.str(), path);
}

nlohmann::ordered_json to_json(const SeriesFile& f)
{
    nlohmann::ordered_json j;
    j["name"] = f.name;
    j["variable"] = f.variable;
    if (f.generator)
        j["generator"] = {{"kind", f.generator->kind}, {"order", f.generator->order}};
    else
        j["coefficients"] = f.coefficients;
    if (f.large_order)
        j["large_order"] = {{"A", f.large_order->A}, {"b", f.large_order->b}};
    return j;
}

SeriesFile series_file_from_json(const nlohmann::ordered_json& j)
{
    SeriesFile f;
    f.name = j.value("name", "");
    f.variable = j.value("variable", "g");
    if (j.contains("generator"))
        f.generator = Generator{j["generator"].at("kind").get<std::string>(), j["generator"].at("order").get<int>()};
    else
        f.coefficients = j.at("coefficients").get<std::vector<std::string>>();
    if (j.contains("large_order"))
        f.large_order = LargeOrder{j["large_order"].at("A").get<std::string>(),
                                   j["large_order"].at("b").get<std::string>()};
    return f;
}

}  // namespace resum::cli
