#pragma once

#include "resum/series.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace resum::cli {

struct Generator {
    std::string kind;  // d0 | anharmonic | rg_beta | rg_gamma_inv | rg_eta
    int order = 0;
};

struct LargeOrder {
    std::string A;
    std::string b;
};

struct SeriesFile {
    std::string name;
    std::string variable = "g";
    std::vector<std::string> coefficients;
    std::optional<Generator> generator;
    std::optional<LargeOrder> large_order;

    PowerSeries series() const;
    // "d0", "anharmonic" or "" for coefficient files; selects the oracle in study runs
    std::string source_kind() const { return generator ? generator->kind : std::string(); }
};

// YAML text; `origin` is used in error messages.
SeriesFile parse_series_file(const std::string& text, const std::string& origin = "<input>");
SeriesFile load_series_file(const std::string& path);

nlohmann::ordered_json to_json(const SeriesFile& f);
SeriesFile series_file_from_json(const nlohmann::ordered_json& j);

}  // namespace resum::cli
