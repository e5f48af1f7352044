#pragma once

#include "resum/real.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace resum::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
// significant digits in CSV cells
inline constexpr int kCsvDigits = 15;

// full working precision, scientific
std::string full(const Real& x);
std::string short_num(const Real& x, int digits = kCsvDigits);
Json complex_json(const Cx& z);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row);  // throws UsageError on width mismatch
    std::string str() const;
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace resum::cli
