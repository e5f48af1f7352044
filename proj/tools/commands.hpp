#pragma once

#include "report.hpp"

#include <string>

namespace resum::cli {

enum ExitCode { kPass = 0, kOperational = 1, kToleranceViolation = 2 };

struct Outcome {
    Json report;
    std::string csv;
    std::string summary;  // human-readable lines for stdout
    int exit_code = kPass;
};

// Runs a command described entirely by its config (the "config" member of a report).
// Missing optional keys get defaults; the echoed config in the report is the
// completed one, so execute(report["config"]) reproduces the report.
Outcome execute(const Json& config);

// Re-runs the config stored in a report file.  The exit code is that of the rerun,
// or kToleranceViolation when the regenerated report differs from the stored one.
Outcome replay(const std::string& report_path);

// Table ids accepted by the reproduce command.
const std::vector<std::string>& table_ids();

}  // namespace resum::cli
