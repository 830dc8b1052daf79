#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "supercong/sweep.hpp"

namespace supercong::cli {

nlohmann::json report_to_json(const Report& report);
/// Inverse of report_to_json. Throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
Report report_from_json(const nlohmann::json& j);

/// One row per instance, with a header line.
void write_csv(const std::vector<Report>& reports, std::ostream& out);

/// Totals per report; failures are always listed, every instance at
/// verbosity >= 2.
void write_text(const std::vector<Report>& reports, int verbosity, std::ostream& out);

}  // namespace supercong::cli
