#pragma once

#include "defzero/experiments.hpp"
#include "defzero/network.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace defzero {

inline constexpr const char* kSchemaVersion = "1";

/// A result table together with everything needed to reproduce it.
struct OutputRecord {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::vector<std::string> columns;
    /// One JSON array per row, aligned with `columns`.
    std::vector<nlohmann::json> rows;

    /// "# defzero schema_version=1 command=<cmd> config=<json>" then the header
    /// line and one line per row.
    std::string to_csv() const;
    /// {"schema_version": "1", "command": ..., "config": {...}, "rows": [{...}]}
    nlohmann::json to_json() const;
};

/// n,p,trials,successes,estimate,ci_low,ci_high,wall_time_ms
std::vector<std::string> estimate_columns();
/// n,k,trials,successes,estimate,ci_low,ci_high,wall_time_ms
std::vector<std::string> estimate_columns_k();
nlohmann::json estimate_cells(const EstimateRow& row);
nlohmann::json estimate_cells_k(const EstimateRow& row);

/// n,p,trials,conditioning_events,successes,estimate,ci_low,ci_high,wall_time_ms;
/// estimate and interval are null when nothing was conditioned on.
std::vector<std::string> conditional_columns();
nlohmann::json conditional_cells(const ConditionalEstimate& est, std::uint32_t n, double p);

nlohmann::json report_to_json(const DeficiencyReport& report);
std::string render_report_text(const DeficiencyReport& report, std::uint32_t species_count);

} // namespace defzero
