#pragma once

// Machine-readable report envelope shared by the CLI and the Python module.

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

namespace hardysin::report {

inline constexpr const char* kSchemaVersion = "1.0";

struct Table {
    std::vector<std::string> columns;
    // Cells are numbers, booleans or strings.
    std::vector<std::vector<nlohmann::json>> rows;
};

struct ReportEnvelope {
    std::string command;
    std::map<std::string, std::string> params;
    Table results;
    std::map<std::string, double> tolerances;
    nlohmann::json summary = nlohmann::json::object();
    std::vector<std::string> notes;
    std::string status = "pass";
    std::string timestamp;
    std::string schema_version = kSchemaVersion;
};

// Current UTC time, ISO 8601.
std::string utc_timestamp();

// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

nlohmann::json to_json(const ReportEnvelope& env);
ReportEnvelope from_json(const nlohmann::json& j);

// Header row plus one line per table row; strings are always quoted.
std::string to_csv(const Table& table);
// Inverse of to_csv: quoted cells are strings, true/false are booleans,
// everything else is parsed as a number.
Table from_csv(const std::string& text);

// Serialized report text ("json" or "csv").
std::string render(const ReportEnvelope& env, const std::string& format);

// Destination for a report: `output` when given (relative paths resolve
// against $HARDYSIN_OUTPUT_DIR when set), else $HARDYSIN_OUTPUT_DIR/<command>.<ext>,
// else empty for standard output.
std::string resolve_output(const std::string& output, const std::string& command,
                           const std::string& format);

}  // namespace hardysin::report
