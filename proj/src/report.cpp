#include "hardysin/report.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <limits>
#include <filesystem>
#include <sstream>

#include "hardysin/error.hpp"

namespace hardysin::report {
namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const nlohmann::json& cell) {
    if (cell.is_string()) return quote(cell.get<std::string>());
    if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
    if (cell.is_number_integer()) return std::to_string(cell.get<long long>());
    if (cell.is_number()) return format_double(cell.get<double>());
    if (cell.is_null()) return "";
    throw DomainError("to_csv: unsupported cell type");
}

// Splits one CSV record starting at pos; advances pos past the line end.
std::vector<std::pair<std::string, bool>> parse_record(const std::string& text, std::size_t& pos) {
    std::vector<std::pair<std::string, bool>> cells;
    std::string cur;
    bool quoted = false;
    bool in_quotes = false;
    while (pos < text.size()) {
        const char c = text[pos++];
        if (in_quotes) {
            if (c == '"') {
                if (pos < text.size() && text[pos] == '"') {
                    cur += '"';
                    ++pos;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
            quoted = true;
        } else if (c == ',') {
            cells.emplace_back(cur, quoted);
            cur.clear();
            quoted = false;
        } else if (c == '\n') {
            break;
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (in_quotes) throw DomainError("from_csv: unterminated quoted cell");
    cells.emplace_back(cur, quoted);
    return cells;
}

nlohmann::json cell_value(const std::string& raw, bool quoted) {
    if (quoted) return raw;
    if (raw == "true") return true;
    if (raw == "false") return false;
    if (raw.empty()) return nullptr;
    if (raw.find_first_of(".eEn") == std::string::npos) {
        long long i = 0;
        const auto r = std::from_chars(raw.data(), raw.data() + raw.size(), i);
        if (r.ec == std::errc() && r.ptr == raw.data() + raw.size()) return i;
    }
    double d = 0.0;
    const auto r = std::from_chars(raw.data(), raw.data() + raw.size(), d);
    if (r.ec != std::errc() || r.ptr != raw.data() + raw.size()) {
        if (raw == "nan") return std::numeric_limits<double>::quiet_NaN();
        if (raw == "inf") return std::numeric_limits<double>::infinity();
        if (raw == "-inf") return -std::numeric_limits<double>::infinity();
        throw DomainError("from_csv: cannot parse cell '" + raw + "'");
    }
    return d;
}

}  // namespace

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    std::string out(buf, r.ptr);
    // Keep doubles distinguishable from integers.
    if (out.find_first_of(".eni") == std::string::npos) out += ".0";
    return out;
}

nlohmann::json to_json(const ReportEnvelope& env) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : env.results.rows) rows.push_back(row);
    return {
        {"command", env.command},
        {"params", env.params},
        {"results", {{"columns", env.results.columns}, {"rows", rows}}},
        {"tolerances", env.tolerances},
        {"summary", env.summary},
        {"notes", env.notes},
        {"status", env.status},
        {"timestamp", env.timestamp},
        {"schema_version", env.schema_version},
    };
}

ReportEnvelope from_json(const nlohmann::json& j) {
    ReportEnvelope env;
    env.command = j.at("command").get<std::string>();
    env.params = j.at("params").get<std::map<std::string, std::string>>();
    env.results.columns = j.at("results").at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("results").at("rows")) {
        env.results.rows.push_back(row.get<std::vector<nlohmann::json>>());
    }
    env.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
    env.summary = j.value("summary", nlohmann::json::object());
    env.notes = j.value("notes", std::vector<std::string>{});
    env.status = j.at("status").get<std::string>();
    env.timestamp = j.at("timestamp").get<std::string>();
    env.schema_version = j.at("schema_version").get<std::string>();
    return env;
}

std::string to_csv(const Table& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << quote(table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw DomainError("to_csv: row width does not match the header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
    return out.str();
}

Table from_csv(const std::string& text) {
    Table table;
    std::size_t pos = 0;
    if (text.empty()) throw DomainError("from_csv: empty input");
    for (const auto& [name, quoted] : parse_record(text, pos)) table.columns.push_back(name);
    while (pos < text.size()) {
        const auto cells = parse_record(text, pos);
        if (cells.size() == 1 && cells[0].first.empty() && !cells[0].second) continue;
        if (cells.size() != table.columns.size()) {
            throw DomainError("from_csv: row width does not match the header");
        }
        std::vector<nlohmann::json> row;
        for (const auto& [raw, quoted] : cells) row.push_back(cell_value(raw, quoted));
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string render(const ReportEnvelope& env, const std::string& format) {
    if (format == "json") return to_json(env).dump(2) + "\n";
    if (format == "csv") return to_csv(env.results);
    throw DomainError("unknown format '" + format + "' (expected json or csv)");
}

std::string resolve_output(const std::string& output, const std::string& command,
                           const std::string& format) {
    const char* dir = std::getenv("HARDYSIN_OUTPUT_DIR");
    namespace fs = std::filesystem;
    if (!output.empty()) {
        const fs::path p(output);
        if (p.is_relative() && dir != nullptr && *dir != '\0') return (fs::path(dir) / p).string();
        return output;
    }
    if (dir != nullptr && *dir != '\0') {
        return (fs::path(dir) / (command + "." + format)).string();
    }
    return {};
}

}  // namespace hardysin::report
