#include "orbitsep/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>

#include "orbitsep/errors.hpp"

namespace orbitsep {

namespace {

bool needs_quotes(const std::string& cell) {
  return cell.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_escape(const std::string& cell) {
  if (!needs_quotes(cell)) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw DimensionError("row width does not match the header");
  rows.push_back(std::move(row));
}

void Report::add_summary(std::string key, std::string value) {
  summary.emplace_back(std::move(key), std::move(value));
}

std::string to_csv(const Report& report) {
  std::string out;
  for (std::size_t c = 0; c < report.table.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(report.table.columns[c]);
  }
  out += '\n';
  for (const auto& row : report.table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_escape(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["summary"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.summary) j["summary"][key] = value;
  j["columns"] = report.table.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.table.rows) j["rows"].push_back(row);
  return j.dump(2) + "\n";
}

std::string manifest_json(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["subcommand"] = manifest.subcommand;
  j["flags"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : manifest.flags) j["flags"][key] = value;
  j["seed"] = manifest.seed;
  j["version"] = manifest.version;
  j["started_utc"] = manifest.started_utc;
  j["finished_utc"] = manifest.finished_utc;
  j["outputs"] = manifest.outputs;
  return j.dump(2) + "\n";
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit_report(const Report& report, const std::string& format,
                 const std::string& path, const RunManifest& manifest) {
  const std::string payload =
      format == "json" ? to_json(report) : to_csv(report);
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write output file: " + path);
    out << payload;
    if (!out) throw FormatError("failed writing output file: " + path);
  }
  {
    std::ofstream out(path + ".manifest.json", std::ios::binary);
    if (!out)
      throw FormatError("cannot write manifest file: " + path +
                        ".manifest.json");
    out << manifest_json(manifest);
  }
}

}  // namespace orbitsep
