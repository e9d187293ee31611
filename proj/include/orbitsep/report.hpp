#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbitsep {

/// Rectangular witness/data table; every cell is already formatted text.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

/// A suite's machine-readable output: ordered summary pairs plus a table.
/// CSV carries the table (header-only when the table is empty); JSON carries
/// both. Numbers are always preformatted round-trip decimal strings.
struct Report {
  std::vector<std::pair<std::string, std::string>> summary;
  Table table;

  void add_summary(std::string key, std::string value);
};

/// RFC-4180 quoting, '.' decimal separator, no locale dependence.
std::string to_csv(const Report& report);

/// Stable key order (insertion order is preserved).
std::string to_json(const Report& report);

/// Execution record paired with every output file. Timestamps live here and
/// never in the payload, so identical manifests mean byte-identical outputs.
struct RunManifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> flags;
  std::uint64_t seed = 0;
  std::string version;
  std::string started_utc;
  std::string finished_utc;
  std::vector<std::string> outputs;
};

std::string manifest_json(const RunManifest& manifest);

std::string utc_timestamp();

/// Writes the payload to `path` and the manifest alongside it at
/// `path + ".manifest.json"`. Throws FormatError when unwritable.
void emit_report(const Report& report, const std::string& format,
                 const std::string& path, const RunManifest& manifest);

}  // namespace orbitsep
