#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace fekete {

using ordered_json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Observe };

const char* to_string(Status s) noexcept;

struct Finding {
  std::string check_id;  // e.g. "L3.7-count", "T2.1-certificate"
  Status status = Status::Observe;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Pass when `ok`, Fail otherwise.
Finding check(std::string id, bool ok, double measured, double expected, double tolerance,
              std::string detail = {});
Finding observe(std::string id, double measured, double expected = 0.0, std::string detail = {});

struct CsvTable {
  std::string name;  // file stem, written as <name>.csv
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

/// Shortest round-trip decimal text of a double, so identical values always
/// print identically.
std::string fmt(double x);
std::string fmt(std::uint64_t x);
std::string fmt(std::int64_t x);
std::string fmt(bool b);

struct RunReport {
  std::string command;
  ordered_json params = ordered_json::object();
  std::optional<std::string> started;
  std::optional<std::string> ended;
  std::optional<std::uint64_t> seed;
  std::string generator;  // set whenever randomness is used
  std::vector<Finding> findings;
  ordered_json results = ordered_json::object();
  std::vector<CsvTable> tables;
  std::vector<std::string> numerical_failures;

  void add(Finding f) { findings.push_back(std::move(f)); }
  bool any_fail() const;
  /// 0 all pass, 1 some finding failed, 3 numerical failure.
  int exit_code() const;
  /// Append another report's findings, tables and results under its command.
  void merge(const RunReport& other);
};

ordered_json to_json(const RunReport& r);
std::string to_csv(const CsvTable& t);

/// Writes <dir>/<command>.json and one CSV per table.
void write_report(const RunReport& r, const std::filesystem::path& dir);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace fekete
