#include "fekete/report.hpp"

#include <charconv>
#include <cmath>
#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace fekete {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Observe: return "observe";
  }
  return "unknown";
}

Finding check(std::string id, bool ok, double measured, double expected, double tolerance,
              std::string detail) {
  return Finding{std::move(id), ok ? Status::Pass : Status::Fail, measured, expected, tolerance,
                 std::move(detail)};
}

Finding observe(std::string id, double measured, double expected, std::string detail) {
  return Finding{std::move(id), Status::Observe, measured, expected, 0.0, std::move(detail)};
}

std::string fmt(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string fmt(std::uint64_t x) { return std::to_string(x); }
std::string fmt(std::int64_t x) { return std::to_string(x); }
std::string fmt(bool b) { return b ? "true" : "false"; }

bool RunReport::any_fail() const {
  for (const auto& f : findings) {
    if (f.status == Status::Fail) return true;
  }
  return false;
}

int RunReport::exit_code() const {
  if (!numerical_failures.empty()) return 3;
  return any_fail() ? 1 : 0;
}

void RunReport::merge(const RunReport& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  tables.insert(tables.end(), other.tables.begin(), other.tables.end());
  numerical_failures.insert(numerical_failures.end(), other.numerical_failures.begin(),
                            other.numerical_failures.end());
  results[other.command] = other.results;
  params[other.command] = other.params;
}

namespace {

ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return fmt(x);
}

}  // namespace

ordered_json to_json(const RunReport& r) {
  ordered_json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["started"] = r.started ? ordered_json(*r.started) : ordered_json(nullptr);
  j["ended"] = r.ended ? ordered_json(*r.ended) : ordered_json(nullptr);
  if (r.seed) {
    j["seed"] = *r.seed;
    j["generator"] = r.generator;
  }
  std::size_t pass = 0, fail = 0, obs = 0;
  ordered_json findings = ordered_json::array();
  for (const auto& f : r.findings) {
    ordered_json o;
    o["check_id"] = f.check_id;
    o["status"] = to_string(f.status);
    o["measured"] = number(f.measured);
    o["expected"] = number(f.expected);
    o["tolerance"] = number(f.tolerance);
    if (!f.detail.empty()) o["detail"] = f.detail;
    findings.push_back(std::move(o));
    pass += f.status == Status::Pass;
    fail += f.status == Status::Fail;
    obs += f.status == Status::Observe;
  }
  j["findings"] = std::move(findings);
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"observe", obs}};
  j["numerical_failures"] = r.numerical_failures;
  j["results"] = r.results;
  ordered_json tables = ordered_json::array();
  for (const auto& t : r.tables) tables.push_back(t.name + ".csv");
  j["tables"] = std::move(tables);
  return j;
}

std::string to_csv(const CsvTable& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return out;
}

void write_report(const RunReport& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << text;
  };
  write(dir / (r.command + ".json"), to_json(r).dump(2) + "\n");
  for (const auto& t : r.tables) write(dir / (t.name + ".csv"), to_csv(t));
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace fekete
