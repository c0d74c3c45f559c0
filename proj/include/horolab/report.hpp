#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace horolab {

using ordered_json = nlohmann::ordered_json;

struct MeasuredConstant {
  std::string name;       // kappa, K_star, K_hat, K0, tau, delta, n0, ...
  std::string value;      // exact string form
  std::string operation;  // which operation produced it
};

struct CheckResult {
  std::string name;
  bool pass = false;
  ordered_json details;  // witnesses on failure, measured data on success
  double ms = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  ordered_json params;
  std::vector<CheckResult> checks;
  std::vector<MeasuredConstant> constants;
  double total_ms = 0.0;

  bool pass() const;
  void add(CheckResult c);
  void constant(const std::string& name, const std::string& value, const std::string& operation);

  ordered_json to_json() const;
  std::string checks_csv() const;
  std::string constants_csv() const;
};

// recursively removes every timing field; reports compare byte-identically
// modulo these
ordered_json strip_timing(const ordered_json& j);

// timer helper for check bodies
class Stopwatch {
 public:
  Stopwatch();
  double ms() const;

 private:
  long long start_ns_;
};

// minimal standalone SVG writers, no dependencies
struct SeriesPoint {
  double x, y;
};

void write_line_chart_svg(const std::string& path, const std::string& title,
                          const std::string& xlabel, const std::string& ylabel,
                          const std::vector<SeriesPoint>& points);

void write_histogram_svg(const std::string& path, const std::string& title,
                         const std::string& xlabel, const std::vector<long long>& counts);

}  // namespace horolab
