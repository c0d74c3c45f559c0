#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "horolab/config.hpp"
#include "horolab/report.hpp"

namespace horolab {

using SuiteFn = std::function<SuiteReport(const ExperimentConfig&)>;

struct SuiteInfo {
  std::string name;
  std::string description;
  SuiteFn fn;
};

const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo* find_suite(const std::string& name);

struct RunOutcome {
  std::vector<SuiteReport> reports;
  bool pass = true;
};

// runs cfg.suites in order (possibly with cfg.jobs workers); report assembly
// stays single-threaded and ordered
RunOutcome run_suites(const ExperimentConfig& cfg);

// writes <suite>.report.json, <suite>.checks.csv, <suite>.constants.csv into
// the directory (created when missing)
void write_reports(const RunOutcome& outcome, const std::string& out_dir);

}  // namespace horolab
