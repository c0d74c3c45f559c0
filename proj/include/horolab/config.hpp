#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "horolab/space.hpp"
#include "json.hpp"

namespace horolab {

struct Diagnostic {
  std::string pointer;  // JSON pointer to the offending field
  std::string message;
};

// One experiment: which suites to run on which instance, with reproducibility
// knobs. Parsed from JSON; `validate` reports every problem with a field
// pointer instead of failing on the first.
struct ExperimentConfig {
  std::vector<std::string> suites;
  std::string family;          // "free" | "free_product" | "custom"
  std::vector<int> orders;     // free: zero per generator; free_product: factor orders
  std::string letters;
  int radius = 6;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::size_t max_vertices = 2'000'000;
  int jobs = 1;
  nlohmann::json params;  // per-suite knobs, passed through

  // custom family payload
  std::vector<std::string> custom_vertices;
  std::vector<std::pair<std::string, std::string>> custom_edges;
  std::string custom_basepoint;
  std::map<char, std::vector<std::string>> custom_automorphisms;

  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig load(const std::string& path);

  std::shared_ptr<Space> make_space() const;
  std::shared_ptr<WordSpace> make_word_space() const;  // fail unless word family
};

// schema diagnostics; empty means valid
std::vector<Diagnostic> validate_config(const nlohmann::json& j);

}  // namespace horolab
