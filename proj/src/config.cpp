#include "horolab/config.hpp"

#include <fstream>
#include <set>

#include "horolab/errors.hpp"

namespace horolab {

namespace {

const std::set<std::string> kFamilies = {"free", "free_product", "custom"};

}  // namespace

std::vector<Diagnostic> validate_config(const nlohmann::json& j) {
  std::vector<Diagnostic> out;
  auto bad = [&](const std::string& ptr, const std::string& msg) { out.push_back({ptr, msg}); };

  if (!j.is_object()) {
    bad("", "config must be a JSON object");
    return out;
  }

  if (j.contains("suite") && !j["suite"].is_string()) bad("/suite", "must be a string");
  if (j.contains("suites")) {
    if (!j["suites"].is_array())
      bad("/suites", "must be an array of suite names");
    else
      for (std::size_t i = 0; i < j["suites"].size(); ++i)
        if (!j["suites"][i].is_string())
          bad("/suites/" + std::to_string(i), "must be a string");
  }

  if (!j.contains("instance") || !j["instance"].is_object()) {
    bad("/instance", "required object with the group family");
  } else {
    const auto& inst = j["instance"];
    std::string family = inst.value("family", "");
    if (!kFamilies.count(family))
      bad("/instance/family", "must be one of free, free_product, custom");
    if (family == "free") {
      if (!inst.contains("rank") || !inst["rank"].is_number_integer() ||
          inst["rank"].get<int>() < 1)
        bad("/instance/rank", "free family needs an integer rank >= 1");
    }
    if (family == "free_product") {
      if (!inst.contains("orders") || !inst["orders"].is_array() || inst["orders"].size() < 2) {
        bad("/instance/orders", "free_product needs at least two factor orders");
      } else {
        for (std::size_t i = 0; i < inst["orders"].size(); ++i) {
          if (!inst["orders"][i].is_number_integer() || inst["orders"][i].get<int>() < 0 ||
              inst["orders"][i].get<int>() == 1)
            bad("/instance/orders/" + std::to_string(i), "factor order must be 0 or >= 2");
        }
      }
    }
    if (family == "custom") {
      if (!inst.contains("vertices") || !inst["vertices"].is_array())
        bad("/instance/vertices", "custom family needs a vertex list");
      if (!inst.contains("edges") || !inst["edges"].is_array())
        bad("/instance/edges", "custom family needs an edge list");
      if (!inst.contains("basepoint") || !inst["basepoint"].is_string())
        bad("/instance/basepoint", "custom family needs a basepoint");
    }
    if (inst.contains("letters") && !inst["letters"].is_string())
      bad("/instance/letters", "must be a string of generator letters");
  }

  if (j.contains("radius")) {
    if (!j["radius"].is_number_integer() || j["radius"].get<int>() < 0)
      bad("/radius", "must be a nonnegative integer");
  }
  if (j.contains("seed") && !j["seed"].is_number_unsigned())
    bad("/seed", "must be an unsigned integer");
  if (j.contains("max_vertices") &&
      (!j["max_vertices"].is_number_integer() || j["max_vertices"].get<long long>() < 1))
    bad("/max_vertices", "must be a positive integer");
  if (j.contains("jobs") && (!j["jobs"].is_number_integer() || j["jobs"].get<int>() < 1))
    bad("/jobs", "must be a positive integer");
  if (j.contains("out") && !j["out"].is_string()) bad("/out", "must be a path string");
  if (j.contains("params") && !j["params"].is_object()) bad("/params", "must be an object");
  return out;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  auto diags = validate_config(j);
  if (!diags.empty()) {
    std::string msg = "invalid config:";
    for (const auto& d : diags) msg += "\n  " + (d.pointer.empty() ? "<root>" : d.pointer) + ": " + d.message;
    fail(errc::config_invalid, msg);
  }
  ExperimentConfig cfg;
  if (j.contains("suite")) cfg.suites.push_back(j["suite"].get<std::string>());
  if (j.contains("suites"))
    for (const auto& s : j["suites"]) cfg.suites.push_back(s.get<std::string>());

  const auto& inst = j["instance"];
  cfg.family = inst["family"].get<std::string>();
  if (cfg.family == "free") {
    cfg.orders.assign(static_cast<std::size_t>(inst["rank"].get<int>()), 0);
  } else if (cfg.family == "free_product") {
    for (const auto& o : inst["orders"]) cfg.orders.push_back(o.get<int>());
  } else {
    for (const auto& v : inst["vertices"]) cfg.custom_vertices.push_back(v.get<std::string>());
    for (const auto& e : inst["edges"]) {
      cfg.custom_edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    cfg.custom_basepoint = inst["basepoint"].get<std::string>();
    if (inst.contains("automorphisms")) {
      for (const auto& [letter, images] : inst["automorphisms"].items()) {
        std::vector<std::string> imgs;
        for (const auto& im : images) imgs.push_back(im.get<std::string>());
        cfg.custom_automorphisms[letter.at(0)] = std::move(imgs);
      }
    }
  }
  cfg.letters = inst.value("letters", "");
  cfg.radius = j.value("radius", 6);
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  cfg.out_dir = j.value("out", "");
  cfg.max_vertices = j.value("max_vertices", std::size_t{2'000'000});
  cfg.jobs = j.value("jobs", 1);
  cfg.params = j.value("params", nlohmann::json::object());
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_failure, "cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::config_invalid, "config parse error in " + path + ": " + e.what());
  }
  return from_json(j);
}

std::shared_ptr<Space> ExperimentConfig::make_space() const {
  if (family == "custom")
    return std::make_shared<CustomSpace>(custom_vertices, custom_edges, custom_basepoint,
                                         custom_automorphisms);
  return make_word_space();
}

std::shared_ptr<WordSpace> ExperimentConfig::make_word_space() const {
  if (family != "free" && family != "free_product")
    fail(errc::config_invalid, "suite needs a word-family instance, got " + family);
  return std::make_shared<WordSpace>(orders, letters);
}

}  // namespace horolab
