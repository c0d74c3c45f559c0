// horolab: experiment runner for boundary geometry on finite balls of group
// actions. Subcommands: run, list, validate, export.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "horolab/coned_off.hpp"
#include "horolab/config.hpp"
#include "horolab/errors.hpp"
#include "horolab/graph_io.hpp"
#include "horolab/suites.hpp"

namespace {

using namespace horolab;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_failure, "cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed_override,
            const std::string& out_override, int jobs_override, long long max_vertices_override) {
  ExperimentConfig cfg = ExperimentConfig::load(config_path);
  if (seed_override) cfg.seed = *seed_override;
  if (!out_override.empty()) cfg.out_dir = out_override;
  if (jobs_override > 0) cfg.jobs = jobs_override;
  if (max_vertices_override > 0) cfg.max_vertices = static_cast<std::size_t>(max_vertices_override);
  if (cfg.out_dir.empty()) cfg.out_dir = "reports";
  std::filesystem::create_directories(cfg.out_dir);

  RunOutcome outcome = run_suites(cfg);
  write_reports(outcome, cfg.out_dir);

  for (const auto& r : outcome.reports) {
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.suite << " (" << r.checks.size()
              << " checks)\n";
    for (const auto& c : r.checks) {
      std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << "\n";
      if (!c.pass) std::cout << "       " << c.details.dump() << "\n";
    }
  }
  if (outcome.reports.empty()) std::cout << "no suites requested; empty report\n";
  std::cout << (outcome.pass ? "all checks passed" : "failures present") << "; reports in "
            << cfg.out_dir << "\n";
  return outcome.pass ? 0 : 1;
}

int cmd_list() {
  for (const auto& s : suite_catalog()) {
    std::cout << s.name << "  -  " << s.description << "\n";
  }
  return 0;
}

int cmd_validate(const std::string& config_path) {
  nlohmann::json j = load_json(config_path);
  auto diags = validate_config(j);
  if (diags.empty()) {
    std::cout << "config is valid\n";
    return 0;
  }
  for (const auto& d : diags) {
    std::cout << (d.pointer.empty() ? "<root>" : d.pointer) << ": " << d.message << "\n";
  }
  return 1;
}

int cmd_export(const std::string& config_path, const std::string& format,
               const std::string& out_path, bool coned) {
  ExperimentConfig cfg = ExperimentConfig::load(config_path);
  BallGraph ball = [&]() {
    if (coned) {
      ConedOffGraph g = build_coned_off(cfg.make_word_space(), cfg.radius, cfg.max_vertices);
      return *g.graph;
    }
    auto space = cfg.make_space();
    return BallGraph::build(*space, cfg.radius, cfg.max_vertices);
  }();

  std::ofstream out(out_path);
  if (!out) fail(errc::io_failure, "cannot write " + out_path);
  if (format == "dot") {
    write_dot(ball, out);
  } else if (format == "graphml") {
    write_graphml(ball, out);
  } else if (format == "csv") {
    write_adjacency_csv(ball, out);
  } else {
    fail(errc::config_invalid, "export format must be dot, graphml, or csv");
  }
  std::cout << "wrote " << out_path << " (" << ball.size() << " vertices, " << ball.edge_count()
            << " edges)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-ball laboratory for boundary geometry of group actions"};
  app.require_subcommand(1);

  std::string config_path, out_dir, format = "dot", out_path = "graph.dot";
  std::optional<std::uint64_t> seed;
  int jobs = 0;
  long long max_vertices = 0;
  bool coned = false;

  auto* run = app.add_subcommand("run", "run the suites named in a config");
  run->add_option("--config", config_path, "experiment config (JSON)")->required();
  run->add_option("--seed", seed, "override the config seed");
  run->add_option("--out", out_dir, "output directory for reports");
  run->add_option("--jobs", jobs, "parallel suite workers");
  run->add_option("--max-vertices", max_vertices, "ball size cap");

  auto* list = app.add_subcommand("list", "list available suites");

  auto* validate = app.add_subcommand("validate", "check a config against the schema");
  validate->add_option("--config", config_path, "experiment config (JSON)")->required();

  auto* exp = app.add_subcommand("export", "export the configured ball as dot/graphml/csv");
  exp->add_option("--config", config_path, "experiment config (JSON)")->required();
  exp->add_option("--format", format, "dot | graphml | csv");
  exp->add_option("--out", out_path, "output file");
  exp->add_flag("--coned", coned, "export the coned-off ball instead of the Cayley ball");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, seed, out_dir, jobs, max_vertices);
    if (list->parsed()) return cmd_list();
    if (validate->parsed()) return cmd_validate(config_path);
    if (exp->parsed()) return cmd_export(config_path, format, out_path, coned);
  } catch (const horolab::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
