#include "horolab/suites.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "horolab/coned_off.hpp"
#include "horolab/dynamics.hpp"
#include "horolab/errors.hpp"
#include "horolab/graph_io.hpp"
#include "horolab/projection_complex.hpp"
#include "horolab/rng.hpp"

namespace horolab {

namespace {

CheckResult run_check(const std::string& name, const std::function<bool(ordered_json&)>& body) {
  CheckResult c;
  c.name = name;
  Stopwatch sw;
  try {
    c.pass = body(c.details);
  } catch (const error& e) {
    c.pass = false;
    c.details["error"] = e.what();
  }
  c.ms = sw.ms();
  if (c.details.is_null()) c.details = ordered_json::object();
  return c;
}

std::uint64_t require_seed(const ExperimentConfig& cfg) {
  if (!cfg.seed)
    fail(errc::config_invalid, "this suite samples; the config must set a seed");
  return *cfg.seed;
}

SuiteReport base_report(const ExperimentConfig& cfg, const std::string& name) {
  SuiteReport r;
  r.suite = name;
  r.seed = cfg.seed.value_or(0);
  r.params = ordered_json::parse(cfg.params.dump());
  return r;
}

// reduced words over the free-group alphabet, seeded, fixed length
std::string random_reduced_word(const WordSpace& W, Rng& rng, int len) {
  const std::string& letters = W.letters();
  std::string out;
  while (static_cast<int>(out.size()) < len) {
    char c = letters[rng.below(letters.size())];
    if (rng.below(2)) c = words::invert_letter(c);
    if (!out.empty() && out.back() == words::invert_letter(c)) continue;
    out.push_back(c);
  }
  return out;
}

std::shared_ptr<const BallGraph> shared_ball(const Space& X, int radius, std::size_t cap) {
  return std::make_shared<const BallGraph>(BallGraph::build(X, radius, cap));
}

// ---------------------------------------------------------------------------

SuiteReport suite_tree_smoke(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "tree-smoke");
  std::uint64_t seed = require_seed(cfg);
  auto W = cfg.make_word_space();
  if (!W->is_tree()) fail(errc::config_invalid, "tree-smoke needs a free (tree) instance");

  rep.add(run_check("metric-axioms-exhaustive", [&](ordered_json& d) {
    BallGraph g = BallGraph::build(*W, 3, cfg.max_vertices);
    for (int u = 0; u < g.size(); ++u)
      for (int v = 0; v < g.size(); ++v) {
        if ((g.distance(u, v) == 0) != (u == v)) return false;
        if (g.distance(u, v) != g.distance(v, u)) return false;
        for (int w = 0; w < g.size(); ++w)
          if (g.distance(u, w) > g.distance(u, v) + g.distance(v, w)) return false;
      }
    d["vertices"] = g.size();
    return true;
  }));

  rep.add(run_check("ball-matches-ambient-metric", [&](ordered_json& d) {
    BallGraph g = BallGraph::build(*W, 3, cfg.max_vertices);
    for (int u = 0; u < g.size(); ++u)
      for (int v = u; v < g.size(); ++v)
        if (g.distance(u, v) != W->distance(g.name(u), g.name(v))) {
          d["witness"] = g.name(u) + " vs " + g.name(v);
          return false;
        }
    return true;
  }));

  rep.add(run_check("gromov-product-vs-geodesic-distance", [&](ordered_json& d) {
    BallGraph g = BallGraph::build(*W, 4, cfg.max_vertices);
    Rng rng(seed);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
      int x = static_cast<int>(rng.below(g.size()));
      int y = static_cast<int>(rng.below(g.size()));
      int z = static_cast<int>(rng.below(g.size()));
      HalfInt p = g.gromov(x, y, z);
      if (p < 0 || p > std::min(g.distance(x, z), g.distance(y, z))) return false;
      // in a tree the product equals the distance from z to [x, y]
      int best = 1 << 20;
      for (int w = 0; w < g.size(); ++w) {
        if (g.distance(x, w) + g.distance(w, y) != g.distance(x, y)) continue;
        best = std::min(best, g.distance(z, w));
      }
      if (p != HalfInt::whole(best)) return false;
      ++checked;
    }
    d["triples"] = checked;
    return true;
  }));

  rep.add(run_check("four-point-delta-of-tree-vanishes", [&](ordered_json& d) {
    BallGraph g = BallGraph::build(*W, 3, cfg.max_vertices);
    HalfInt delta = g.estimate_delta(SamplingPolicy::all());
    d["delta"] = delta.str();
    return delta == HalfInt::whole(0);
  }));

  rep.add(run_check("patch-axioms", [&](ordered_json& d) {
    auto ball = shared_ball(*W, std::min(cfg.radius, 6), cfg.max_vertices);
    int built = 0;
    for (int v = 0; v < ball->size(); ++v) {
      HorofunctionPatch::of_point(ball, *W, ball->name(v));
      ++built;
    }
    for (const std::string& t : {"a^n", "b^n", "(ab)^n", "(ba)^n", "a^-n", "(ab)^n a"}) {
      limit_along_sequence(ball, *W, word_sequence(*W, t), ball->radius() + 6);
      ++built;
    }
    d["patches"] = built;
    return true;
  }));

  rep.add(run_check("equivariance-sampled", [&](ordered_json& d) {
    auto ball = shared_ball(*W, 5, cfg.max_vertices);
    Rng rng(seed ^ 0x9e37);
    int checked = 0;
    SequenceSpec ray = word_sequence(*W, "a^n");
    LimitPatch base = limit_along_sequence(ball, *W, ray, 12);
    for (int i = 0; i < 200; ++i) {
      std::string gw = random_reduced_word(*W, rng, 1 + static_cast<int>(rng.below(2)));
      Isometry g = W->iso(gw);
      LimitPatch moved = limit_along_sequence(ball, *W, translated_sequence(*W, ray, g), 12);
      int y = static_cast<int>(rng.below(ball->size()));
      std::string gi_y = W->apply(W->inverse(g), ball->name(y));
      std::string gi_o = W->apply(W->inverse(g), W->basepoint());
      if (!ball->has(gi_y) || !ball->has(gi_o)) continue;
      int lhs = moved.patch.value(y);
      int rhs = base.patch.value_at(gi_y) - base.patch.value_at(gi_o);
      if (lhs != rhs) {
        d["witness"] = gw + " at " + ball->name(y);
        return false;
      }
      ++checked;
    }
    d["triples"] = checked;
    return checked > 100;
  }));

  rep.add(run_check("busemann-stabilization-bound", [&](ordered_json& d) {
    auto ball = shared_ball(*W, 6, cfg.max_vertices);
    LimitPatch lp = limit_along_sequence(ball, *W, word_sequence(*W, "a^n"), 12);
    for (int v = 0; v < ball->size(); ++v) {
      if (lp.cert.stabilization_index[static_cast<std::size_t>(v)] > ball->base_norm(v) + 1)
        return false;
    }
    d["max_index"] = lp.cert.max_index;
    return true;
  }));

  return rep;
}

SuiteReport suite_horoboundary(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "horoboundary");
  auto W = cfg.make_word_space();
  int R = std::min(cfg.radius, 8);
  auto ball = shared_ball(*W, R, cfg.max_vertices);

  rep.add(run_check("point-horofunction-values", [&](ordered_json&) {
    HorofunctionPatch ba = HorofunctionPatch::of_point(ball, *W, "a");
    HorofunctionPatch ba3 = HorofunctionPatch::of_point(ball, *W, "aaa");
    return ba.value_at("") == 0 && ba.value_at("a") == -1 && ba3.value_at("b") == 1;
  }));

  rep.add(run_check("finite-difference-examples", [&](ordered_json& d) {
    HorofunctionPatch pa = HorofunctionPatch::of_point(ball, *W, "a");
    HorofunctionPatch pa2 = HorofunctionPatch::of_point(ball, *W, "aa");
    if (finite_difference(pa, pa).lower_bound != 0) return false;
    if (finite_difference(pa, pa2).lower_bound != 2) return false;
    LimitPatch ra = limit_along_sequence(ball, *W, word_sequence(*W, "a^n"), R + 6);
    LimitPatch rb = limit_along_sequence(ball, *W, word_sequence(*W, "b^n"), R + 6);
    FiniteDifferenceBound fd = finite_difference(ra.patch, rb.patch);
    d["busemann_fd"] = fd.lower_bound;
    return fd.lower_bound == 2 * R;
  }));

  rep.add(run_check("local-minimum-map", [&](ordered_json& d) {
    int margin = 2;
    int interior = 0;
    for (int v = 0; v < ball->size(); ++v) {
      if (ball->base_norm(v) > ball->radius() - margin) continue;
      MinimumReport mr = local_minimum_map(HorofunctionPatch::of_point(ball, *W, ball->name(v)), margin);
      if (mr.kind != MinimumReport::finite_minimum || mr.min_set != std::vector<std::string>{ball->name(v)})
        return false;
      ++interior;
    }
    LimitPatch ra = limit_along_sequence(ball, *W, word_sequence(*W, "a^n"), R + 6);
    MinimumReport mr = local_minimum_map(ra.patch, 2);
    d["interior_points"] = interior;
    d["busemann_kind"] = "infinite_descent";
    return mr.kind == MinimumReport::infinite_descent;
  }));

  rep.add(run_check("minimal-class-probe", [&](ordered_json& d) {
    auto guard = shared_ball(*W, 10, cfg.max_vertices);
    auto patch = shared_ball(*W, 2, cfg.max_vertices);
    MinimalClassOptions opts;
    opts.z_radius = 2;
    MinimalClassReport same =
        minimal_class_probe(*W, *guard, patch, word_sequence(*W, "a^n"),
                            word_sequence(*W, "a^2n"), 5, opts);
    MinimalClassReport diff =
        minimal_class_probe(*W, *guard, patch, word_sequence(*W, "a^n"),
                            word_sequence(*W, "b^n"), 5, opts);
    d["counterexample"] = diff.counterexample_z.empty() ? "<e>" : diff.counterexample_z;
    return same.hypothesis_holds && same.patches_equal && !diff.hypothesis_holds;
  }));

  rep.add(run_check("dead-ends-of-truncated-ball", [&](ordered_json& d) {
    // export the radius-2 ball and re-import it as a finite custom graph
    BallGraph small = BallGraph::build(*W, 2, cfg.max_vertices);
    std::stringstream csv;
    write_adjacency_csv(small, csv);
    BallGraph imported = read_adjacency_csv(csv, "<e>");
    int leaves = 0;
    for (int v = 0; v < imported.size(); ++v) {
      if (imported.base_norm(v) != imported.radius()) continue;
      DeadEndReport de = is_dead_end(imported, imported.basepoint(), v);
      if (!de.dead_end || !de.isolated) return false;
      ++leaves;
    }
    d["leaves"] = leaves;
    return leaves > 0;
  }));

  return rep;
}

SuiteReport suite_projection_axioms(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "projection-axioms");
  auto W = cfg.make_word_space();
  if (!W->is_free()) fail(errc::config_invalid, "projection-axioms runs on a free instance");

  std::vector<Isometry> translates;
  for (const std::string& t : {"", "b", "bb", "bbb", "ab", "Ab"}) translates.push_back(W->iso(t));
  AxisFamily fam = build_axis_family(*W, {W->iso("a")}, translates, 4);

  rep.constant("kappa", std::to_string(fam.kappa()), "build_axis_family");

  rep.add(run_check("kappa-vanishes-for-tree-family", [&](ordered_json& d) {
    d["kappa"] = fam.kappa();
    d["members"] = fam.size();
    return fam.kappa() == 0 && fam.size() == 6;
  }));

  rep.add(run_check("projection-axioms-exhaustive", [&](ordered_json& d) {
    AxiomReport ar = verify_projection_axioms(fam);
    d["axiom3_max_count"] = ar.axiom3_max_count;
    for (const auto& w : ar.witnesses) d["witnesses"].push_back(w.axiom + ": " + w.detail);
    return ar.pass();
  }));

  rep.add(run_check("triangle-inequality-for-dU", [&](ordered_json&) {
    for (int u = 0; u < fam.size(); ++u)
      for (int v = 0; v < fam.size(); ++v)
        for (int w = 0; w < fam.size(); ++w)
          for (int z = 0; z < fam.size(); ++z) {
            if (u == v || u == w || u == z || v == w || v == z || w == z) continue;
            if (fam.d(u, v, w) > fam.d(u, v, z) + fam.d(u, z, w)) return false;
          }
    return true;
  }));

  rep.add(run_check("interval-monotone-in-K", [&](ordered_json&) {
    for (int v = 0; v < fam.size(); ++v)
      for (int w = v + 1; w < fam.size(); ++w)
        for (int K = 0; K < 3; ++K) {
          auto big = interval_set(fam, v, w, K);
          auto small = interval_set(fam, v, w, K + 1);
          for (int m : small)
            if (std::find(big.begin(), big.end(), m) == big.end()) return false;
        }
    return true;
  }));

  rep.add(run_check("connectivity-sweep", [&](ordered_json& d) {
    ConnectivitySweep sw = connectivity_sweep(fam, 4);
    d["least_connected_K"] = sw.least_connected_K;
    rep.constant("K_connected", std::to_string(sw.least_connected_K), "connectivity_sweep");
    return sw.least_connected_K >= 0;
  }));

  return rep;
}

SuiteReport suite_forcing(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "forcing-chain");
  auto W = cfg.make_word_space();
  if (!W->is_free()) fail(errc::config_invalid, "forcing-chain runs on a free instance");

  std::vector<Isometry> translates;
  for (int j = 0; j <= 7; ++j) translates.push_back(W->power(W->iso("ba"), j));
  AxisFamily fam = build_axis_family(*W, {W->iso("a")}, translates, 4);
  ProjectionComplexGraph pc = build_complex(fam, 0);

  rep.add(run_check("chain-complex-is-a-path", [&](ordered_json& d) {
    if (!pc.connected) return false;
    for (int i = 0; i < fam.size(); ++i)
      for (int j = 0; j < fam.size(); ++j)
        if (pc.distance(i, j) != std::abs(i - j)) return false;
    d["members"] = fam.size();
    return true;
  }));

  rep.add(run_check("forcing-guards", [&](ordered_json& d) {
    ForcingReport fr = verify_forcing(pc, fam, 1);
    d["least_passing_khat"] = fr.least_passing_khat;
    rep.constant("K_hat", std::to_string(fr.least_passing_khat), "verify_forcing");
    return fr.pass;
  }));

  rep.add(run_check("bgit-bound", [&](ordered_json& d) {
    std::vector<int> path{0, 1, 2, 3};
    BgitReport br = verify_bgit(pc, fam, path, 7);
    d["max_dV"] = br.max_dV;
    rep.constant("K0", std::to_string(br.max_dV), "verify_bgit");
    return true;
  }));

  rep.add(run_check("minimal-loxodromic-chain", [&](ordered_json& d) {
    MinimalLoxOptions opts;
    opts.competitor_translates = {W->iso("bb")};
    int least_n = -1;
    for (int n = 1; n <= 3; ++n) {
      try {
        MinimalLoxReport mr = minimal_loxodromic_construct(*W, W->iso("b"), W->iso("a"), n, opts);
        if (mr.chain_geodesic && mr.singleton_certified) {
          least_n = n;
          d["measured_D0"] = mr.measured_D0;
          break;
        }
      } catch (const error& e) {
        if (e.code() != errc::verification_failure) throw;
      }
    }
    d["least_passing_n"] = least_n;
    rep.constant("least_minimal_n", std::to_string(least_n), "minimal_loxodromic_construct");
    return least_n >= 1;
  }));

  return rep;
}

SuiteReport suite_bcp(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "bcp");
  auto W = cfg.make_word_space();
  if (W->is_free()) fail(errc::config_invalid, "bcp needs a free product with finite factors");
  int radius = cfg.radius;
  ConedOffGraph g = build_coned_off(W, radius, cfg.max_vertices);
  int K = cfg.params.value("K", 3);

  rep.add(run_check("coset-projection-example", [&](ordered_json& d) {
    char s = W->letters()[0], t = W->letters()[1];
    auto pr = coset_projection(g, std::string(1, s), g.space->cone_name("", t));
    d["entry_set"] = pr.entry_set;
    return pr.entry_set == std::vector<std::string>{""};
  }));

  rep.add(run_check("bcp-exhaustive", [&](ordered_json& d) {
    BcpReport br = verify_bcp(g, K, radius);
    d["least_K"] = br.least_K;
    d["pairs_checked"] = br.pairs_checked;
    for (const auto& v : br.violations)
      d["violations"].push_back(v.x + "," + v.y + " at " + v.cone);
    rep.constant("K_star", std::to_string(br.least_K), "verify_bcp");
    return br.pass;
  }));

  rep.add(run_check("coned-delta", [&](ordered_json& d) {
    ConedOffGraph small = build_coned_off(W, std::min(radius, 4), cfg.max_vertices);
    SamplingPolicy pol = SamplingPolicy::all();
    pol.exhaustive_vertex_limit = 400;
    HalfInt delta = small.graph->estimate_delta(pol);
    d["delta"] = delta.str();
    rep.constant("delta", delta.str(), "estimate_delta");
    return delta > 0;
  }));

  return rep;
}

SuiteReport suite_coned_minimum(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "coned-minimum");
  auto W = cfg.make_word_space();
  bool has_infinite = false;
  for (int m : W->orders()) has_infinite |= m == 0;
  if (!has_infinite || W->is_free())
    fail(errc::config_invalid, "coned-minimum needs a free product with an infinite factor");
  ConedOffGraph g = build_coned_off(W, cfg.radius, cfg.max_vertices);
  char a = W->letters()[0], s = W->letters()[1];

  rep.add(run_check("unique-cone-minimum", [&](ordered_json& d) {
    std::vector<SequenceSpec> seqs;
    seqs.push_back(word_sequence(*g.space, std::string(1, a) + "^n"));
    seqs.push_back(word_sequence(*g.space, std::string(1, s) + " " + a + "^n"));
    UniqueMinimumReport ur = unique_minimum_scan(g, seqs, cfg.radius + 8, 2);
    for (const auto& e : ur.entries) d["entries"].push_back(e.descriptor + ": " + e.kind);
    return ur.all_pass;
  }));

  rep.add(run_check("peripheral-limit-is-cone-point", [&](ordered_json&) {
    LimitPatch lp = limit_along_sequence(g.graph, *g.space,
                                         word_sequence(*g.space, std::string(1, a) + "^n"),
                                         cfg.radius + 8);
    HorofunctionPatch cone = HorofunctionPatch::of_point(g.graph, *g.space,
                                                         g.space->cone_name("", a));
    return finite_difference(lp.patch, cone).lower_bound == 0;
  }));

  rep.add(run_check("cone-accumulation", [&](ordered_json& d) {
    std::string mixed = std::string(1, a) + " " + s + " " + a + "^n";
    ConeAccumulationReport cr =
        cone_accumulation(g, g.space->cone_name("", a), W->iso(std::string(1, a)), Isometry(),
                          word_sequence(*g.space, mixed), {1, 2, 3, 4}, cfg.radius + 10);
    for (int agr : cr.agreement) d["agreement"].push_back(agr);
    return cr.pass;
  }));

  rep.add(run_check("bounded-conjugator-rejected", [&](ordered_json&) {
    try {
      cone_accumulation(g, g.space->cone_name("", a), W->iso(std::string(1, s)), Isometry(),
                        word_sequence(*g.space, std::string(1, a) + " " + s + " " + a + "^n"),
                        {1, 2}, cfg.radius + 8);
      return false;
    } catch (const error& e) {
      return e.code() == errc::bounded_conjugator;
    }
  }));

  return rep;
}

SuiteReport suite_north_south(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "north-south");
  std::uint64_t seed = require_seed(cfg);
  auto W = cfg.make_word_space();
  if (!W->is_free()) fail(errc::config_invalid, "north-south runs on a free instance");
  Isometry g = W->iso(cfg.params.value("element", "ab"));
  int T = cfg.params.value("T", 3);
  int want = cfg.params.value("rays", 50);

  // Seeded rays avoiding the repeller neighborhood: a random reduced word of
  // length 8 extended by powers of its own last letter, so every ray escapes
  // in a fixed direction.
  Rng rng(seed);
  std::string o = W->basepoint();
  std::string rep_minus = W->apply(W->power(g, -12), o);
  std::vector<std::string> templates;
  std::vector<Ray> accepted;
  std::set<std::string> used;
  std::size_t attempts = 0;
  while (static_cast<int>(templates.size()) < want && ++attempts < 4000) {
    std::string w = random_reduced_word(*W, rng, 8);
    if (!used.insert(w).second) continue;
    std::string tmpl = w + " " + std::string(1, w.back()) + "^n";
    Ray r = make_ray(*W, tmpl, 6);
    if (gromov_product(*W, r.rep(), rep_minus, o) >= HalfInt::whole(T)) continue;
    bool sep = true;
    for (const auto& acc : accepted) {
      if (gromov_product(*W, acc.rep(), r.rep(), o) >= HalfInt::whole(T)) {
        sep = false;
        break;
      }
    }
    if (!sep) continue;
    templates.push_back(tmpl);
    accepted.push_back(std::move(r));
  }

  rep.add(run_check("north-south-n0", [&](ordered_json& d) {
    BoundarySample sample = make_sample(*W, templates, 6, HalfInt::whole(T));
    NorthSouthReport nr = north_south_probe(*W, g, sample, 10);
    d["n0"] = nr.n0;
    d["rays"] = static_cast<int>(sample.rays.size());
    rep.constant("n0", std::to_string(nr.n0), "north_south_probe");
    return static_cast<int>(sample.rays.size()) >= want && nr.pass && nr.n0 <= 6;
  }));

  rep.add(run_check("n0-monotone-in-T", [&](ordered_json& d) {
    std::vector<SeriesPoint> curve;
    for (int t = 1; t <= 5; ++t) {
      // greedy sub-sample that is pairwise separated at resolution t
      std::vector<std::string> ok;
      std::vector<const Ray*> reps;
      for (std::size_t i = 0; i < accepted.size(); ++i) {
        if (gromov_product(*W, accepted[i].rep(), rep_minus, o) >= HalfInt::whole(t)) continue;
        bool sep = true;
        for (const Ray* r : reps)
          if (gromov_product(*W, r->rep(), accepted[i].rep(), o) >= HalfInt::whole(t)) sep = false;
        if (sep) {
          ok.push_back(templates[i]);
          reps.push_back(&accepted[i]);
        }
      }
      if (ok.size() < 3) continue;
      BoundarySample sample = make_sample(*W, ok, 6, HalfInt::whole(t));
      NorthSouthReport nr = north_south_probe(*W, g, sample, 12);
      if (!nr.pass) return false;
      curve.push_back({static_cast<double>(t), static_cast<double>(nr.n0)});
      d["n0_at_T" + std::to_string(t)] = nr.n0;
    }
    if (!cfg.out_dir.empty())
      write_line_chart_svg(cfg.out_dir + "/north_south_n0_vs_T.svg", "least n0 against resolution",
                           "T", "n0", curve);
    return !curve.empty();
  }));

  return rep;
}

SuiteReport suite_proximality(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "proximality");
  auto W = cfg.make_word_space();
  if (!W->is_free()) fail(errc::config_invalid, "proximality runs on a free instance");
  ProximalitySearch search;
  search.base_loxodromics = {W->iso("a"), W->iso("b"), W->iso("ab")};

  rep.add(run_check("extreme-proximality", [&](ordered_json& d) {
    BoundarySample F = make_sample(*W, {"b^n", "(bab)^n"}, 6, HalfInt::whole(3));
    Ray target = make_ray(*W, "a^n", 8);
    ProximalityResult pr = extreme_proximality_probe(*W, F, target, HalfInt::whole(3), search);
    d["g"] = pr.g.word();
    d["power"] = pr.power;
    return !pr.g.is_identity() && pr.power <= 6;
  }));

  rep.add(run_check("already-inside-gives-identity", [&](ordered_json&) {
    BoundarySample F = make_sample(*W, {"(ab)^n"}, 6, HalfInt::whole(2));
    Ray target = make_ray(*W, "(ab)^n", 8);
    ProximalityResult pr = extreme_proximality_probe(*W, F, target, HalfInt::whole(2), search);
    return pr.g.is_identity();
  }));

  rep.add(run_check("fixed-pair-density", [&](ordered_json& d) {
    Ray plus = make_ray(*W, "a^n", 10);
    Ray minus = make_ray(*W, "b^n", 10);
    FixedPairResult fr = fixed_pair_density_probe(*W, plus, minus, HalfInt::whole(3), search);
    d["g"] = fr.g.word();
    d["n"] = fr.n;
    return fr.n <= 4 || fr.n == 0;
  }));

  rep.add(run_check("existing-pair-shortcut", [&](ordered_json&) {
    Ray plus = make_ray(*W, "(ab)^n", 10);
    Ray minus = make_ray(*W, "(ab)^-n", 10);
    FixedPairResult fr = fixed_pair_density_probe(*W, plus, minus, HalfInt::whole(3), search);
    return fr.n == 0 && fr.g == W->iso("ab");
  }));

  return rep;
}

SuiteReport suite_free_semigroup(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "free-semigroup");
  auto W = cfg.make_word_space();
  int L = cfg.params.value("length", 8);

  rep.add(run_check("semigroup-certificate", [&](ordered_json& d) {
    FreeSemigroupCertificate cert =
        free_semigroup_certificate(*W, {W->iso("a"), W->iso("A")}, L);
    d["f"] = cert.f.word();
    d["tau"] = cert.tau;
    d["products"] = cert.products_checked;
    rep.constant("tau", std::to_string(cert.tau), "free_semigroup_certificate");
    return cert.relation_witness.empty();
  }));

  rep.add(run_check("singleton-generator", [&](ordered_json& d) {
    FreeSemigroupCertificate cert = free_semigroup_certificate(*W, {W->iso("a")}, L);
    d["f"] = cert.f.word();
    return cert.relation_witness.empty();
  }));

  rep.add(run_check("pnai-basis-pair", [&](ordered_json& d) {
    PnaiCertificate pc = pnai_certificate(*W, W->iso("a"), W->iso("b"), L);
    d["words"] = pc.words_checked;
    return pc.words_checked > 0;
  }));

  rep.add(run_check("pnai-detects-relation", [&](ordered_json&) {
    try {
      pnai_certificate(*W, W->iso("a"), W->iso("a"), 4);
      return false;
    } catch (const error& e) {
      return e.code() == errc::relation_found;
    }
  }));

  return rep;
}

SuiteReport suite_towers(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "towers");
  auto W = cfg.make_word_space();
  if (!W->is_free()) fail(errc::config_invalid, "towers runs on a free instance");
  int radius = cfg.params.value("check_radius", std::min(cfg.radius, 6));

  rep.add(run_check("paradoxical-towers", [&](ordered_json& d) {
    std::vector<Isometry> D{W->iso("a"), W->iso("b"), W->iso("A"), W->iso("B")};
    std::vector<Isometry> F{W->iso("a"), W->iso("bab^-1"), W->iso("b^2ab^-2")};
    TowerCertificate cert = paradoxical_towers(*W, D, F, radius);
    d["f0"] = cert.f0;
    d["elements"] = cert.elements_checked;
    for (auto cs : cert.class_sizes) d["class_sizes"].push_back(cs);
    return cert.disjoint && cert.covering;
  }));

  rep.add(run_check("identity-in-D-rejected", [&](ordered_json&) {
    try {
      paradoxical_towers(*W, {W->iso("a"), Isometry()},
                         {W->iso("a"), W->iso("bab^-1"), W->iso("b^2ab^-2")}, 2);
      return false;
    } catch (const error& e) {
      return e.code() == errc::precondition;
    }
  }));

  return rep;
}

SuiteReport suite_myrberg(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "myrberg");
  auto W = cfg.make_word_space();
  if (!W->is_free()) fail(errc::config_invalid, "myrberg runs on a free instance");
  std::vector<Isometry> F{W->iso("a"), W->iso("bab^-1"), W->iso("b^2ab^-2")};
  std::vector<Isometry> L{W->iso("ab")};

  rep.add(run_check("fellow-travel-segments-grow", [&](ordered_json& d) {
    MyrbergRay ray = myrberg_ray(*W, {1, 2, 3}, L, F);
    for (const auto& s : ray.segments) d["diameters"].push_back(s.diameter);
    return ray.segments.size() == 3 && ray.strictly_increasing;
  }));

  rep.add(run_check("injectivity-probe", [&](ordered_json& d) {
    MyrbergRay ray = myrberg_ray(*W, {1, 2}, L, F);
    auto ball = shared_ball(*W, std::min(cfg.radius + 4, 10), cfg.max_vertices);
    std::vector<SequenceSpec> competitors;
    // a competitor crawling along the same prefix and one drifting away
    competitors.push_back(list_sequence("same-direction", ray.path));
    competitors.push_back(word_sequence(*W, "B^n"));
    MyrbergInjectivityReport mr = myrberg_injectivity_probe(
        *W, ball, ray.path, competitors, static_cast<int>(ray.path.size()), HalfInt::whole(3));
    d["agreeing"] = mr.competitors_agreeing;
    d["rejected"] = mr.competitors_rejected;
    return mr.singleton_certified && mr.competitors_rejected == 1;
  }));

  return rep;
}

SuiteReport suite_acylindricity(const ExperimentConfig& cfg) {
  SuiteReport rep = base_report(cfg, "acylindricity");
  std::uint64_t seed = require_seed(cfg);
  auto W = cfg.make_word_space();
  if (!W->is_free()) fail(errc::config_invalid, "acylindricity runs on a free instance");

  rep.add(run_check("rigid-at-r0", [&](ordered_json&) {
    AcylindricityOptions opts;
    opts.pairs = {{"", "aaaaaaa"}};
    AcylindricityReport ar = acylindricity_probe(*W, 0, 6, 4, opts);
    return ar.max_count == 1;
  }));

  rep.add(run_check("aligned-pair-count", [&](ordered_json& d) {
    AcylindricityOptions opts;
    opts.pairs = {{"", "aaaaaaa"}};
    AcylindricityReport ar = acylindricity_probe(*W, 2, 6, 8, opts);
    d["count"] = ar.max_count;
    return ar.max_count == 5;
  }));

  rep.add(run_check("sampled-bound", [&](ordered_json& d) {
    AcylindricityOptions opts;
    opts.seed = seed;
    opts.sampled_pairs = 24;
    AcylindricityReport ar = acylindricity_probe(*W, 2, 6, 6, opts);
    d["N"] = ar.max_count;
    rep.constant("N_star", std::to_string(ar.max_count), "acylindricity_probe");
    return ar.max_count >= 1;
  }));

  rep.add(run_check("kernel-trivial", [&](ordered_json& d) {
    auto ker = kernel_sample(*W, {"a^n", "b^n", "(ab)^n"}, 4);
    d["kernel_size"] = static_cast<int>(ker.size());
    return ker.size() == 1 && ker.front().is_identity();
  }));

  rep.add(run_check("tamedness", [&](ordered_json& d) {
    TamednessReport tr = tamedness_probe(*W, W->iso("a"), W->iso("bab^-1"), 2, 24, HalfInt::whole(3));
    d["pairs"] = tr.pairs;
    d["equal"] = tr.equal;
    d["disjoint"] = tr.disjoint;
    return tr.pass && tr.pairs > 0;
  }));

  rep.add(run_check("strongly-faithful", [&](ordered_json& d) {
    BoundarySample sample = make_sample(*W, {"b^n", "(ba)^n", "(bA)^n"}, 10, HalfInt::whole(2));
    FaithfulResult fr =
        strongly_faithful_probe(*W, {W->iso("a"), W->iso("b"), W->iso("ab")}, sample);
    d["ray"] = fr.ray.descriptor;
    return !fr.differences.empty();
  }));

  return rep;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = {
      {"tree-smoke", "graph-core and horoboundary invariants on a free group", suite_tree_smoke},
      {"horoboundary", "point and limit horofunctions, minima, dead ends", suite_horoboundary},
      {"projection-axioms", "translated axis family, axioms, K sweep", suite_projection_axioms},
      {"forcing-chain", "interval forcing, BGIT bound, minimal loxodromics", suite_forcing},
      {"bcp", "coned-off coset projections and bounded coset penetration", suite_bcp},
      {"coned-minimum", "unique cone minima and cone-point accumulation", suite_coned_minimum},
      {"north-south", "north-south dynamics over a seeded boundary sample", suite_north_south},
      {"proximality", "extreme proximality and fixed-pair density searches", suite_proximality},
      {"free-semigroup", "free semigroup and P_nai certificates", suite_free_semigroup},
      {"towers", "paradoxical tower certificate on a ball", suite_towers},
      {"myrberg", "myrberg rays and injectivity of the minimum map", suite_myrberg},
      {"acylindricity", "acylindricity, kernel, tamedness, faithfulness probes", suite_acylindricity},
  };
  return catalog;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suite_catalog())
    if (s.name == name) return &s;
  return nullptr;
}

RunOutcome run_suites(const ExperimentConfig& cfg) {
  RunOutcome out;
  std::vector<const SuiteInfo*> infos;
  for (const auto& name : cfg.suites) {
    const SuiteInfo* info = find_suite(name);
    if (!info) fail(errc::config_invalid, "unknown suite \"" + name + "\"");
    infos.push_back(info);
  }

  if (cfg.jobs <= 1 || infos.size() <= 1) {
    for (const auto* info : infos) {
      Stopwatch sw;
      SuiteReport r = info->fn(cfg);
      r.total_ms = sw.ms();
      out.pass = out.pass && r.pass();
      out.reports.push_back(std::move(r));
    }
    return out;
  }

  std::vector<std::future<SuiteReport>> futures;
  for (const auto* info : infos) {
    futures.push_back(std::async(std::launch::async, [info, &cfg]() {
      Stopwatch sw;
      SuiteReport r = info->fn(cfg);
      r.total_ms = sw.ms();
      return r;
    }));
  }
  for (auto& f : futures) {
    SuiteReport r = f.get();
    out.pass = out.pass && r.pass();
    out.reports.push_back(std::move(r));
  }
  return out;
}

void write_reports(const RunOutcome& outcome, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  for (const auto& r : outcome.reports) {
    {
      std::ofstream f(out_dir + "/" + r.suite + ".report.json");
      if (!f) fail(errc::io_failure, "cannot write report for " + r.suite);
      f << r.to_json().dump(2) << "\n";
    }
    {
      std::ofstream f(out_dir + "/" + r.suite + ".checks.csv");
      f << r.checks_csv();
    }
    {
      std::ofstream f(out_dir + "/" + r.suite + ".constants.csv");
      f << r.constants_csv();
    }
  }
}

}  // namespace horolab
