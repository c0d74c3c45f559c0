#include "horolab/actions.hpp"

#include <algorithm>
#include <set>

#include "horolab/errors.hpp"
#include "horolab/rng.hpp"

namespace horolab {

const char* iso_type_name(IsoType t) {
  switch (t) {
    case IsoType::loxodromic: return "loxodromic";
    case IsoType::elliptic: return "elliptic";
    case IsoType::undetermined: return "undetermined";
  }
  return "?";
}

Rational stable_translation_length(const Space& X, const Isometry& g, int N) {
  if (N <= 0) fail(errc::precondition, "stable length needs N >= 1");
  return Rational(X.distance(X.basepoint(), X.orbit_point(g, N)), N);
}

Rational stable_translation_length(const Space& X, const BallGraph& within, const Isometry& g,
                                   int N) {
  if (N <= 0) fail(errc::precondition, "stable length needs N >= 1");
  Isometry p;
  for (int k = 1; k <= N; ++k) {
    p = X.compose(p, g);
    std::string v = X.apply(p, X.basepoint());
    if (!within.has(v))
      fail(errc::out_of_ball, "orbit point " + v + " leaves the radius-" +
                                  std::to_string(within.radius()) + " ball at power " +
                                  std::to_string(k));
  }
  return stable_translation_length(X, g, N);
}

Classification classify_isometry(const Space& X, const Isometry& g, int N, Rational threshold) {
  Classification out;
  out.horizon = N;
  if (g.is_identity()) {
    out.type = IsoType::elliptic;
    out.order = 1;
    return out;
  }
  std::string o = X.basepoint();
  std::set<std::string> orbit{o};
  Isometry p;
  for (int k = 1; k <= N; ++k) {
    p = X.compose(p, g);
    if (p.is_identity()) {
      out.type = IsoType::elliptic;
      out.order = k;
      return out;
    }
    std::string v = X.apply(p, o);
    if (!orbit.insert(v).second) {
      // the o-orbit of <g> cycles, so it is bounded
      out.type = IsoType::elliptic;
      return out;
    }
  }
  out.stable_length = stable_translation_length(X, g, N);
  out.type = out.stable_length >= threshold ? IsoType::loxodromic : IsoType::undetermined;
  return out;
}

namespace {

// least q >= 2 such that the path is a (q/2)-quasi-geodesic on all tested
// index pairs, plus the additive defect at slope one
struct PathQuality {
  int q = 2;
  int defect = 0;
};

PathQuality measure_path(const Space& X, const std::vector<std::string>& path) {
  PathQuality out;
  long long q = 2;
  for (std::size_t s = 0; s < path.size(); ++s) {
    for (std::size_t t = s + 1; t < path.size(); ++t) {
      long long delta = static_cast<long long>(t - s);
      long long d = X.distance(path[s], path[t]);
      out.defect = std::max(out.defect, static_cast<int>(delta - d));
      while (q * q + 2 * q * d < 4 * delta || q * (delta + 1) < 2 * d) ++q;
    }
  }
  out.q = static_cast<int>(q);
  return out;
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end(), words::shortlex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

QuasiAxis quasi_axis(const Space& X, const Isometry& g, int lo, int hi, const BallGraph* within) {
  if (lo >= hi) fail(errc::precondition, "quasi_axis needs a nonempty index range");
  int horizon = std::max({8, hi, -lo});
  Classification cls = classify_isometry(X, g, horizon);
  if (cls.type != IsoType::loxodromic)
    fail(errc::not_loxodromic,
         "axis owner \"" + g.word() + "\" classified " + iso_type_name(cls.type));

  std::string o = X.basepoint();
  std::vector<std::string> segment = X.geodesic(o, X.apply(g, o));
  QuasiAxis axis;
  axis.owner = g;
  axis.lo = lo;
  axis.hi = hi;
  for (int i = lo; i < hi; ++i) {
    Isometry p = X.power(g, i);
    std::size_t start = axis.path.empty() ? 0 : 1;
    for (std::size_t j = start; j < segment.size(); ++j)
      axis.path.push_back(X.apply(p, segment[j]));
  }
  for (std::size_t j = 0; j + 1 < axis.path.size(); ++j) {
    if (X.distance(axis.path[j], axis.path[j + 1]) != 1)
      fail(errc::verification_failure, "axis path of " + g.word() + " is not edgewise");
  }
  if (within) {
    for (const auto& v : axis.path)
      if (!within->has(v))
        fail(errc::out_of_ball, "axis of " + g.word() + " leaves the working ball at " + v);
  }
  PathQuality pq = measure_path(X, axis.path);
  axis.constant = Rational(pq.q, 2);
  axis.points = sorted_unique(axis.path);
  return axis;
}

QuasiAxis explicit_axis(const Space& X, std::vector<std::string> path) {
  if (path.empty()) fail(errc::precondition, "explicit axis needs vertices");
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    if (X.distance(path[j], path[j + 1]) != 1)
      fail(errc::precondition, "explicit axis is not edgewise");
  }
  QuasiAxis axis;
  axis.path = std::move(path);
  PathQuality pq = measure_path(X, axis.path);
  axis.constant = Rational(pq.q, 2);
  axis.points = sorted_unique(axis.path);
  return axis;
}

std::vector<std::string> project_to_set(const Space& X, const std::vector<std::string>& target,
                                        const std::vector<std::string>& source) {
  if (target.empty()) fail(errc::precondition, "projection target is empty");
  std::vector<std::string> out;
  for (const auto& x : source) {
    int best = -1;
    std::vector<std::string> arg;
    for (const auto& y : target) {
      int d = X.distance(x, y);
      if (best < 0 || d < best) {
        best = d;
        arg.clear();
      }
      if (d == best) arg.push_back(y);
    }
    out.insert(out.end(), arg.begin(), arg.end());
  }
  std::sort(out.begin(), out.end(), words::shortlex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int set_diameter(const Space& X, const std::vector<std::string>& set) {
  int diam = 0;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      diam = std::max(diam, X.distance(set[i], set[j]));
  return diam;
}

ProjectionPair mutual_axis_projection(const Space& X, const QuasiAxis& f, const QuasiAxis& g) {
  ProjectionPair out;
  out.diam_f_onto_g = set_diameter(X, project_to_set(X, g.points, f.points));
  out.diam_g_onto_f = set_diameter(X, project_to_set(X, f.points, g.points));
  return out;
}

bool weakly_independent(const Space& X, const Isometry& f, const Isometry& g, int tau,
                        int axis_range) {
  QuasiAxis af = quasi_axis(X, f, -axis_range, axis_range + 1);
  QuasiAxis ag = quasi_axis(X, g, -axis_range, axis_range + 1);
  ProjectionPair p = mutual_axis_projection(X, af, ag);
  return p.diam_f_onto_g <= tau && p.diam_g_onto_f <= tau;
}

ExtensionChoice extension_choice(const Space& X, const std::vector<Isometry>& F, const Isometry& g,
                                 const Isometry& h, const ExtensionOptions& opts) {
  if (F.empty()) fail(errc::precondition, "extension choice over an empty family");
  std::string o = X.basepoint();
  std::string go = X.apply(g, o);
  std::string gio = X.apply(X.inverse(g), o);
  std::string ho = X.apply(h, o);
  std::vector<std::string> in_leg = X.geodesic(o, gio);
  std::vector<std::string> out_leg = X.geodesic(o, ho);

  struct Scored {
    Isometry f;
    int score;
  };
  std::vector<Scored> ranked;
  int reach = std::max(X.base_norm(gio), X.base_norm(ho));
  for (const auto& f : F) {
    int len = std::max(1, X.distance(o, X.apply(f, o)));
    int range = opts.axis_range + reach / len + 1;
    QuasiAxis axis = quasi_axis(X, f, -range, range + 1);
    int s1 = set_diameter(X, project_to_set(X, axis.points, in_leg));
    int s2 = set_diameter(X, project_to_set(X, axis.points, out_leg));
    ranked.push_back({f, std::max(s1, s2)});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score < b.score;
    return words::shortlex_less(a.f.word(), b.f.word());
  });

  for (const auto& cand : ranked) {
    ExtensionChoice out;
    out.f = cand.f;
    out.score = cand.score;
    // path labeled g f h: [o, go] g[o, fo] gf[o, ho]
    std::vector<std::string> path = X.geodesic(o, go);
    Isometry gf = X.compose(g, cand.f);
    std::vector<std::string> mid = X.geodesic(go, X.apply(gf, o));
    path.insert(path.end(), mid.begin() + 1, mid.end());
    std::vector<std::string> tail = X.geodesic(path.back(), X.apply(X.compose(gf, h), o));
    path.insert(path.end(), tail.begin() + 1, tail.end());
    PathQuality pq = measure_path(X, path);
    if (pq.defect <= opts.max_defect) {
      out.path_defect = pq.defect;
      out.constant = Rational(pq.q, 2);
      out.path = std::move(path);
      return out;
    }
  }
  fail(errc::verification_failure,
       "no member of the family makes \"" + g.word() + "\" f \"" + h.word() +
           "\" a quasi-geodesic within defect " + std::to_string(opts.max_defect));
}

ComposeReport compose_loxodromic(const Space& X, const Isometry& h, const Isometry& k, int n,
                                 int rep_power) {
  if (n <= 0) fail(errc::precondition, "compose_loxodromic needs n >= 1");
  ComposeReport out;
  std::string o = X.basepoint();
  int depth = rep_power * n + 4;
  std::string h_plus = X.orbit_point(h, depth);
  std::string k_minus = X.orbit_point(k, -depth);
  for (int j = 1; j <= n; ++j) {
    Isometry gj = X.compose(X.power(h, j), X.power(k, j));
    std::string fix_plus = X.apply(X.power(gj, rep_power), o);
    std::string fix_minus = X.apply(X.power(gj, -rep_power), o);
    out.attractor_products.push_back(gromov_product(X, fix_plus, h_plus, o));
    out.repeller_products.push_back(gromov_product(X, fix_minus, k_minus, o));
    if (j == n) {
      out.product = gj;
      out.cls = classify_isometry(X, gj, std::max(8, rep_power));
    }
  }
  out.monotone = true;
  for (std::size_t j = 1; j < out.attractor_products.size(); ++j) {
    if (out.attractor_products[j] < out.attractor_products[j - 1]) out.monotone = false;
    if (out.repeller_products[j] < out.repeller_products[j - 1]) out.monotone = false;
  }
  return out;
}

AcylindricityReport acylindricity_probe(const Space& X, int r, int L, int M,
                                        const AcylindricityOptions& opts) {
  std::vector<Isometry> candidates = X.group_ball(M);
  std::vector<std::string> verts = X.ball_vertices(M, 2'000'000);

  std::vector<std::pair<std::string, std::string>> pairs = opts.pairs;
  if (pairs.empty()) {
    Rng rng(opts.seed);
    std::size_t attempts = 0;
    while (pairs.size() < opts.sampled_pairs && attempts < 50 * opts.sampled_pairs) {
      ++attempts;
      const std::string& x = verts[rng.below(verts.size())];
      const std::string& y = verts[rng.below(verts.size())];
      if (X.distance(x, y) > L) pairs.emplace_back(x, y);
    }
  }
  for (const auto& [x, y] : pairs) {
    if (X.distance(x, y) <= L)
      fail(errc::precondition, "pair (" + x + ", " + y + ") violates d > L");
  }
  if (candidates.size() * std::max<std::size_t>(pairs.size(), 1) > opts.max_work)
    fail(errc::resource_limit, "acylindricity scan too large");

  AcylindricityReport out;
  out.candidates = static_cast<int>(candidates.size());
  for (const auto& [x, y] : pairs) {
    int count = 0;
    for (const auto& g : candidates) {
      if (X.displacement(g, x) <= r && X.displacement(g, y) <= r) ++count;
    }
    out.counts.push_back(count);
    if (count > out.max_count) {
      out.max_count = count;
      out.argmax = {x, y};
    }
  }
  return out;
}

std::vector<Isometry> kernel_sample(const Space& X, const std::vector<std::string>& ray_templates,
                                    int candidate_radius, const KernelOptions& opts) {
  std::vector<Isometry> candidates = X.group_ball(candidate_radius, opts.max_candidates);
  std::vector<std::string> probe = X.ball_vertices(opts.probe_radius, opts.max_candidates);
  std::string o = X.basepoint();

  // tail values of b_{y_n} at the probe vertices, for one ray
  auto tail_values = [&](const std::vector<std::string>& ray_pts) {
    std::vector<int> vals(probe.size());
    const std::string& y = ray_pts.back();
    int dy = X.distance(o, y);
    for (std::size_t i = 0; i < probe.size(); ++i) vals[i] = X.distance(probe[i], y) - dy;
    return vals;
  };

  std::vector<std::vector<std::string>> rays;
  std::vector<std::vector<int>> base_vals;
  for (const auto& tmpl : ray_templates) {
    std::vector<std::string> pts;
    for (int nn = 1; nn <= opts.horizon; ++nn)
      pts.push_back(X.apply(X.iso(words::expand_template(tmpl, nn)), o));
    base_vals.push_back(tail_values(pts));
    rays.push_back(std::move(pts));
  }

  std::vector<Isometry> kernel;
  for (const auto& g : candidates) {
    bool fixes_all = true;
    for (std::size_t ri = 0; ri < rays.size() && fixes_all; ++ri) {
      std::vector<std::string> moved;
      moved.reserve(rays[ri].size());
      for (const auto& y : rays[ri]) moved.push_back(X.apply(g, y));
      std::vector<int> vals = tail_values(moved);
      for (std::size_t i = 0; i < probe.size(); ++i) {
        if (std::abs(vals[i] - base_vals[ri][i]) > opts.tolerance) {
          fixes_all = false;
          break;
        }
      }
    }
    if (fixes_all) kernel.push_back(g);
  }
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

}  // namespace horolab
