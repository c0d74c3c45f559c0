#include "horolab/horofunction.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

#include "horolab/errors.hpp"

namespace horolab {

HorofunctionPatch::HorofunctionPatch(std::shared_ptr<const BallGraph> ball,
                                     std::vector<int> values, Provenance prov)
    : ball_(std::move(ball)), values_(std::move(values)), prov_(std::move(prov)) {
  validate();
}

void HorofunctionPatch::validate() const {
  if (!ball_) fail(errc::precondition, "patch without a ball");
  if (values_.size() != static_cast<std::size_t>(ball_->size()))
    fail(errc::precondition, "patch value count does not match the ball");
  if (values_[static_cast<std::size_t>(ball_->basepoint())] != 0)
    fail(errc::verification_failure, "patch does not vanish at the basepoint");
  // edgewise 1-Lipschitz; with exact balls this is the full Lipschitz bound
  for (int v = 0; v < ball_->size(); ++v) {
    for (int w : ball_->neighbors(v)) {
      if (std::abs(values_[v] - values_[w]) > 1)
        fail(errc::verification_failure,
             "patch jumps across edge " + ball_->name(v) + " -- " + ball_->name(w));
    }
  }
}

HorofunctionPatch HorofunctionPatch::of_point(std::shared_ptr<const BallGraph> ball,
                                              const Space& X, const std::string& y) {
  int yi = ball->index_of(y);  // y must lie in the ball
  std::vector<int> vals(static_cast<std::size_t>(ball->size()));
  if (ball->exact_all_pairs()) {
    std::vector<int> row;
    ball->bfs_into(yi, row);
    int dy = row[static_cast<std::size_t>(ball->basepoint())];
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = row[i] - dy;
  } else {
    int dy = X.distance(X.basepoint(), y);
    for (int v = 0; v < ball->size(); ++v) vals[static_cast<std::size_t>(v)] = X.distance(ball->name(v), y) - dy;
  }
  return HorofunctionPatch(std::move(ball), std::move(vals),
                           Provenance{Provenance::point, y.empty() ? "<e>" : y});
}

HorofunctionPatch HorofunctionPatch::from_values(std::shared_ptr<const BallGraph> ball,
                                                 std::vector<int> values, Provenance prov) {
  return HorofunctionPatch(std::move(ball), std::move(values), std::move(prov));
}

int HorofunctionPatch::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

std::vector<int> HorofunctionPatch::argmin() const {
  int m = min_value();
  std::vector<int> out;
  for (int v = 0; v < ball_->size(); ++v)
    if (values_[static_cast<std::size_t>(v)] == m) out.push_back(v);
  return out;
}

SequenceSpec word_sequence(const Space& X, const std::string& template_expr) {
  return SequenceSpec{template_expr, [&X, template_expr](int n) {
                        return X.apply(X.iso(words::expand_template(template_expr, n)),
                                       X.basepoint());
                      }};
}

SequenceSpec translated_sequence(const Space& X, const SequenceSpec& seq, const Isometry& g) {
  auto base = seq.at;
  return SequenceSpec{g.word() + "." + seq.descriptor,
                      [&X, base, g](int n) { return X.apply(g, base(n)); }};
}

SequenceSpec list_sequence(std::string descriptor, std::vector<std::string> points) {
  if (points.empty()) fail(errc::precondition, "empty sequence");
  return SequenceSpec{std::move(descriptor), [pts = std::move(points)](int n) {
                        std::size_t i = static_cast<std::size_t>(n) - 1;
                        return pts[std::min(i, pts.size() - 1)];
                      }};
}

LimitPatch limit_along_sequence(std::shared_ptr<const BallGraph> ball, const Space& X,
                                const SequenceSpec& seq, int horizon, int window) {
  if (horizon < window + 1) fail(errc::precondition, "horizon too small for the window");
  std::string o = X.basepoint();
  std::vector<std::string> pts;
  std::vector<int> norms;
  for (int n = 1; n <= horizon; ++n) {
    pts.push_back(seq.at(n));
    norms.push_back(X.distance(o, pts.back()));
  }

  int V = ball->size();
  std::vector<int> stable_value(static_cast<std::size_t>(V));
  ConvergenceCertificate cert;
  cert.horizon = horizon;
  cert.window = window;
  cert.stabilization_index.assign(static_cast<std::size_t>(V), 1);
  for (int v = 0; v < V; ++v) {
    const std::string& x = ball->name(v);
    int last = 0;
    int since = 1;
    for (int n = 1; n <= horizon; ++n) {
      int val = X.distance(x, pts[static_cast<std::size_t>(n - 1)]) - norms[static_cast<std::size_t>(n - 1)];
      if (n == 1 || val != last) {
        last = val;
        since = n;
      }
    }
    cert.stabilization_index[static_cast<std::size_t>(v)] = since;
    cert.max_index = std::max(cert.max_index, since);
    if (since > horizon - window)
      fail(errc::non_convergence, "b_{y_n}(" + (x.empty() ? std::string("<e>") : x) +
                                      ") along " + seq.descriptor + " not constant on [" +
                                      std::to_string(since) + ", " + std::to_string(horizon) +
                                      "]; raise the horizon or shrink the ball");
    stable_value[static_cast<std::size_t>(v)] = last;
  }
  HorofunctionPatch patch = HorofunctionPatch::from_values(
      std::move(ball), std::move(stable_value), Provenance{Provenance::limit, seq.descriptor});
  return LimitPatch{std::move(patch), std::move(cert), std::move(pts)};
}

FiniteDifferenceBound finite_difference(const HorofunctionPatch& p, const HorofunctionPatch& q) {
  if (&p.ball() != &q.ball())
    fail(errc::mismatched_ball, "finite difference needs patches on one ball");
  FiniteDifferenceBound out;
  out.domain_radius = p.ball().radius();
  for (int v = 0; v < p.ball().size(); ++v) {
    int d = std::abs(p.value(v) - q.value(v));
    if (d > out.lower_bound) {
      out.lower_bound = d;
      out.witness = p.ball().name(v);
    }
  }
  return out;
}

FiniteDifferenceBound finite_difference_within(const HorofunctionPatch& p,
                                               const HorofunctionPatch& q, int radius) {
  if (&p.ball() != &q.ball())
    fail(errc::mismatched_ball, "finite difference needs patches on one ball");
  FiniteDifferenceBound out;
  out.domain_radius = radius;
  for (int v = 0; v < p.ball().size(); ++v) {
    if (p.ball().base_norm(v) > radius) continue;
    int d = std::abs(p.value(v) - q.value(v));
    if (d > out.lower_bound) {
      out.lower_bound = d;
      out.witness = p.ball().name(v);
    }
  }
  return out;
}

MinimumReport local_minimum_map(const HorofunctionPatch& p, int margin) {
  const BallGraph& g = p.ball();
  int R = g.radius();
  if (margin < 0 || margin >= R) fail(errc::precondition, "margin must satisfy 0 <= m < R");
  int interior = R - margin;

  MinimumReport out;
  out.min_value = p.min_value();
  std::vector<int> mins = p.argmin();
  bool all_interior = true;
  for (int v : mins)
    if (g.base_norm(v) > interior) all_interior = false;

  if (all_interior) {
    out.kind = MinimumReport::finite_minimum;
    for (int v : mins) out.min_set.push_back(g.name(v));
    return out;
  }

  // strictly descending paths from o, BFS over value-dropping edges
  if (out.min_value <= -interior) {
    std::vector<int> parent(static_cast<std::size_t>(g.size()), -2);
    std::deque<int> queue{g.basepoint()};
    parent[static_cast<std::size_t>(g.basepoint())] = -1;
    int goal = -1;
    while (!queue.empty() && goal < 0) {
      int v = queue.front();
      queue.pop_front();
      if (p.value(v) <= -interior) {
        goal = v;
        break;
      }
      for (int w : g.neighbors(v)) {
        if (parent[static_cast<std::size_t>(w)] == -2 && p.value(w) == p.value(v) - 1) {
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        }
      }
    }
    if (goal >= 0) {
      out.kind = MinimumReport::infinite_descent;
      std::vector<std::string> path;
      for (int v = goal; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(g.name(v));
      std::reverse(path.begin(), path.end());
      out.descent_witness = std::move(path);
      return out;
    }
  }
  // neither criterion fires: the ball is too small to decide
  out.kind = MinimumReport::inconclusive;
  return out;
}

DeadEndReport is_dead_end(const BallGraph& g, int o, int x) {
  // the neighbor list of x must be the ambient one
  if (!g.whole_space() && g.base_norm(x) >= g.radius())
    fail(errc::uncertified_region, "vertex " + g.name(x) + " sits on the ball shell");
  DeadEndReport out;
  std::vector<int> from_o;
  g.bfs_into(o, from_o);
  int dx = from_o[static_cast<std::size_t>(x)];
  out.dead_end = true;
  for (int y : g.neighbors(x)) {
    if (from_o[static_cast<std::size_t>(y)] == dx + 1) {
      out.dead_end = false;
      out.witness = g.name(y);
      return out;
    }
  }
  // isolation: no other vertex y has b_y(x) = b_x(x), i.e. lies on a
  // geodesic from o extended through x
  out.isolated = true;
  std::vector<int> from_x;
  g.bfs_into(x, from_x);
  for (int y = 0; y < g.size(); ++y) {
    if (y == x) continue;
    if (from_o[static_cast<std::size_t>(y)] == dx + from_x[static_cast<std::size_t>(y)]) {
      out.isolated = false;
      out.witness = g.name(y);
      return out;
    }
  }
  return out;
}

MinimalClassReport minimal_class_probe(const Space& X, const BallGraph& guard_ball,
                                       std::shared_ptr<const BallGraph> patch_ball,
                                       const SequenceSpec& xs, const SequenceSpec& ys, int horizon,
                                       const MinimalClassOptions& opts) {
  MinimalClassReport out;
  LimitPatch px = limit_along_sequence(patch_ball, X, xs, horizon, opts.window);
  LimitPatch py = limit_along_sequence(patch_ball, X, ys, horizon, opts.window);

  auto in_guard_ball = [&](const std::string& v) { return guard_ball.has(v); };

  out.hypothesis_holds = true;
  for (int z = 0; z < guard_ball.size() && out.hypothesis_holds; ++z) {
    if (guard_ball.base_norm(z) > opts.z_radius) continue;
    ++out.checked_z;
    // the x-window stands for "n large", the later y-window for "all but
    // finitely many m"
    for (int i = std::max(1, horizon - 2 * opts.tail + 1);
         i <= horizon - opts.tail && out.hypothesis_holds; ++i) {
      const std::string& xn = px.points[static_cast<std::size_t>(i - 1)];
      if (!in_guard_ball(xn))
        fail(errc::out_of_ball, "sequence point " + xn + " leaves the guard ball");
      for (int j = horizon - opts.tail + 1; j <= horizon; ++j) {
        const std::string& ym = py.points[static_cast<std::size_t>(j - 1)];
        if (!in_guard_ball(ym))
          fail(errc::out_of_ball, "sequence point " + ym + " leaves the guard ball");
        int zi = z, xi = guard_ball.index_of(xn), yi = guard_ball.index_of(ym);
        if (zi == xi || zi == yi || xi == yi) continue;
        if (!guard_ball.is_guard(xi, zi, yi)) {
          out.hypothesis_holds = false;
          out.counterexample_z = guard_ball.name(z);
          out.detail = xs.descriptor + " at n=" + std::to_string(i) + " is not a guard from " +
                       (guard_ball.name(z).empty() ? "<e>" : guard_ball.name(z)) + " to " +
                       ys.descriptor + " at m=" + std::to_string(j);
          break;
        }
      }
    }
  }
  if (!out.hypothesis_holds) return out;
  out.patches_equal = finite_difference(px.patch, py.patch).lower_bound == 0;
  return out;
}

AccumulationReport accumulation_probe(const Space& X, std::shared_ptr<const BallGraph> ball, int v,
                                      const std::vector<HorofunctionPatch>& patches,
                                      const std::vector<std::vector<std::string>>& sequences,
                                      int y_radius) {
  AccumulationReport out;
  if (patches.empty()) {
    out.failure = "no patches";
    return out;
  }
  HorofunctionPatch bv = HorofunctionPatch::of_point(ball, X, ball->name(v));

  out.guards_ok = true;
  for (const auto& seq : sequences) {
    for (int y = 0; y < ball->size() && out.guards_ok; ++y) {
      if (ball->base_norm(y) > y_radius) continue;
      // tail of the sequence, at most the last three points inside the ball
      int used = 0;
      for (auto it = seq.rbegin(); it != seq.rend() && used < 3; ++it) {
        if (!ball->has(*it)) continue;
        int zi = ball->index_of(*it);
        if (zi == v || zi == y || y == v) continue;
        ++used;
        if (!ball->is_guard(v, y, zi)) {
          out.guards_ok = false;
          out.failure = "cone/vertex " + ball->name(v) + " is not a guard from " + ball->name(y) +
                        " to " + *it;
          break;
        }
      }
    }
  }

  // pointwise convergence: each vertex must agree with b_v from some patch on
  out.accumulates = true;
  for (const auto& p : patches) {
    if (&p.ball() != ball.get()) fail(errc::mismatched_ball, "patch on a different ball");
    int agree = 0;
    for (int x = 0; x < ball->size(); ++x)
      if (p.value(x) == bv.value(x)) ++agree;
    out.agreement.push_back(agree);
  }
  for (int x = 0; x < ball->size(); ++x) {
    // find the last patch disagreeing at x; all later ones must agree
    int last_bad = -1;
    for (std::size_t i = 0; i < patches.size(); ++i)
      if (patches[i].value(x) != bv.value(x)) last_bad = static_cast<int>(i);
    if (last_bad == static_cast<int>(patches.size()) - 1) {
      out.accumulates = false;
      out.failure = "no convergence to b_v at vertex " + ball->name(x);
      break;
    }
  }
  return out;
}

AxisProjectionReport axis_projection_of_patch(const Space& X, const LimitPatch& p,
                                              const QuasiAxis& axis, int tail) {
  // fixed-class rejection: compare against the owner's own limit patches at
  // two radii; a finite difference that stops growing marks the same class
  std::shared_ptr<const BallGraph> ball = p.patch.ball_ptr();
  int R = ball->radius();
  if (!axis.owner.is_identity()) {
    for (int dir : {1, -1}) {
      SequenceSpec ray{axis.owner.word() + (dir > 0 ? "^+" : "^-"), [&X, &axis, dir](int n) {
                         return X.orbit_point(axis.owner, dir * n);
                       }};
      LimitPatch own = limit_along_sequence(ball, X, ray, p.cert.horizon, p.cert.window);
      int half = finite_difference_within(p.patch, own.patch, R / 2).lower_bound;
      int full = finite_difference(p.patch, own.patch).lower_bound;
      if (full <= half)
        fail(errc::fixed_class, "patch " + p.patch.provenance().descriptor +
                                    " lies in the fixed class " + ray.descriptor);
    }
  }

  AxisProjectionReport out;
  std::vector<std::string> tail_pts(p.points.end() - std::min<std::size_t>(tail, p.points.size()),
                                    p.points.end());
  out.projection = project_to_set(X, axis.points, tail_pts);
  out.diameter = set_diameter(X, out.projection);

  // coarse continuity: perturb the defining sequence and stay within twice
  // the measured diameter of the original projection
  std::vector<std::string> perturbed;
  for (const auto& y : tail_pts) {
    auto nb = X.neighbors(y);
    if (!nb.empty()) perturbed.push_back(nb.front());
    perturbed.push_back(y);
  }
  auto proj2 = project_to_set(X, axis.points, perturbed);
  int bound = 2 * std::max(out.diameter, 1);
  out.perturbed_excess = 0;
  for (const auto& q : proj2) {
    int best = -1;
    for (const auto& r : out.projection) {
      int d = X.distance(q, r);
      if (best < 0 || d < best) best = d;
    }
    out.perturbed_excess = std::max(out.perturbed_excess, std::max(0, best - bound));
  }
  out.coarse_continuity_ok = out.perturbed_excess == 0;
  return out;
}

void write_patch_csv(const HorofunctionPatch& p, std::ostream& out) {
  out << "vertex,value\n";
  for (int v = 0; v < p.ball().size(); ++v) {
    const std::string& n = p.ball().name(v);
    out << (n.empty() ? "<e>" : n) << "," << p.value(v) << "\n";
  }
}

}  // namespace horolab
