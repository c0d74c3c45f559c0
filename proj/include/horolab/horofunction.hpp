#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "horolab/actions.hpp"
#include "horolab/ball_graph.hpp"
#include "horolab/space.hpp"

namespace horolab {

struct Provenance {
  enum Kind { point, limit, imported } kind = point;
  std::string descriptor;
};

// Integer values of a horofunction on a ball: value(o) = 0, 1-Lipschitz by
// construction. A patch never extrapolates; larger radii are recomputed from
// the defining data.
class HorofunctionPatch {
 public:
  static HorofunctionPatch of_point(std::shared_ptr<const BallGraph> ball, const Space& X,
                                    const std::string& y);
  // raw values; validates the patch invariants
  static HorofunctionPatch from_values(std::shared_ptr<const BallGraph> ball,
                                       std::vector<int> values, Provenance prov);

  const BallGraph& ball() const { return *ball_; }
  std::shared_ptr<const BallGraph> ball_ptr() const { return ball_; }
  int value(int v) const { return values_[static_cast<std::size_t>(v)]; }
  int value_at(const std::string& name) const { return values_[ball_->index_of(name)]; }
  const std::vector<int>& values() const { return values_; }
  const Provenance& provenance() const { return prov_; }

  int min_value() const;
  std::vector<int> argmin() const;

 private:
  HorofunctionPatch(std::shared_ptr<const BallGraph> ball, std::vector<int> values,
                    Provenance prov);
  void validate() const;

  std::shared_ptr<const BallGraph> ball_;
  std::vector<int> values_;
  Provenance prov_;
};

// y_n = at(n) for n >= 1, vertex names in the ambient space
struct SequenceSpec {
  std::string descriptor;
  std::function<std::string(int)> at;
};

// orbit sequence of a word template: y_n = (expanded word at n) applied to o
SequenceSpec word_sequence(const Space& X, const std::string& template_expr);
// the sequence translated by an isometry; realizes g . b_xi
SequenceSpec translated_sequence(const Space& X, const SequenceSpec& seq, const Isometry& g);
// y_n = points[min(n, len)] for an explicit list
SequenceSpec list_sequence(std::string descriptor, std::vector<std::string> points);

struct ConvergenceCertificate {
  int horizon = 0;
  int window = 0;
  // per ball vertex: least index from which b_{y_n}(x) is constant up to the
  // horizon
  std::vector<int> stabilization_index;
  int max_index = 0;
};

struct LimitPatch {
  HorofunctionPatch patch;
  ConvergenceCertificate cert;
  std::vector<std::string> points;  // y_1..y_horizon
};

// Pointwise-stabilized values of b_{y_n} over the ball. A value counts as
// stabilized when it is constant on [i, horizon] with horizon - i >= window;
// otherwise fail(non_convergence).
LimitPatch limit_along_sequence(std::shared_ptr<const BallGraph> ball, const Space& X,
                                const SequenceSpec& seq, int horizon, int window = 2);

struct FiniteDifferenceBound {
  int lower_bound = 0;   // sup over the shared ball, certified lower bound
  int domain_radius = 0;
  std::string witness;   // vertex attaining the sup
};

FiniteDifferenceBound finite_difference(const HorofunctionPatch& p, const HorofunctionPatch& q);
// restricted to vertices with base_norm <= radius
FiniteDifferenceBound finite_difference_within(const HorofunctionPatch& p,
                                               const HorofunctionPatch& q, int radius);

struct MinimumReport {
  enum Kind { finite_minimum, infinite_descent, inconclusive } kind = inconclusive;
  int min_value = 0;
  std::vector<std::string> min_set;            // finite_minimum
  std::vector<std::string> descent_witness;    // infinite_descent: strictly descending path
};

// Trichotomy at margin m: minimum attained only at interior vertices (norm
// <= R - m) gives a finite minimum; a strictly descending path from o
// reaching value <= -(R - m) certifies infinite descent; otherwise the
// report is inconclusive.
MinimumReport local_minimum_map(const HorofunctionPatch& p, int margin);

struct DeadEndReport {
  bool dead_end = false;
  // no other ball vertex y satisfies b_y(x) = b_x(x); implies b_x is
  // isolated at the checked scale
  bool isolated = false;
  std::string witness;  // extension vertex, or isolation violator
};

DeadEndReport is_dead_end(const BallGraph& g, int o, int x);

struct MinimalClassOptions {
  int z_radius = 2;  // norms of tested z; keep below the x-window displacements
  int tail = 2;      // window sizes; x runs over [H-2t+1, H-t], y over [H-t+1, H]
  int window = 2;
};

struct MinimalClassReport {
  bool hypothesis_holds = false;
  bool patches_equal = false;
  std::string counterexample_z;
  std::string detail;
  int checked_z = 0;
};

// The guard criterion for two sequences defining the same boundary class:
// for every tested z some tail of (x_n) consists of guards between z and the
// tail of (y_m); on success the two limit patches must agree.
MinimalClassReport minimal_class_probe(const Space& X, const BallGraph& guard_ball,
                                       std::shared_ptr<const BallGraph> patch_ball,
                                       const SequenceSpec& xs, const SequenceSpec& ys, int horizon,
                                       const MinimalClassOptions& opts = {});

struct AccumulationReport {
  bool accumulates = false;
  bool guards_ok = false;
  // per patch: number of ball vertices where it already agrees with b_v
  std::vector<int> agreement;
  std::string failure;
};

// Checks that the listed patches converge pointwise to b_v on the ball: for
// every vertex the values must equal b_v from some patch on. When defining
// sequences are supplied, also verifies v is a guard between sampled y and
// the sequence tails.
AccumulationReport accumulation_probe(const Space& X, std::shared_ptr<const BallGraph> ball, int v,
                                      const std::vector<HorofunctionPatch>& patches,
                                      const std::vector<std::vector<std::string>>& sequences = {},
                                      int y_radius = 2);

struct AxisProjectionReport {
  std::vector<std::string> projection;
  int diameter = 0;
  bool coarse_continuity_ok = false;
  int perturbed_excess = 0;  // how far perturbed projections leave the 2D-neighborhood
};

// Projection of a boundary patch to a quasi-axis through the tail of its
// defining sequence. Rejects patches in the owner's fixed classes, detected
// by a non-growing finite difference against the owner's own limit patches.
AxisProjectionReport axis_projection_of_patch(const Space& X, const LimitPatch& p,
                                              const QuasiAxis& axis, int tail = 3);

void write_patch_csv(const HorofunctionPatch& p, std::ostream& out);

}  // namespace horolab
