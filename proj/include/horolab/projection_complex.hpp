#pragma once

#include <memory>
#include <string>
#include <vector>

#include "horolab/actions.hpp"
#include "horolab/ball_graph.hpp"
#include "horolab/horofunction.hpp"
#include "horolab/space.hpp"

namespace horolab {

// A family of translated quasi-axes with exhaustively computed set-valued
// nearest-point projections. kappa is the least constant bounding every
// projection diameter.
class AxisFamily {
 public:
  AxisFamily(const Space& X, std::vector<QuasiAxis> members, std::vector<std::string> labels);

  const Space& space() const { return *space_; }
  int size() const { return static_cast<int>(members_.size()); }
  const QuasiAxis& member(int i) const { return members_[static_cast<std::size_t>(i)]; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int kappa() const { return kappa_; }

  // pi_U(V), sorted vertex names
  const std::vector<std::string>& projection(int U, int V) const;
  // d_U(V, W) = diam(pi_U(V) u pi_U(W))
  int d(int U, int V, int W) const;

 private:
  const Space* space_;
  std::vector<QuasiAxis> members_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<std::string>>> proj_;
  std::vector<std::vector<std::vector<int>>> dmat_;
  int kappa_ = 0;
};

// Family of translated seed axes. The members are t . Ax(s) for every seed s
// and translate t; duplicate vertex sets are rejected.
AxisFamily build_axis_family(const Space& X, const std::vector<Isometry>& seeds,
                             const std::vector<Isometry>& translates, int axis_range);

struct AxiomWitness {
  std::string axiom;
  std::string detail;
};

struct AxiomReport {
  int kappa = 0;
  bool axiom1 = false;  // diam pi_U(V) <= kappa
  bool axiom2 = false;  // d_V(U, W) > kappa implies d_U(V, W) <= kappa
  bool axiom3 = false;  // interval counts finite, reported explicitly
  int axiom3_max_count = 0;
  std::vector<AxiomWitness> witnesses;
  bool pass() const { return axiom1 && axiom2 && axiom3; }
};

AxiomReport verify_projection_axioms(const AxisFamily& fam);

// F_K(V, W) = members U distinct from V, W with d_U(V, W) > K
std::vector<int> interval_set(const AxisFamily& fam, int V, int W, int K);

// The graph on the family with U ~ V when F_K(U, V) is empty. Not a ball of
// any space, but it reuses the finite-graph machinery for distances and
// guard tests.
struct ProjectionComplexGraph {
  int K = 0;
  bool connected = false;
  std::shared_ptr<const BallGraph> graph;  // vertex names are member labels

  int distance(int U, int V) const { return graph->distance(U, V); }
};

ProjectionComplexGraph build_complex(const AxisFamily& fam, int K);

struct ConnectivitySweep {
  int least_connected_K = -1;  // -1 when none in range
  std::vector<std::pair<int, bool>> per_K;
};

ConnectivitySweep connectivity_sweep(const AxisFamily& fam, int K_max);

struct ForcingReport {
  bool pass = false;
  int khat = 0;
  // least threshold that passes: the largest d_W(U, V) over non-guards W
  int least_passing_khat = 0;
  int checked_triples = 0;
  std::string witness;
};

// Every member of F_khat(U, V) must pass the guard deletion test between U
// and V in the complex, exhaustively over pairs.
ForcingReport verify_forcing(const ProjectionComplexGraph& pc, const AxisFamily& fam, int khat);

struct BgitReport {
  int max_dV = 0;
  std::vector<int> per_index;
};

// max over path vertices U_i of d_V(U_0, U_i); every U_i must keep complex
// distance >= 3 from V
BgitReport verify_bgit(const ProjectionComplexGraph& pc, const AxisFamily& fam,
                       const std::vector<int>& path, int V);

struct MinimalLoxOptions {
  int chain_range = 3;   // indices i of (g f^n)^i Ax(f)
  int axis_range = 4;
  int K = 0;
  std::vector<Isometry> competitor_translates;  // extra axes converging the same way
};

struct MinimalLoxReport {
  Isometry element;  // g f^n
  bool chain_geodesic = false;
  int min_middle_projection = 0;  // min over i<j<k of d_{U_j}(U_i, U_k)
  int measured_D0 = 0;            // d(o, f^n o) - min_middle_projection
  bool singleton_certified = false;
  std::string detail;
};

// Builds the chain U_i = (g f^n)^i Ax(f), checks it is a geodesic in the
// projection complex, and certifies the fixed class is a singleton at this
// scale via guard chains against competing sequences.
MinimalLoxReport minimal_loxodromic_construct(const Space& X, const Isometry& g, const Isometry& f,
                                              int n, const MinimalLoxOptions& opts = {});

struct MyrbergInjectivityReport {
  bool guard_chain_ok = false;
  int competitors_same_direction = 0;
  int competitors_agreeing = 0;
  int competitors_rejected = 0;  // different direction, growing difference
  bool singleton_certified = false;
  std::string detail;
};

// Certifies at the tested scale that all competitor sequences converging to
// the ray's direction give the same horofunction patch. Competitors aimed
// elsewhere must show a growing finite difference.
MyrbergInjectivityReport myrberg_injectivity_probe(const Space& X,
                                                   std::shared_ptr<const BallGraph> ball,
                                                   const std::vector<std::string>& ray_path,
                                                   const std::vector<SequenceSpec>& competitors,
                                                   int horizon, HalfInt direction_threshold);

}  // namespace horolab
