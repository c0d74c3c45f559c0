#pragma once

#include <memory>
#include <string>
#include <vector>

#include "horolab/ball_graph.hpp"
#include "horolab/horofunction.hpp"
#include "horolab/space.hpp"

namespace horolab {

// Coned-off Cayley graph of a free product: one cone vertex per peripheral
// coset, joined to every coset element. Peripheral subgroups are the free
// factors. Distances are exact and computed by syllable costs: traversing a
// peripheral syllable costs its word length, capped at 2 by the hop through
// the cone.
//
// Cone vertex names look like "c(<s>)" for the identity coset of factor s
// and "c(ts<s>)" for the coset with canonical representative ts.
class ConedOffSpace final : public Space {
 public:
  explicit ConedOffSpace(std::shared_ptr<const WordSpace> base);

  const WordSpace& base() const { return *base_; }
  std::shared_ptr<const WordSpace> base_ptr() const { return base_; }

  static bool is_cone_name(const std::string& name);
  // canonical representative of g<factor-letter>: g with a trailing syllable
  // of that factor stripped
  std::string coset_rep(const std::string& element, char letter) const;
  std::string cone_name(const std::string& rep, char letter) const;
  std::string cone_of(const std::string& element, char letter) const;
  // (rep, letter); fail(unknown_coset) on a malformed name
  std::pair<std::string, char> cone_parts(const std::string& cone) const;

  // word length in the coned graph: syllable costs capped at 2
  int relative_norm(std::string_view canonical) const;

  std::string describe() const override;
  Isometry iso(std::string_view word_expr) const override { return base_->iso(word_expr); }
  Isometry compose(const Isometry& g, const Isometry& h) const override {
    return base_->compose(g, h);
  }
  Isometry inverse(const Isometry& g) const override { return base_->inverse(g); }
  std::vector<char> generator_letters() const override { return base_->generator_letters(); }
  std::string basepoint() const override { return std::string(); }
  bool has_vertex(const std::string& name) const override;
  std::vector<std::string> neighbors(const std::string& name) const override;
  int distance(const std::string& u, const std::string& v) const override;
  std::vector<std::string> geodesic(const std::string& u, const std::string& v) const override;
  std::string apply(const Isometry& g, const std::string& vertex) const override;
  // margin bookkeeping runs in the base Cayley metric
  int base_norm(const std::string& vertex) const override;
  std::vector<std::string> ball_vertices(int radius, std::size_t max_vertices) const override;
  std::vector<std::pair<std::string, std::string>> induced_edges(
      const std::vector<std::string>& verts) const override;
  std::vector<Isometry> group_ball(int radius, std::size_t max_elements) const override;

 private:
  std::shared_ptr<const WordSpace> base_;
};

struct ConedOffGraph {
  std::shared_ptr<const ConedOffSpace> space;
  std::shared_ptr<const BallGraph> graph;  // Cayley ball plus cones meeting it
  int cayley_radius = 0;
  std::vector<std::string> cones;

  const WordSpace& base() const { return space->base(); }
};

// The base is the Cayley ball of the given radius; distances in the coned
// graph agree with the ambient relative metric on every pair within the
// certified margin.
ConedOffGraph build_coned_off(std::shared_ptr<const WordSpace> base, int radius,
                              std::size_t max_vertices = 2'000'000);

struct CosetProjectionResult {
  std::vector<std::string> entry_set;  // coset vertices starting geodesics to x
  int ds_diameter = 0;                 // diameter of the entry set in the base word metric
};

// pi_{gP}(x): coset elements adjacent to the cone lying on some geodesic
// from x to the cone, read off the geodesic DAG of the coned ball
CosetProjectionResult coset_projection(const ConedOffGraph& g, const std::string& x,
                                       const std::string& cone);

// d_{gP}(x, y): diameter of the union of the two entry sets, base word metric
int coset_relative_distance(const ConedOffGraph& g, const std::string& cone, const std::string& x,
                            const std::string& y);

struct BcpWitness {
  std::string x, y, cone;
  int d_gp = 0;
  bool forced = false;
};

struct BcpReport {
  int K = 0;
  bool pass = true;
  // largest d_gP(x, y) whose pair has a geodesic avoiding the cone; the
  // least threshold for which the check passes
  int least_K = 0;
  long long pairs_checked = 0;
  std::vector<BcpWitness> violations;
  int scope = 0;
};

// Exhaustive over certified pairs of group elements with base norm at most
// `scope` and all cones: whenever d_gP(x, y) > K every geodesic from x to y
// must pass through the cone (deletion test).
BcpReport verify_bcp(const ConedOffGraph& g, int K, int scope);

struct UniqueMinimumReport {
  struct Entry {
    std::string descriptor;
    std::string kind;     // "point" | "cone_minimum" | "infinite_descent"
    std::string minimum;  // vertex for the first two kinds
    bool unique = false;
  };
  std::vector<Entry> entries;
  bool all_pass = true;
};

// For every sampled limit patch that is not in infinite descent, the minimum
// must sit at a single cone vertex (or the patch is a point horofunction,
// whose minimum is that point). Group-element minima of non-point patches
// are rejected: a group element has finite valence, so the patch would
// extend past it.
UniqueMinimumReport unique_minimum_scan(const ConedOffGraph& g,
                                        const std::vector<SequenceSpec>& sequences, int horizon,
                                        int margin);

struct ConeAccumulationReport {
  AccumulationReport acc;
  std::vector<int> agreement;  // per conjugator power
  bool pass = false;
};

// Patches of (g p_n g^{-1}) . xi for unbounded peripheral conjugators p_n
// accumulate at the cone over gP. The conjugator powers p_n = p^n must leave
// every ball; finite-order p is rejected.
ConeAccumulationReport cone_accumulation(const ConedOffGraph& g, const std::string& cone,
                                         const Isometry& p, const Isometry& conjugator,
                                         const SequenceSpec& base_ray, const std::vector<int>& powers,
                                         int horizon);

}  // namespace horolab
