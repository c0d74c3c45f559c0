#pragma once

#include <string>
#include <vector>

#include "horolab/actions.hpp"
#include "horolab/horofunction.hpp"
#include "horolab/space.hpp"

namespace horolab {

// A quasi-geodesic ray prefix standing in for a boundary point; the last
// prefix vertex is its representative in Gromov products.
struct Ray {
  std::string descriptor;
  std::vector<std::string> prefix;

  const std::string& rep() const { return prefix.back(); }
};

Ray make_ray(const Space& X, const std::string& template_expr, int depth);

// Boundary points at resolution T: basic neighborhoods are Gromov-product
// superlevel sets at the basepoint, and distinct rays must be pairwise
// separated below T.
struct BoundarySample {
  std::vector<Ray> rays;
  HalfInt resolution;
};

BoundarySample make_sample(const Space& X, const std::vector<std::string>& templates, int depth,
                           HalfInt T);

struct NorthSouthReport {
  int n0 = -1;
  bool pass = false;
  std::vector<std::string> escaping;
  std::vector<HalfInt> min_product_per_n;  // index n, for plotting n0 vs T
};

// Least n0 such that g^n pushes every sampled ray into the resolution-T
// neighborhood of g^+ for all n in [n0, n_max]. Rays inside the repeller
// neighborhood are rejected up front.
NorthSouthReport north_south_probe(const Space& X, const Isometry& g, const BoundarySample& sample,
                                   int n_max, int rep_depth = 16);

struct ProximalitySearch {
  std::vector<Isometry> base_loxodromics;
  int conjugator_radius = 2;
  int max_power = 8;
  int rep_depth = 12;
};

struct ProximalityResult {
  Isometry g;
  Isometry base, conjugator;
  int power = 0;
};

// An element g with g F inside the target neighborhood, searched over powers
// of conjugated loxodromics in breadth-first order.
ProximalityResult extreme_proximality_probe(const Space& X, const BoundarySample& F,
                                            const Ray& target, HalfInt T,
                                            const ProximalitySearch& search);

struct FixedPairResult {
  Isometry g, h, k;
  int n = 0;
  HalfInt plus_product, minus_product;
};

// A loxodromic g = h^n k^n whose attractor lands near target_plus and whose
// repeller lands near target_minus at resolution T.
FixedPairResult fixed_pair_density_probe(const Space& X, const Ray& target_plus,
                                         const Ray& target_minus, HalfInt T,
                                         const ProximalitySearch& search);

struct MyrbergSegment {
  std::size_t start = 0, end = 0;  // path indices of the fellow-travel block
  int diameter = 0;
  std::string axis_label;
};

struct MyrbergRay {
  std::vector<std::string> path;
  std::vector<MyrbergSegment> segments;
  bool strictly_increasing = false;

  Ray as_ray() const;
};

// The concatenated prefix h_1 f_1^{2 n_1} h_2 f_2^{2 n_2} ... with each f_i
// picked by the extension choice. Each block must fellow-travel a translated
// axis; segment diameters are measured inside the nbhd_radius neighborhood.
MyrbergRay myrberg_ray(const Space& X, const std::vector<int>& omega,
                       const std::vector<Isometry>& L, const std::vector<Isometry>& F,
                       int nbhd_radius = 0);

struct SemigroupSearch {
  int search_radius = 3;
  int tau_cap = 2;
  int orbit_range = 4;
  int axis_range = 8;
  std::size_t max_products = 1u << 22;
};

struct FreeSemigroupCertificate {
  Isometry f;
  Isometry f_seed;
  int tau = 0;
  long long products_checked = 0;
  std::string relation_witness;  // empty on success
};

// Finds f with bounded projections for A, its inverses, and the difference
// set, then proves by exhaustion that all products of at most length_check
// factors from A f are pairwise distinct.
FreeSemigroupCertificate free_semigroup_certificate(const Space& X,
                                                    const std::vector<Isometry>& A,
                                                    int length_check,
                                                    const SemigroupSearch& search = {});

struct PnaiCertificate {
  long long words_checked = 0;
  int order_a = 0, order_f = 0;  // 0 marks no finite order within the horizon
};

// No nontrivial alternating word in a and f of weight at most length_check
// evaluates to the identity; fail(relation_found) with the witness word
// otherwise.
PnaiCertificate pnai_certificate(const Space& X, const Isometry& a, const Isometry& f,
                                 int length_check);

// max over n != 0 in the range of diam pi_{axis}(a^n axis); the translated
// fixed points must avoid the axis ends at the given resolution
int bounded_axis_probe(const Space& X, const Isometry& a, const QuasiAxis& axis, int n_lo, int n_hi,
                       HalfInt resolution);

struct TowerOptions {
  int search_radius = 2;
  int tau_cap = 2;
  int axis_range = 8;
  int independence_tau = 2;
  std::size_t max_ball = 500'000;
  ExtensionOptions ext{};
};

struct TowerCertificate {
  std::vector<std::string> D_words, F_words;
  std::string f0;
  int check_radius = 0;
  long long elements_checked = 0;
  std::vector<long long> class_sizes;  // membership counts of A_1..A_3 in the ball
  bool disjoint = false;
  bool covering = false;
};

// A_i = { f0 f_i b : the extension choice assigns f_i to b } and
// g_i = f_i^{-1} f0^{-1}. Checks exactly on the ball: translates a A_i are
// pairwise disjoint for a in D, and every element lies in some g_i A_i.
TowerCertificate paradoxical_towers(const Space& X, const std::vector<Isometry>& D,
                                    const std::vector<Isometry>& F, int check_radius,
                                    const TowerOptions& opts = {});

struct FaithfulResult {
  Ray ray;
  std::vector<int> differences;  // per element of F, finite difference moved
};

// A sampled ray moved by every element of F: each translated patch differs
// from the original at the probe radius.
FaithfulResult strongly_faithful_probe(const Space& X, const std::vector<Isometry>& F,
                                       const BoundarySample& sample, int probe_radius = 3,
                                       int horizon = 12);

struct TamePair {
  std::string g, f;
  std::string verdict;  // "equal" | "disjoint" | "intermediate"
};

struct TamednessReport {
  int pairs = 0;
  int equal = 0;
  int disjoint = 0;
  std::vector<TamePair> counterexamples;
  bool pass = true;
  int sampled = 0;
};

// Samples loxodromics in the normal closure of {b, c} (conjugates and short
// products of conjugates) and classifies every pair: fixed-point sets equal
// or disjoint at the resolution; anything between is a counterexample.
TamednessReport tamedness_probe(const Space& X, const Isometry& b, const Isometry& c,
                                int conjugator_radius, std::size_t sample_cap, HalfInt resolution,
                                int rep_depth = 12);

}  // namespace horolab
