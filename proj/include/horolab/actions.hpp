#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "horolab/ball_graph.hpp"
#include "horolab/numeric.hpp"
#include "horolab/space.hpp"

namespace horolab {

// Finite data cannot separate parabolic from slowly translating isometries,
// hence the third state.
enum class IsoType { loxodromic, elliptic, undetermined };

const char* iso_type_name(IsoType t);

struct Classification {
  IsoType type = IsoType::undetermined;
  Rational stable_length = Rational(0);
  int order = 0;  // 0 when no finite order was detected within the horizon
  int horizon = 0;
};

// d(o, g^N o)/N plus the orbit-cycle scan. Loxodromic iff the ratio is at
// least the threshold (default 1/2); elliptic iff the orbit of o cycles
// within the horizon.
Classification classify_isometry(const Space& X, const Isometry& g, int N,
                                 Rational threshold = Rational(1, 2));

Rational stable_translation_length(const Space& X, const Isometry& g, int N);

// same, but every orbit point g^k o for 0 <= k <= N must lie in the ball
Rational stable_translation_length(const Space& X, const BallGraph& within, const Isometry& g,
                                   int N);

struct QuasiAxis {
  Isometry owner;
  // ordered path realizing the union of g^i [o, g o] over the index range
  std::vector<std::string> path;
  // the same vertices, sorted and deduplicated
  std::vector<std::string> points;
  Rational constant = Rational(1);  // least half-integer c passing both bounds
  int lo = 0, hi = 0;
};

// Union of translated base segments g^i [o, go] for i in [lo, hi). Requires a
// loxodromic owner; measures the best quasi-geodesic constant along the path.
QuasiAxis quasi_axis(const Space& X, const Isometry& g, int lo, int hi,
                     const BallGraph* within = nullptr);

// axis for custom graphs where the path is supplied explicitly
QuasiAxis explicit_axis(const Space& X, std::vector<std::string> path);

// nearest-point projection of each source vertex onto the target set; the
// union of the argmin sets, sorted and deduplicated
std::vector<std::string> project_to_set(const Space& X, const std::vector<std::string>& target,
                                        const std::vector<std::string>& source);

int set_diameter(const Space& X, const std::vector<std::string>& set);

struct ProjectionPair {
  int diam_f_onto_g = 0;
  int diam_g_onto_f = 0;
};

ProjectionPair mutual_axis_projection(const Space& X, const QuasiAxis& f, const QuasiAxis& g);

// both nearest-point projections between the two axes have diameter <= tau
bool weakly_independent(const Space& X, const Isometry& f, const Isometry& g, int tau,
                        int axis_range = 6);

struct ExtensionOptions {
  int axis_range = 6;
  // additive quasi-geodesic defect allowed along the concatenated path
  int max_defect = 4;
};

struct ExtensionChoice {
  Isometry f;
  int score = 0;          // larger of the two corner projections
  int path_defect = 0;    // max over index pairs of |s - t| - d(path_s, path_t)
  Rational constant = Rational(1);
  std::vector<std::string> path;  // [o, go] g[o, fo] gf[o, ho]
};

// Chooses f in F so that the word g f h labels a quasi-geodesic: candidates
// are ordered by (corner projection score, shortlex), and the first whose
// concatenated path stays within the additive defect bound wins.
ExtensionChoice extension_choice(const Space& X, const std::vector<Isometry>& F, const Isometry& g,
                                 const Isometry& h, const ExtensionOptions& opts = {});

struct ComposeReport {
  Isometry product;  // h^n k^n
  Classification cls;
  // Gromov products <fix+(h^j k^j), h^+> and <fix-(h^j k^j), k^-> at o for
  // j = 1..n
  std::vector<HalfInt> attractor_products;
  std::vector<HalfInt> repeller_products;
  bool monotone = false;
};

ComposeReport compose_loxodromic(const Space& X, const Isometry& h, const Isometry& k, int n,
                                 int rep_power = 4);

struct AcylindricityOptions {
  // pairs to test; when empty, `sampled_pairs` pairs with d > L are drawn
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t sampled_pairs = 32;
  std::uint64_t seed = 0;
  std::size_t max_work = 200'000'000;
};

struct AcylindricityReport {
  int max_count = 0;
  std::pair<std::string, std::string> argmax;
  std::vector<int> counts;
  int candidates = 0;
};

// max over tested pairs x, y with d(x, y) > L of the number of ball(M)
// elements moving both x and y by at most r
AcylindricityReport acylindricity_probe(const Space& X, int r, int L, int M,
                                        const AcylindricityOptions& opts = {});

struct KernelOptions {
  int probe_radius = 3;
  int horizon = 10;
  int tolerance = 0;
  std::size_t max_candidates = 100'000;
};

// elements of the radius-`candidate_radius` ball fixing every sampled ray up
// to the finite-difference tolerance; rays are word templates in one
// parameter
std::vector<Isometry> kernel_sample(const Space& X, const std::vector<std::string>& ray_templates,
                                    int candidate_radius, const KernelOptions& opts = {});

}  // namespace horolab
