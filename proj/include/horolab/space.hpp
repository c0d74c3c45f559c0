#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "horolab/numeric.hpp"
#include "horolab/words.hpp"

namespace horolab {

// An isometry of a marked space, identified by its canonical word in the
// acting group. The empty word is the identity.
class Isometry {
 public:
  Isometry() = default;
  explicit Isometry(std::string canonical) : word_(std::move(canonical)) {}

  const std::string& word() const { return word_; }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const Isometry& a, const Isometry& b) { return a.word_ == b.word_; }
  friend bool operator<(const Isometry& a, const Isometry& b) {
    return words::shortlex_less(a.word_, b.word_);
  }

 private:
  std::string word_;
};

// A geodesic graph with named vertices, a basepoint, an exact ambient metric,
// and a group acting on it by isometries. Everything downstream (balls,
// horofunction patches, axis families, probes) is built against this
// interface.
class Space {
 public:
  virtual ~Space() = default;

  virtual std::string describe() const = 0;

  // group structure
  virtual Isometry iso(std::string_view word_expr) const = 0;
  virtual Isometry compose(const Isometry& g, const Isometry& h) const = 0;
  virtual Isometry inverse(const Isometry& g) const = 0;
  virtual std::vector<char> generator_letters() const = 0;

  Isometry power(const Isometry& g, long long n) const;

  // the space
  virtual std::string basepoint() const = 0;
  virtual bool has_vertex(const std::string& name) const = 0;
  virtual std::vector<std::string> neighbors(const std::string& name) const = 0;
  // exact distance in the ambient space, no truncation involved
  virtual int distance(const std::string& u, const std::string& v) const = 0;
  // a canonical geodesic from u to v, endpoints included
  virtual std::vector<std::string> geodesic(const std::string& u, const std::string& v) const = 0;
  virtual std::string apply(const Isometry& g, const std::string& vertex) const = 0;

  // norm used for the certified-pair margin of balls. For plain Cayley
  // graphs this is d(o, v); coned-off spaces use the norm of the underlying
  // Cayley graph instead.
  virtual int base_norm(const std::string& vertex) const { return distance(basepoint(), vertex); }

  // vertex set of the radius-r ball around the basepoint, by the space's own
  // ball policy
  virtual std::vector<std::string> ball_vertices(int radius, std::size_t max_vertices) const;

  // edges of the subgraph induced on the given vertex set
  virtual std::vector<std::pair<std::string, std::string>> induced_edges(
      const std::vector<std::string>& verts) const;

  // true when the induced metric on any radius-r ball already equals the
  // ambient metric on all pairs (trees and complete custom graphs)
  virtual bool ball_is_exact(int radius) const { (void)radius; return false; }

  // true when the radius-r ball carries every vertex of the space, so shell
  // vertices still have complete neighbor lists
  virtual bool ball_is_whole(int radius) const { (void)radius; return false; }

  // group elements available at the given search radius, canonical words in
  // shortlex order. For Cayley-type spaces these are the ball vertices; other
  // spaces override.
  virtual std::vector<Isometry> group_ball(int radius, std::size_t max_elements = 2'000'000) const;

  int displacement(const Isometry& g, const std::string& v) const {
    return distance(v, apply(g, v));
  }

  std::string orbit_point(const Isometry& g, long long n) const {
    return apply(power(g, n), basepoint());
  }
};

HalfInt gromov_product(const Space& X, const std::string& x, const std::string& y,
                       const std::string& base);

// Free product of cyclic groups; factor order 0 means an infinite cyclic
// factor. All factors of order 0 gives a free group. Vertices are canonical
// normal forms: syllables rendered with positive exponents for finite
// factors and signed letters for infinite ones.
class WordSpace final : public Space {
 public:
  WordSpace(std::vector<int> orders, std::string letters = "");

  const std::vector<int>& orders() const { return orders_; }
  const std::string& letters() const { return letters_; }
  bool is_free() const;
  // no embedded cycles: all factor orders are 0 or 2
  bool is_tree() const;
  int factor_of(char c) const;  // index, or fail(unknown_vertex)

  std::string normalize(std::string_view raw_letters) const;
  std::string invert_word(std::string_view canonical) const;
  int word_length(std::string_view canonical) const;
  // letters of a canonical geodesic from the identity to the element
  std::string geodesic_letters(std::string_view canonical) const;

  struct Syllable {
    int factor;
    long long exp;
  };
  std::vector<Syllable> syllables(std::string_view letters_string) const;
  std::string render(const std::vector<Syllable>& sylls) const;

  // Space interface
  std::string describe() const override;
  Isometry iso(std::string_view word_expr) const override;
  Isometry compose(const Isometry& g, const Isometry& h) const override;
  Isometry inverse(const Isometry& g) const override;
  std::vector<char> generator_letters() const override;
  std::string basepoint() const override { return std::string(); }
  bool has_vertex(const std::string& name) const override;
  std::vector<std::string> neighbors(const std::string& name) const override;
  int distance(const std::string& u, const std::string& v) const override;
  std::vector<std::string> geodesic(const std::string& u, const std::string& v) const override;
  std::string apply(const Isometry& g, const std::string& vertex) const override;
  int base_norm(const std::string& vertex) const override { return word_length(vertex); }
  bool ball_is_exact(int) const override { return is_tree(); }

 private:
  std::vector<int> orders_;
  std::string letters_;
  int factor_index_[26];
};

// A finite graph with an explicit automorphism group given by generator
// permutations. Isometries are canonicalized by enumerating the generated
// permutation group; the canonical word of an element is the shortlex-least
// word reaching it.
class CustomSpace final : public Space {
 public:
  CustomSpace(std::vector<std::string> vertex_names,
              std::vector<std::pair<std::string, std::string>> edges, std::string basepoint,
              std::map<char, std::vector<std::string>> automorphisms = {},
              std::size_t max_group = 1 << 20);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }

  std::string describe() const override;
  Isometry iso(std::string_view word_expr) const override;
  Isometry compose(const Isometry& g, const Isometry& h) const override;
  Isometry inverse(const Isometry& g) const override;
  std::vector<char> generator_letters() const override;
  std::string basepoint() const override { return names_[base_]; }
  bool has_vertex(const std::string& name) const override;
  std::vector<std::string> neighbors(const std::string& name) const override;
  int distance(const std::string& u, const std::string& v) const override;
  std::vector<std::string> geodesic(const std::string& u, const std::string& v) const override;
  std::string apply(const Isometry& g, const std::string& vertex) const override;
  bool ball_is_exact(int radius) const override;
  bool ball_is_whole(int radius) const override { return ball_is_exact(radius); }
  std::vector<Isometry> group_ball(int radius, std::size_t max_elements) const override;

  // every element of the (finite) automorphism group, canonical words
  std::vector<Isometry> group_elements() const;

 private:
  using Perm = std::vector<int>;

  int index(const std::string& name) const;
  const Perm& perm_of(const Isometry& g) const;
  const std::string& canonical_of(const Perm& p) const;
  void enumerate_group(std::size_t max_group);
  const std::vector<int>& row(int src) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  int base_ = 0;
  int eccentricity_ = 0;

  std::vector<char> gen_letters_;
  std::map<char, Perm> gen_perms_;
  std::map<std::string, Perm> word_to_perm_;
  std::map<Perm, std::string> perm_to_word_;
  mutable std::vector<std::vector<int>> rows_;
};

}  // namespace horolab
