#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "horolab/numeric.hpp"
#include "horolab/space.hpp"

namespace horolab {

// How estimate_delta walks the quadruple space. Exhaustive scans all
// unordered quadruples; the sampled policy draws a seeded vertex subset and
// is exhaustive inside it, so results are reproducible.
struct SamplingPolicy {
  enum Kind { exhaustive, sampled } kind = exhaustive;
  std::size_t sample_vertices = 48;
  std::uint64_t seed = 0;
  std::size_t exhaustive_vertex_limit = 160;

  static SamplingPolicy all() { return SamplingPolicy{}; }
  static SamplingPolicy random(std::size_t vertices, std::uint64_t seed) {
    return SamplingPolicy{sampled, vertices, seed, 160};
  }
};

// A finite ball with exact integer distances. Distances are BFS distances of
// the induced subgraph; they agree with the ambient metric on every pair
// with base_norm(u) + base_norm(v) <= radius (the certified margin), and on
// all pairs when the space reports exact balls (trees, complete custom
// graphs).
class BallGraph {
 public:
  static BallGraph build(const Space& space, int radius, std::size_t max_vertices = 2'000'000);
  // assemble from explicit parts (CSV import, projection complexes)
  static BallGraph from_parts(std::vector<std::string> names,
                              std::vector<std::pair<std::string, std::string>> edges,
                              const std::string& basepoint);

  int size() const { return static_cast<int>(names_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  int radius() const { return radius_; }
  bool certified() const { return certified_; }
  bool exact_all_pairs() const { return exact_all_pairs_; }
  // the ball carries the entire space; shell neighbor lists are complete
  bool whole_space() const { return whole_space_; }
  int basepoint() const { return base_; }

  bool has(const std::string& name) const { return index_.count(name) > 0; }
  int index_of(const std::string& name) const;  // fail(unknown_vertex)
  const std::string& name(int v) const { return names_[check(v)]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
  int base_norm(int v) const { return base_norm_[check(v)]; }
  bool certified_pair(int u, int v) const {
    return exact_all_pairs_ || base_norm(u) + base_norm(v) <= radius_;
  }

  int distance(int u, int v) const;
  // BFS distances from src into out (resized); -1 marks unreachable
  void bfs_into(int src, std::vector<int>& out) const;
  // same, with one vertex removed from the graph
  void bfs_without_into(int banned, int src, std::vector<int>& out) const;

  HalfInt gromov(int x, int y, int z) const;
  // true when every geodesic from x to z passes through w, decided by the
  // deletion test: remove w, re-run BFS, compare
  bool is_guard(int w, int x, int z) const;
  HalfInt estimate_delta(const SamplingPolicy& policy = SamplingPolicy::all()) const;

 private:
  BallGraph() = default;
  int check(int v) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> base_norm_;
  std::size_t edge_count_ = 0;
  int base_ = 0;
  int radius_ = 0;
  bool certified_ = true;
  bool exact_all_pairs_ = false;
  bool whole_space_ = false;

  // Lazy distance rows behind a mutex, bounded so that sweeping every source
  // of a large ball does not hold the whole matrix. Shared between copies:
  // the graph data is immutable, so cached rows never go stale.
  struct RowCache {
    std::mutex mu;
    std::unordered_map<int, std::vector<int>> rows;
    std::deque<int> order;
  };
  std::shared_ptr<RowCache> cache_ = std::make_shared<RowCache>();
  static constexpr std::size_t kRowCacheCap = 1024;
};

}  // namespace horolab
