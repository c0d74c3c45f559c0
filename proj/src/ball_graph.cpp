#include "horolab/ball_graph.hpp"

#include <algorithm>

#include "horolab/errors.hpp"
#include "horolab/rng.hpp"

namespace horolab {

BallGraph BallGraph::build(const Space& space, int radius, std::size_t max_vertices) {
  if (radius < 0) fail(errc::precondition, "negative radius");
  BallGraph g;
  g.names_ = space.ball_vertices(radius, max_vertices);
  g.radius_ = radius;
  g.exact_all_pairs_ = space.ball_is_exact(radius);
  g.whole_space_ = space.ball_is_whole(radius);
  for (std::size_t i = 0; i < g.names_.size(); ++i) g.index_.emplace(g.names_[i], static_cast<int>(i));
  g.adj_.resize(g.names_.size());
  for (const auto& [a, b] : space.induced_edges(g.names_)) {
    int u = g.index_of(a), v = g.index_of(b);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  g.base_ = g.index_of(space.basepoint());
  g.base_norm_.reserve(g.names_.size());
  for (const auto& n : g.names_) g.base_norm_.push_back(space.base_norm(n));
  return g;
}

BallGraph BallGraph::from_parts(std::vector<std::string> names,
                                std::vector<std::pair<std::string, std::string>> edges,
                                const std::string& basepoint) {
  BallGraph g;
  g.names_ = std::move(names);
  for (std::size_t i = 0; i < g.names_.size(); ++i) {
    if (!g.index_.emplace(g.names_[i], static_cast<int>(i)).second)
      fail(errc::config_invalid, "duplicate vertex name " + g.names_[i]);
  }
  g.adj_.resize(g.names_.size());
  for (const auto& [a, b] : edges) {
    int u = g.index_of(a), v = g.index_of(b);
    if (u == v) fail(errc::config_invalid, "self-loop at " + a);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  g.base_ = g.index_of(basepoint);
  // the imported graph is the whole space: its metric is ambient
  g.exact_all_pairs_ = true;
  g.whole_space_ = true;
  std::vector<int> r;
  g.bfs_into(g.base_, r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0) fail(errc::config_invalid, "imported graph is disconnected at " + g.names_[i]);
  }
  g.base_norm_.assign(r.begin(), r.end());
  g.radius_ = *std::max_element(r.begin(), r.end());
  return g;
}

int BallGraph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(errc::unknown_vertex, "no vertex named \"" + name + "\" in ball");
  return it->second;
}

int BallGraph::check(int v) const {
  if (v < 0 || v >= size()) fail(errc::unknown_vertex, "vertex id out of range");
  return v;
}

void BallGraph::bfs_into(int src, std::vector<int>& out) const {
  check(src);
  out.assign(names_.size(), -1);
  std::vector<int> frontier{src}, next;
  out[src] = 0;
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (int v : frontier) {
      for (int w : adj_[v]) {
        if (out[w] < 0) {
          out[w] = d;
          next.push_back(w);
        }
      }
    }
    std::swap(frontier, next);
  }
}

void BallGraph::bfs_without_into(int banned, int src, std::vector<int>& out) const {
  check(src);
  check(banned);
  out.assign(names_.size(), -1);
  if (src == banned) return;
  std::vector<int> frontier{src}, next;
  out[src] = 0;
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (int v : frontier) {
      for (int w : adj_[v]) {
        if (w != banned && out[w] < 0) {
          out[w] = d;
          next.push_back(w);
        }
      }
    }
    std::swap(frontier, next);
  }
}

int BallGraph::distance(int u, int v) const {
  check(u);
  check(v);
  int d;
  {
    std::scoped_lock lock(cache_->mu);
    auto it = cache_->rows.find(u);
    if (it == cache_->rows.end()) {
      if (cache_->rows.size() >= kRowCacheCap) {
        cache_->rows.erase(cache_->order.front());
        cache_->order.pop_front();
      }
      it = cache_->rows.emplace(u, std::vector<int>()).first;
      bfs_into(u, it->second);
      cache_->order.push_back(u);
    }
    d = it->second[static_cast<std::size_t>(v)];
  }
  if (d < 0)
    fail(errc::verification_failure,
         "ball is disconnected between " + names_[u] + " and " + names_[v]);
  return d;
}

HalfInt BallGraph::gromov(int x, int y, int z) const {
  long long d = static_cast<long long>(distance(x, z)) + distance(y, z) - distance(x, y);
  return HalfInt::from_doubled(d);
}

bool BallGraph::is_guard(int w, int x, int z) const {
  check(w);
  check(x);
  check(z);
  if (w == x || w == z || x == z) fail(errc::precondition, "is_guard needs three distinct vertices");
  int d = distance(x, z);
  if (distance(x, w) + distance(w, z) != d) return false;
  // trees have unique geodesics, so betweenness already decides
  if (edge_count_ + 1 == names_.size()) return true;
  std::vector<int> cut;
  bfs_without_into(w, x, cut);
  return cut[z] < 0 || cut[z] > d;
}

HalfInt BallGraph::estimate_delta(const SamplingPolicy& policy) const {
  // four-point condition: among the three pairings of any four vertices, the
  // two largest sums differ by at most 2*delta
  std::vector<int> verts;
  if (policy.kind == SamplingPolicy::exhaustive) {
    if (names_.size() > policy.exhaustive_vertex_limit)
      fail(errc::resource_limit, "exhaustive four-point scan over " + std::to_string(names_.size()) +
                                     " vertices exceeds limit; use a sampled policy");
    verts.resize(names_.size());
    for (std::size_t i = 0; i < verts.size(); ++i) verts[i] = static_cast<int>(i);
  } else {
    std::size_t want = std::min(policy.sample_vertices, names_.size());
    Rng rng(policy.seed);
    std::vector<char> used(names_.size(), 0);
    while (verts.size() < want) {
      int v = static_cast<int>(rng.below(names_.size()));
      if (!used[v]) {
        used[v] = 1;
        verts.push_back(v);
      }
    }
    std::sort(verts.begin(), verts.end());
  }

  std::size_t n = verts.size();
  std::vector<std::vector<int>> d(n);
  std::vector<int> scratch;
  for (std::size_t i = 0; i < n; ++i) {
    bfs_into(verts[i], scratch);
    d[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) d[i][j] = scratch[verts[j]];
  }

  long long best = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e) {
          long long s1 = d[a][b] + d[c][e];
          long long s2 = d[a][c] + d[b][e];
          long long s3 = d[a][e] + d[b][c];
          long long top = std::max({s1, s2, s3});
          long long mid = s1 + s2 + s3 - top - std::min({s1, s2, s3});
          best = std::max(best, top - mid);
        }
  return HalfInt::from_doubled(best);
}

}  // namespace horolab
