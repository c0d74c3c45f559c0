#pragma once

// Independent brute-force oracles used by the unit tests. These deliberately
// avoid the library's own code paths wherever an expected value is frozen
// from them.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "horolab/ball_graph.hpp"

namespace oracle {

// free reduction by repeated scanning; independent of the syllable stack in
// WordSpace
inline std::string reduce_free(std::string w) {
  bool changed = true;
  auto inv = [](char c) {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A')
                                  : static_cast<char>(c - 'A' + 'a');
  };
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] == inv(w[i])) {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// all freely reduced words of exactly length n over rank letters
inline std::vector<std::string> reduced_words(int rank, int n) {
  std::vector<std::string> alphabet;
  for (int i = 0; i < rank; ++i) {
    alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    alphabet.push_back(std::string(1, static_cast<char>('A' + i)));
  }
  std::vector<std::string> out{""};
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (const auto& c : alphabet) {
        if (!w.empty() && reduce_free(w + c).size() != w.size() + 1) continue;
        if (w.empty() || reduce_free(w + c) == w + c) next.push_back(w + c);
      }
    }
    out = std::move(next);
  }
  return out;
}

// every geodesic between two vertices by recursive descent along the
// geodesic DAG; only for small graphs
inline void geodesics_rec(const horolab::BallGraph& g, int v, int to,
                          const std::vector<int>& dist_to, std::vector<int>& path,
                          std::vector<std::vector<int>>& out) {
  if (v == to) {
    out.push_back(path);
    return;
  }
  for (int w : g.neighbors(v)) {
    if (dist_to[static_cast<std::size_t>(w)] == dist_to[static_cast<std::size_t>(v)] - 1) {
      path.push_back(w);
      geodesics_rec(g, w, to, dist_to, path, out);
      path.pop_back();
    }
  }
}

inline std::vector<std::vector<int>> all_geodesics(const horolab::BallGraph& g, int from, int to) {
  std::vector<int> dist_to;
  g.bfs_into(to, dist_to);
  std::vector<std::vector<int>> out;
  std::vector<int> path{from};
  geodesics_rec(g, from, to, dist_to, path, out);
  return out;
}

// guard by literal enumeration of all geodesics
inline bool guard_by_enumeration(const horolab::BallGraph& g, int w, int x, int z) {
  auto paths = all_geodesics(g, x, z);
  for (const auto& p : paths) {
    if (std::find(p.begin(), p.end(), w) == p.end()) return false;
  }
  return !paths.empty();
}

}  // namespace oracle
