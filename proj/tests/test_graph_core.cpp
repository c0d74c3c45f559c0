#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "horolab/ball_graph.hpp"
#include "horolab/coned_off.hpp"
#include "horolab/errors.hpp"
#include "horolab/graph_io.hpp"
#include "horolab/rng.hpp"
#include "horolab/space.hpp"
#include "test_oracles.hpp"

using namespace horolab;

namespace {

std::shared_ptr<WordSpace> f2() { return std::make_shared<WordSpace>(std::vector<int>{0, 0}); }

std::shared_ptr<WordSpace> z3z4() {
  return std::make_shared<WordSpace>(std::vector<int>{3, 4}, "st");
}

}  // namespace

TEST_CASE("free group ball counts") {
  auto W = f2();
  BallGraph b1 = BallGraph::build(*W, 1);
  CHECK(b1.size() == 5);
  CHECK(b1.edge_count() == 4);

  BallGraph b2 = BallGraph::build(*W, 2);
  CHECK(b2.size() == 17);
  // oracle: exhaustive enumeration of reduced words
  std::size_t total = 0;
  for (int n = 0; n <= 2; ++n) total += oracle::reduced_words(2, n).size();
  CHECK(b2.size() == static_cast<int>(total));
  for (const auto& w : oracle::reduced_words(2, 2)) CHECK(b2.has(w));
}

TEST_CASE("free product ball radius zero") {
  BallGraph b = BallGraph::build(*z3z4(), 0);
  CHECK(b.size() == 1);
  CHECK(b.edge_count() == 0);
}

TEST_CASE("distance examples and errors") {
  auto W = f2();
  BallGraph b = BallGraph::build(*W, 3);
  CHECK(b.distance(b.index_of("a"), b.index_of("b")) == 2);
  CHECK(b.distance(b.index_of("ab"), b.index_of("ab")) == 0);
  // reduce (ab)^-1 (ba) = b^-1 a^-1 b a, length 4
  CHECK(b.distance(b.index_of("ab"), b.index_of("ba")) == 4);
  CHECK_THROWS_AS((void)b.index_of("zz"), error);
  try {
    (void)b.index_of("zz");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_vertex);
  }
}

TEST_CASE("metric axioms hold exactly") {
  for (auto W : {f2(), z3z4()}) {
    BallGraph b = BallGraph::build(*W, 3);
    for (int u = 0; u < b.size(); ++u) {
      CHECK(b.distance(u, u) == 0);
      for (int v = u + 1; v < b.size(); ++v) {
        CHECK(b.distance(u, v) > 0);
        CHECK(b.distance(u, v) == b.distance(v, u));
      }
    }
    for (int u = 0; u < b.size(); ++u)
      for (int v = 0; v < b.size(); ++v)
        for (int w = 0; w < b.size(); ++w)
          CHECK(b.distance(u, w) <= b.distance(u, v) + b.distance(v, w));
  }
}

TEST_CASE("ball distances agree with ambient word metric on certified pairs") {
  for (auto W : {f2(), z3z4()}) {
    BallGraph b = BallGraph::build(*W, 4);
    for (int u = 0; u < b.size(); ++u)
      for (int v = u; v < b.size(); ++v) {
        if (!b.certified_pair(u, v)) continue;
        CHECK(b.distance(u, v) == W->distance(b.name(u), b.name(v)));
      }
  }
}

TEST_CASE("gromov product examples") {
  auto W = f2();
  BallGraph b = BallGraph::build(*W, 3);
  int e = b.basepoint();
  CHECK(b.gromov(b.index_of("a"), b.index_of("b"), e) == HalfInt::whole(0));
  CHECK(b.gromov(b.index_of("ab"), b.index_of("ab"), e) == HalfInt::whole(2));
  // (2 + 2 - 2) / 2 = 1
  CHECK(b.gromov(b.index_of("ab"), b.index_of("aB"), e) == HalfInt::whole(1));
}

TEST_CASE("gromov product bounds and tree interpretation") {
  auto W = f2();
  BallGraph b = BallGraph::build(*W, 3);
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    int x = static_cast<int>(rng.below(b.size()));
    int y = static_cast<int>(rng.below(b.size()));
    int z = static_cast<int>(rng.below(b.size()));
    HalfInt p = b.gromov(x, y, z);
    CHECK(p >= 0);
    CHECK(p <= std::min(b.distance(x, z), b.distance(y, z)));
    // brute force: distance from z to the geodesic [x, y]
    int best = 1 << 20;
    for (int w = 0; w < b.size(); ++w) {
      if (b.distance(x, w) + b.distance(w, y) != b.distance(x, y)) continue;
      best = std::min(best, b.distance(z, w));
    }
    CHECK(p == HalfInt::whole(best));
  }
}

TEST_CASE("guards in trees, cycles, and coned graphs") {
  auto W = f2();
  BallGraph tree = BallGraph::build(*W, 2);
  CHECK(tree.is_guard(tree.index_of("a"), tree.basepoint(), tree.index_of("ab")));

  // 4-cycle: two geodesics between antipodes, no guard
  BallGraph cyc = BallGraph::from_parts({"p", "q", "r", "s"},
                                        {{"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "p"}}, "p");
  CHECK_FALSE(cyc.is_guard(cyc.index_of("q"), cyc.index_of("p"), cyc.index_of("r")));

  // coned-off free product: e guards between the two peripheral generators
  ConedOffGraph coned = build_coned_off(z3z4(), 3);
  const BallGraph& cg = *coned.graph;
  CHECK(cg.is_guard(cg.basepoint(), cg.index_of("s"), cg.index_of("t")));

  // oracle: literal enumeration of all geodesics agrees on every triple of a
  // small coned ball
  ConedOffGraph small = build_coned_off(z3z4(), 2);
  const BallGraph& sg = *small.graph;
  for (int w = 0; w < sg.size(); ++w)
    for (int x = 0; x < sg.size(); ++x)
      for (int z = 0; z < sg.size(); ++z) {
        if (w == x || w == z || x == z) continue;
        CHECK(sg.is_guard(w, x, z) == oracle::guard_by_enumeration(sg, w, x, z));
      }
}

TEST_CASE("guard precondition") {
  BallGraph b = BallGraph::build(*f2(), 2);
  CHECK_THROWS_AS((void)b.is_guard(0, 0, 1), error);
}

TEST_CASE("four point delta") {
  auto W = f2();
  CHECK(BallGraph::build(*W, 3).estimate_delta() == HalfInt::whole(0));
  BallGraph single = BallGraph::from_parts({"v"}, {}, "v");
  CHECK(single.estimate_delta() == HalfInt::whole(0));

  // sampled policy is deterministic
  BallGraph big = BallGraph::build(*W, 6);
  HalfInt d1 = big.estimate_delta(SamplingPolicy::random(24, 42));
  HalfInt d2 = big.estimate_delta(SamplingPolicy::random(24, 42));
  CHECK(d1 == d2);
  CHECK(d1 == HalfInt::whole(0));

  // exhaustive scan over a large ball is refused
  CHECK_THROWS_AS((void)big.estimate_delta(SamplingPolicy::all()), error);
}

TEST_CASE("coned z3*z4 delta fixture") {
  // measured exhaustively over the radius-3 coned ball; regression pin
  ConedOffGraph coned = build_coned_off(z3z4(), 3);
  SamplingPolicy pol = SamplingPolicy::all();
  pol.exhaustive_vertex_limit = 400;
  HalfInt delta = coned.graph->estimate_delta(pol);
  CHECK(delta == HalfInt::whole(1));
}

TEST_CASE("adjacency csv round trip and exports") {
  auto W = f2();
  BallGraph b = BallGraph::build(*W, 2);
  std::stringstream csv;
  write_adjacency_csv(b, csv);
  BallGraph back = read_adjacency_csv(csv, "<e>");
  CHECK(back.size() == b.size());
  CHECK(back.edge_count() == b.edge_count());
  CHECK(back.radius() == 2);

  std::stringstream dot, gml;
  write_dot(b, dot);
  write_graphml(b, gml);
  CHECK(dot.str().find("graph") != std::string::npos);
  CHECK(dot.str().find("\"ab\"") != std::string::npos);
  CHECK(gml.str().find("<graphml") != std::string::npos);

  std::stringstream bad("x,y\n1,2\n");
  CHECK_THROWS_AS((void)read_adjacency_csv(bad, "1"), error);
}

TEST_CASE("certified pair margin") {
  auto W = z3z4();
  BallGraph b = BallGraph::build(*W, 4);
  CHECK(b.certified());
  int s = b.index_of("s");
  CHECK(b.certified_pair(b.basepoint(), s));
  // deep pair beyond the margin
  int deep = -1;
  for (int v = 0; v < b.size(); ++v)
    if (b.base_norm(v) == 4) deep = v;
  REQUIRE(deep >= 0);
  CHECK_FALSE(b.certified_pair(deep, deep));
}

TEST_CASE("ball vertex cap") {
  CHECK_THROWS_AS((void)BallGraph::build(*f2(), 8, 100), error);
  try {
    (void)BallGraph::build(*f2(), 8, 100);
  } catch (const error& e) {
    CHECK(e.code() == errc::resource_limit);
  }
}
