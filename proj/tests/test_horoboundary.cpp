#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "horolab/errors.hpp"
#include "horolab/graph_io.hpp"
#include "horolab/horofunction.hpp"
#include "horolab/rng.hpp"

using namespace horolab;

namespace {

std::shared_ptr<WordSpace> f2() { return std::make_shared<WordSpace>(std::vector<int>{0, 0}); }

std::shared_ptr<const BallGraph> ball_of(const Space& X, int r) {
  return std::make_shared<const BallGraph>(BallGraph::build(X, r));
}

}  // namespace

TEST_CASE("point horofunctions") {
  auto W = f2();
  auto ball = ball_of(*W, 4);
  HorofunctionPatch ba = HorofunctionPatch::of_point(ball, *W, "a");
  CHECK(ba.value_at("") == 0);
  CHECK(ba.value_at("a") == -1);
  HorofunctionPatch ba3 = HorofunctionPatch::of_point(ball, *W, "aaa");
  CHECK(ba3.value_at("b") == 1);  // d(b, a^3) - d(e, a^3) = 4 - 3

  // unknown point
  CHECK_THROWS_AS((void)HorofunctionPatch::of_point(ball, *W, "aaaaa"), error);

  // dual route: ambient word arithmetic against ball BFS rows
  std::vector<int> row;
  ball->bfs_into(ball->index_of("aaa"), row);
  for (int v = 0; v < ball->size(); ++v)
    CHECK(ba3.value(v) == row[static_cast<std::size_t>(v)] - 3);
}

TEST_CASE("limits along sequences") {
  auto W = f2();
  auto ball = ball_of(*W, 4);
  LimitPatch ra = limit_along_sequence(ball, *W, word_sequence(*W, "a^n"), 12);
  for (int k = 0; k <= 4; ++k) {
    CHECK(ra.patch.value_at(std::string(static_cast<std::size_t>(k), 'a')) == -k);
    CHECK(ra.patch.value_at(std::string(static_cast<std::size_t>(k), 'A')) == k);
  }
  for (int v = 0; v < ball->size(); ++v)
    CHECK(ra.cert.stabilization_index[static_cast<std::size_t>(v)] <= ball->base_norm(v) + 1);

  // a constant sequence reproduces the point horofunction
  LimitPatch cy = limit_along_sequence(ball, *W, word_sequence(*W, "ab a^0n"), 8);
  HorofunctionPatch by = HorofunctionPatch::of_point(ball, *W, "ab");
  CHECK(finite_difference(cy.patch, by).lower_bound == 0);

  // (ab)^n passes through a
  LimitPatch rab = limit_along_sequence(ball, *W, word_sequence(*W, "(ab)^n"), 12);
  CHECK(rab.patch.value_at("a") == -1);

  // horizon too small to stabilize deep vertices
  try {
    (void)limit_along_sequence(ball, *W, word_sequence(*W, "a^n"), 4);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::non_convergence);
  }
}

TEST_CASE("finite difference bounds") {
  auto W = f2();
  auto ball = ball_of(*W, 3);
  HorofunctionPatch pa = HorofunctionPatch::of_point(ball, *W, "a");
  HorofunctionPatch pa2 = HorofunctionPatch::of_point(ball, *W, "aa");
  CHECK(finite_difference(pa, pa).lower_bound == 0);
  FiniteDifferenceBound fd = finite_difference(pa, pa2);
  CHECK(fd.lower_bound == 2);
  CHECK(fd.witness == "aa");  // b_a(a^2) = 0 vs b_{a^2}(a^2) = -2

  for (int R : {2, 3}) {
    auto b = ball_of(*W, R);
    LimitPatch ra = limit_along_sequence(b, *W, word_sequence(*W, "a^n"), 10);
    LimitPatch rb = limit_along_sequence(b, *W, word_sequence(*W, "b^n"), 10);
    CHECK(finite_difference(ra.patch, rb.patch).lower_bound == 2 * R);
  }

  auto other = ball_of(*W, 2);
  HorofunctionPatch q = HorofunctionPatch::of_point(other, *W, "a");
  CHECK_THROWS_AS((void)finite_difference(pa, q), error);
}

TEST_CASE("bounded-distance sequences share their class at every radius") {
  auto W = f2();
  auto ball = ball_of(*W, 5);
  LimitPatch xa = limit_along_sequence(ball, *W, word_sequence(*W, "a^n"), 14);
  LimitPatch xb = limit_along_sequence(ball, *W, word_sequence(*W, "a^n b"), 14);
  // sup_n d(x_n, y_n) = 1, so the limits differ by at most 2
  CHECK(finite_difference(xa.patch, xb.patch).lower_bound <= 2);
}

TEST_CASE("local minimum map") {
  auto W = f2();
  auto ball = ball_of(*W, 6);
  for (const std::string x : {"", "a", "ab", "aabA"}) {
    MinimumReport mr = local_minimum_map(HorofunctionPatch::of_point(ball, *W, x), 2);
    CHECK(mr.kind == MinimumReport::finite_minimum);
    CHECK(mr.min_set == std::vector<std::string>{x});
  }

  LimitPatch ra = limit_along_sequence(ball, *W, word_sequence(*W, "a^n"), 14);
  MinimumReport mr = local_minimum_map(ra.patch, 2);
  CHECK(mr.kind == MinimumReport::infinite_descent);
  REQUIRE(!mr.descent_witness.empty());
  CHECK(mr.descent_witness.front() == "");
  CHECK(mr.descent_witness.back() == "aaaa");  // value -4 = -(R - m)

  // inconclusive: a hand-built flat patch on a path graph
  BallGraph path = BallGraph::from_parts({"o", "v1", "v2", "v3"},
                                         {{"o", "v1"}, {"v1", "v2"}, {"v2", "v3"}}, "o");
  auto pp = std::make_shared<const BallGraph>(path);
  HorofunctionPatch flat = HorofunctionPatch::from_values(pp, {0, -1, -1, -1},
                                                          Provenance{Provenance::imported, "flat"});
  MinimumReport flat_mr = local_minimum_map(flat, 1);
  CHECK(flat_mr.kind == MinimumReport::inconclusive);
}

TEST_CASE("patch invariants are enforced") {
  auto W = f2();
  auto ball = ball_of(*W, 2);
  std::vector<int> vals(static_cast<std::size_t>(ball->size()), 0);
  vals[static_cast<std::size_t>(ball->basepoint())] = 1;  // does not vanish at o
  CHECK_THROWS_AS(
      (void)HorofunctionPatch::from_values(ball, vals, Provenance{Provenance::imported, "bad"}),
      error);

  std::vector<int> jump(static_cast<std::size_t>(ball->size()), 0);
  jump[static_cast<std::size_t>(ball->index_of("a"))] = 2;  // Lipschitz violation
  CHECK_THROWS_AS(
      (void)HorofunctionPatch::from_values(ball, jump, Provenance{Provenance::imported, "bad"}),
      error);
}

TEST_CASE("equivariance identity on sampled triples") {
  auto W = f2();
  auto ball = ball_of(*W, 5);
  Rng rng(23);
  const char letters[] = {'a', 'A', 'b', 'B'};
  SequenceSpec ray = word_sequence(*W, "(ab)^n");
  LimitPatch base = limit_along_sequence(ball, *W, ray, 12);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    std::string gw;
    for (int k = 0; k < 2; ++k) gw.push_back(letters[rng.below(4)]);
    Isometry g = W->iso(gw);
    LimitPatch moved = limit_along_sequence(ball, *W, translated_sequence(*W, ray, g), 12);
    std::string gi_o = W->apply(W->inverse(g), W->basepoint());
    if (!ball->has(gi_o)) continue;
    for (int rep = 0; rep < 10; ++rep) {
      int y = static_cast<int>(rng.below(ball->size()));
      std::string gi_y = W->apply(W->inverse(g), ball->name(y));
      if (!ball->has(gi_y)) continue;
      CHECK(moved.patch.value(y) == base.patch.value_at(gi_y) - base.patch.value_at(gi_o));
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("basepoint change shifts by an additive constant") {
  auto W = f2();
  auto ball = ball_of(*W, 4);
  std::string tip(12, 'a');  // deep sequence point, stabilized on the ball
  for (const std::string o2 : {"b", "ab", "BA"}) {
    // b^o_y - b^{o'}_y = d(o', y) - d(o, y) = b^o_y(o'), constant in x
    int shift = W->distance(o2, tip) - W->distance("", tip);
    for (int v = 0; v < ball->size(); ++v) {
      int b_o = W->distance(ball->name(v), tip) - W->distance("", tip);
      int b_o2 = W->distance(ball->name(v), tip) - W->distance(o2, tip);
      CHECK(b_o - b_o2 == shift);
    }
  }
}

TEST_CASE("dead ends") {
  auto W = f2();
  auto ball = ball_of(*W, 3);
  DeadEndReport interior = is_dead_end(*ball, ball->basepoint(), ball->index_of("a"));
  CHECK_FALSE(interior.dead_end);

  // shell vertices are uncertified in a Cayley ball
  int shell = -1;
  for (int v = 0; v < ball->size(); ++v)
    if (ball->base_norm(v) == 3) shell = v;
  REQUIRE(shell >= 0);
  CHECK_THROWS_AS((void)is_dead_end(*ball, ball->basepoint(), shell), error);

  // a path graph: the far end is a dead end and isolated
  BallGraph path = BallGraph::from_parts({"o", "v", "x"}, {{"o", "v"}, {"v", "x"}}, "o");
  DeadEndReport de = is_dead_end(path, path.index_of("o"), path.index_of("x"));
  CHECK(de.dead_end);
  CHECK(de.isolated);

  // truncated tree ball as a custom graph: every leaf is a dead end
  std::stringstream csv;
  write_adjacency_csv(*ball, csv);
  BallGraph trunc = read_adjacency_csv(csv, "<e>");
  int leaves = 0;
  for (int v = 0; v < trunc.size(); ++v) {
    if (trunc.base_norm(v) != 3) continue;
    DeadEndReport leaf = is_dead_end(trunc, trunc.basepoint(), v);
    CHECK(leaf.dead_end);
    CHECK(leaf.isolated);
    ++leaves;
  }
  CHECK(leaves == 4 * 3 * 3);
}

TEST_CASE("minimal class probe") {
  auto W = f2();
  // the guard ball must contain the sequence tails: a^{2m} reaches a^10
  BallGraph guard = BallGraph::build(*W, 10);
  auto patch = ball_of(*W, 2);
  MinimalClassOptions opts;
  opts.z_radius = 2;

  MinimalClassReport same = minimal_class_probe(*W, guard, patch, word_sequence(*W, "a^n"),
                                                word_sequence(*W, "a^2n"), 5, opts);
  CHECK(same.hypothesis_holds);
  CHECK(same.patches_equal);

  MinimalClassReport diff = minimal_class_probe(*W, guard, patch, word_sequence(*W, "a^n"),
                                                word_sequence(*W, "b^n"), 5, opts);
  CHECK_FALSE(diff.hypothesis_holds);
  CHECK(diff.counterexample_z == "");  // fails already at the basepoint

  MinimalClassReport self = minimal_class_probe(*W, guard, patch, word_sequence(*W, "a^n"),
                                                word_sequence(*W, "a^n"), 5, opts);
  CHECK(self.hypothesis_holds);
  CHECK(self.patches_equal);
}

TEST_CASE("accumulation probe on point patches") {
  auto W = f2();
  auto ball = ball_of(*W, 3);
  int v = ball->index_of("a");
  std::vector<HorofunctionPatch> good{HorofunctionPatch::of_point(ball, *W, "a")};
  AccumulationReport ok = accumulation_probe(*W, ball, v, good);
  CHECK(ok.accumulates);

  std::vector<HorofunctionPatch> bad{HorofunctionPatch::of_point(ball, *W, "b")};
  AccumulationReport no = accumulation_probe(*W, ball, v, bad);
  CHECK_FALSE(no.accumulates);
}

TEST_CASE("axis projections of boundary patches") {
  auto W = f2();
  auto ball = ball_of(*W, 6);
  QuasiAxis axis = quasi_axis(*W, W->iso("a"), -5, 6);

  LimitPatch rb = limit_along_sequence(ball, *W, word_sequence(*W, "b^n"), 14);
  AxisProjectionReport pr = axis_projection_of_patch(*W, rb, axis);
  CHECK(pr.projection == std::vector<std::string>{""});
  CHECK(pr.diameter == 0);
  CHECK(pr.coarse_continuity_ok);

  LimitPatch conj = limit_along_sequence(ball, *W, word_sequence(*W, "(bab^-1)^n"), 14);
  AxisProjectionReport pc = axis_projection_of_patch(*W, conj, axis);
  CHECK(pc.projection == std::vector<std::string>{""});

  // fixed-class rejection
  LimitPatch ra = limit_along_sequence(ball, *W, word_sequence(*W, "a^n"), 14);
  try {
    (void)axis_projection_of_patch(*W, ra, axis);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::fixed_class);
  }
}

TEST_CASE("patch csv export") {
  auto W = f2();
  auto ball = ball_of(*W, 2);
  HorofunctionPatch p = HorofunctionPatch::of_point(ball, *W, "a");
  std::stringstream out;
  write_patch_csv(p, out);
  CHECK(out.str().rfind("vertex,value\n", 0) == 0);
  CHECK(out.str().find("<e>,0") != std::string::npos);
  CHECK(out.str().find("a,-1") != std::string::npos);
}
