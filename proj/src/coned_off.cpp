#include "horolab/coned_off.hpp"

#include <algorithm>
#include <set>

#include "horolab/errors.hpp"

namespace horolab {

namespace {

std::vector<WordSpace::Syllable> strip_trailing(const WordSpace& W,
                                                std::vector<WordSpace::Syllable> s, int factor) {
  if (!s.empty() && s.back().factor == factor) s.pop_back();
  (void)W;
  return s;
}

std::vector<WordSpace::Syllable> strip_leading(const WordSpace& W,
                                               std::vector<WordSpace::Syllable> s, int factor) {
  if (!s.empty() && s.front().factor == factor) s.erase(s.begin());
  (void)W;
  return s;
}

}  // namespace

ConedOffSpace::ConedOffSpace(std::shared_ptr<const WordSpace> base) : base_(std::move(base)) {
  if (!base_) fail(errc::precondition, "coned-off space needs a base free product");
  if (base_->orders().size() < 2)
    fail(errc::config_invalid, "coning a one-factor group yields a bounded space");
}

bool ConedOffSpace::is_cone_name(const std::string& name) {
  return name.size() >= 5 && name.rfind("c(", 0) == 0 && name.back() == ')';
}

std::string ConedOffSpace::coset_rep(const std::string& element, char letter) const {
  int f = base_->factor_of(letter);
  return base_->render(strip_trailing(*base_, base_->syllables(base_->normalize(element)), f));
}

std::string ConedOffSpace::cone_name(const std::string& rep, char letter) const {
  return "c(" + rep + "<" + std::string(1, letter) + ">)";
}

std::string ConedOffSpace::cone_of(const std::string& element, char letter) const {
  return cone_name(coset_rep(element, letter), letter);
}

std::pair<std::string, char> ConedOffSpace::cone_parts(const std::string& cone) const {
  if (!is_cone_name(cone)) fail(errc::unknown_coset, "not a cone vertex: " + cone);
  std::string inner = cone.substr(2, cone.size() - 3);
  auto lt = inner.find('<');
  if (lt == std::string::npos || inner.size() < lt + 3 || inner[inner.size() - 1] != '>')
    fail(errc::unknown_coset, "malformed cone vertex: " + cone);
  std::string rep = inner.substr(0, lt);
  char letter = inner[lt + 1];
  base_->factor_of(letter);
  if (coset_rep(rep, letter) != rep)
    fail(errc::unknown_coset, "coset representative not canonical in " + cone);
  return {rep, letter};
}

int ConedOffSpace::relative_norm(std::string_view canonical) const {
  int total = 0;
  for (const auto& s : base_->syllables(canonical)) {
    int m = base_->orders()[static_cast<std::size_t>(s.factor)];
    long long len = m == 0 ? (s.exp < 0 ? -s.exp : s.exp) : std::min(s.exp, m - s.exp);
    total += static_cast<int>(std::min<long long>(len, 2));
  }
  return total;
}

std::string ConedOffSpace::describe() const { return "coned(" + base_->describe() + ")"; }

bool ConedOffSpace::has_vertex(const std::string& name) const {
  if (!is_cone_name(name)) return base_->has_vertex(name);
  try {
    cone_parts(name);
    return true;
  } catch (const error&) {
    return false;
  }
}

std::vector<std::string> ConedOffSpace::neighbors(const std::string& name) const {
  if (!is_cone_name(name)) {
    std::vector<std::string> out = base_->neighbors(name);
    for (char c : base_->letters()) out.push_back(cone_of(name, c));
    std::sort(out.begin(), out.end(), words::shortlex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  auto [rep, letter] = cone_parts(name);
  int f = base_->factor_of(letter);
  int m = base_->orders()[static_cast<std::size_t>(f)];
  if (m == 0)
    fail(errc::resource_limit, "cone over an infinite coset has infinitely many neighbors");
  std::vector<std::string> out;
  std::string power;
  for (int k = 0; k < m; ++k) {
    out.push_back(base_->normalize(rep + power));
    power.push_back(letter);
  }
  std::sort(out.begin(), out.end(), words::shortlex_less);
  return out;
}

int ConedOffSpace::distance(const std::string& u, const std::string& v) const {
  bool cu = is_cone_name(u), cv = is_cone_name(v);
  if (!cu && !cv) return relative_norm(base_->normalize(words::invert(u) + v));
  if (cu && cv) {
    if (u == v) return 0;
    auto [r1, p] = cone_parts(u);
    auto [r2, q] = cone_parts(v);
    auto core = base_->syllables(base_->normalize(words::invert(r1) + r2));
    core = strip_leading(*base_, core, base_->factor_of(p));
    core = strip_trailing(*base_, core, base_->factor_of(q));
    return 2 + relative_norm(base_->render(core));
  }
  const std::string& x = cu ? v : u;
  const std::string& cone = cu ? u : v;
  auto [rep, p] = cone_parts(cone);
  auto core = base_->syllables(base_->normalize(words::invert(x) + rep));
  core = strip_trailing(*base_, core, base_->factor_of(p));
  return 1 + relative_norm(base_->render(core));
}

std::vector<std::string> ConedOffSpace::geodesic(const std::string& u, const std::string& v) const {
  bool cu = is_cone_name(u), cv = is_cone_name(v);
  if (cu || cv) {
    if (u == v) return {u};
    if (cu && cv) {
      auto [r1, p] = cone_parts(u);
      auto [r2, q] = cone_parts(v);
      // entry elements: cancel the leading p-syllable and trailing q-syllable
      auto w = base_->syllables(base_->normalize(words::invert(r1) + r2));
      std::string entry1 = r1;
      if (!w.empty() && w.front().factor == base_->factor_of(p)) {
        entry1 = base_->normalize(r1 + base_->render({w.front()}));
        w.erase(w.begin());
      }
      std::string entry2 = r2;
      if (!w.empty() && w.back().factor == base_->factor_of(q)) {
        entry2 = base_->normalize(r2 + base_->invert_word(base_->render({w.back()})));
      }
      std::vector<std::string> path{u};
      auto mid = geodesic(entry1, entry2);
      path.insert(path.end(), mid.begin(), mid.end());
      path.push_back(v);
      return path;
    }
    // one cone endpoint: reduce to the element-to-element case
    if (cv) {
      auto [rep, p] = cone_parts(v);
      auto core = base_->syllables(base_->normalize(words::invert(u) + rep));
      core = strip_trailing(*base_, core, base_->factor_of(p));
      std::string entry = base_->normalize(u + base_->render(core));
      std::vector<std::string> path = geodesic(u, entry);
      path.push_back(v);
      return path;
    }
    auto path = geodesic(v, u);
    std::reverse(path.begin(), path.end());
    return path;
  }

  // element to element: walk syllables, hopping through cones when that is
  // strictly shorter
  std::vector<std::string> path{base_->normalize(u)};
  std::string cur = path.front();
  for (const auto& syll : base_->syllables(base_->normalize(words::invert(u) + v))) {
    int m = base_->orders()[static_cast<std::size_t>(syll.factor)];
    long long len = m == 0 ? (syll.exp < 0 ? -syll.exp : syll.exp) : std::min(syll.exp, m - syll.exp);
    char letter = base_->letters()[static_cast<std::size_t>(syll.factor)];
    if (len <= 2) {
      for (char c : base_->geodesic_letters(base_->render({syll}))) {
        cur = base_->normalize(cur + c);
        path.push_back(cur);
      }
    } else {
      path.push_back(cone_of(cur, letter));
      cur = base_->normalize(cur + base_->render({syll}));
      path.push_back(cur);
    }
  }
  return path;
}

std::string ConedOffSpace::apply(const Isometry& g, const std::string& vertex) const {
  if (!is_cone_name(vertex)) return base_->apply(g, vertex);
  auto [rep, letter] = cone_parts(vertex);
  return cone_of(base_->normalize(g.word() + rep), letter);
}

int ConedOffSpace::base_norm(const std::string& vertex) const {
  if (!is_cone_name(vertex)) return base_->word_length(vertex);
  auto [rep, letter] = cone_parts(vertex);
  (void)letter;
  return base_->word_length(rep) + 1;
}

std::vector<std::string> ConedOffSpace::ball_vertices(int radius, std::size_t max_vertices) const {
  std::vector<std::string> elements = base_->ball_vertices(radius, max_vertices);
  std::set<std::string> cones;
  for (const auto& w : elements) {
    for (char c : base_->letters()) cones.insert(cone_of(w, c));
  }
  std::vector<std::string> out = elements;
  out.insert(out.end(), cones.begin(), cones.end());
  if (out.size() > max_vertices) fail(errc::resource_limit, "coned ball exceeds the vertex cap");
  std::sort(out.begin(), out.end(), [this](const std::string& a, const std::string& b) {
    int na = base_norm(a), nb = base_norm(b);
    if (na != nb) return na < nb;
    return words::shortlex_less(a, b);
  });
  return out;
}

std::vector<std::pair<std::string, std::string>> ConedOffSpace::induced_edges(
    const std::vector<std::string>& verts) const {
  std::set<std::string> in(verts.begin(), verts.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& v : verts) {
    if (is_cone_name(v)) continue;
    for (const auto& w : base_->neighbors(v)) {
      if (v < w && in.count(w)) edges.emplace_back(v, w);
    }
    for (char c : base_->letters()) {
      std::string cone = cone_of(v, c);
      if (in.count(cone)) edges.emplace_back(v, cone);
    }
  }
  return edges;
}

std::vector<Isometry> ConedOffSpace::group_ball(int radius, std::size_t max_elements) const {
  return base_->group_ball(radius, max_elements);
}

ConedOffGraph build_coned_off(std::shared_ptr<const WordSpace> base, int radius,
                              std::size_t max_vertices) {
  ConedOffGraph out;
  out.space = std::make_shared<ConedOffSpace>(std::move(base));
  out.cayley_radius = radius;
  out.graph = std::make_shared<BallGraph>(BallGraph::build(*out.space, radius, max_vertices));
  for (const auto& n : out.graph->names()) {
    if (ConedOffSpace::is_cone_name(n)) out.cones.push_back(n);
  }
  return out;
}

CosetProjectionResult coset_projection(const ConedOffGraph& g, const std::string& x,
                                       const std::string& cone) {
  if (!ConedOffSpace::is_cone_name(cone) || !g.graph->has(cone))
    fail(errc::unknown_coset, "no cone vertex " + cone + " in the built graph");
  int ci = g.graph->index_of(cone);
  int xi = g.graph->index_of(x);
  if (xi == ci) fail(errc::precondition, "projection of the cone to itself");

  std::vector<int> row;
  g.graph->bfs_into(xi, row);
  int dc = row[static_cast<std::size_t>(ci)];
  CosetProjectionResult out;
  for (int u : g.graph->neighbors(ci)) {
    if (row[static_cast<std::size_t>(u)] == dc - 1) out.entry_set.push_back(g.graph->name(u));
  }
  std::sort(out.entry_set.begin(), out.entry_set.end(), words::shortlex_less);
  int diam = 0;
  for (std::size_t i = 0; i < out.entry_set.size(); ++i)
    for (std::size_t j = i + 1; j < out.entry_set.size(); ++j)
      diam = std::max(diam, g.base().distance(out.entry_set[i], out.entry_set[j]));
  out.ds_diameter = diam;
  return out;
}

int coset_relative_distance(const ConedOffGraph& g, const std::string& cone, const std::string& x,
                            const std::string& y) {
  auto px = coset_projection(g, x, cone);
  auto py = coset_projection(g, y, cone);
  std::vector<std::string> joint = px.entry_set;
  joint.insert(joint.end(), py.entry_set.begin(), py.entry_set.end());
  std::sort(joint.begin(), joint.end(), words::shortlex_less);
  joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
  int diam = 0;
  for (std::size_t i = 0; i < joint.size(); ++i)
    for (std::size_t j = i + 1; j < joint.size(); ++j)
      diam = std::max(diam, g.base().distance(joint[i], joint[j]));
  return diam;
}

BcpReport verify_bcp(const ConedOffGraph& g, int K, int scope) {
  const BallGraph& G = *g.graph;
  BcpReport out;
  out.K = K;
  out.scope = scope;

  // group-element vertices within scope, certified against the build radius
  std::vector<int> elems;
  for (int v = 0; v < G.size(); ++v) {
    if (ConedOffSpace::is_cone_name(G.name(v))) continue;
    if (G.base_norm(v) <= scope) elems.push_back(v);
  }
  std::vector<int> cones;
  for (const auto& c : g.cones) cones.push_back(G.index_of(c));

  // entry sets per (element, cone) from one BFS row per element
  std::vector<std::vector<std::vector<int>>> entries(elems.size(),
                                                     std::vector<std::vector<int>>(cones.size()));
  std::vector<std::vector<int>> rows(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    G.bfs_into(elems[i], rows[i]);
    for (std::size_t c = 0; c < cones.size(); ++c) {
      if (elems[i] == cones[c]) continue;
      int dc = rows[i][static_cast<std::size_t>(cones[c])];
      for (int u : G.neighbors(cones[c]))
        if (rows[i][static_cast<std::size_t>(u)] == dc - 1) entries[i][c].push_back(u);
    }
  }

  // forced(x, c) rows: one cone-deleted BFS answers every y at once
  std::vector<int> cut;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t c = 0; c < cones.size(); ++c) {
      bool cut_ready = false;
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        int x = elems[i], y = elems[j];
        if (G.base_norm(x) + G.base_norm(y) > g.cayley_radius) continue;
        // d_gP over the union of entry sets, measured in the base word metric
        int dgp = 0;
        for (int u : entries[i][c])
          for (int v : entries[j][c])
            dgp = std::max(dgp, g.base().distance(G.name(u), G.name(v)));
        for (const auto& set : {entries[i][c], entries[j][c]})
          for (std::size_t a = 0; a < set.size(); ++a)
            for (std::size_t b = a + 1; b < set.size(); ++b)
              dgp = std::max(dgp, g.base().distance(G.name(set[a]), G.name(set[b])));
        if (dgp == 0) continue;
        ++out.pairs_checked;
        if (!cut_ready) {
          G.bfs_without_into(cones[c], x, cut);
          cut_ready = true;
        }
        int d = rows[i][static_cast<std::size_t>(y)];
        bool forced = cut[static_cast<std::size_t>(y)] < 0 || cut[static_cast<std::size_t>(y)] > d;
        if (!forced) out.least_K = std::max(out.least_K, dgp);
        if (dgp > K && !forced) {
          out.pass = false;
          if (out.violations.size() < 16)
            out.violations.push_back(
                {G.name(x), G.name(y), G.name(cones[c]), dgp, false});
        }
      }
    }
  }
  return out;
}

UniqueMinimumReport unique_minimum_scan(const ConedOffGraph& g,
                                        const std::vector<SequenceSpec>& sequences, int horizon,
                                        int margin) {
  UniqueMinimumReport out;
  for (const auto& seq : sequences) {
    LimitPatch lp = limit_along_sequence(g.graph, *g.space, seq, horizon);
    MinimumReport mr = local_minimum_map(lp.patch, margin);
    UniqueMinimumReport::Entry e;
    e.descriptor = seq.descriptor;
    if (mr.kind == MinimumReport::infinite_descent) {
      e.kind = "infinite_descent";
      e.unique = true;
    } else if (mr.kind == MinimumReport::finite_minimum) {
      if (mr.min_set.size() == 1 && ConedOffSpace::is_cone_name(mr.min_set.front())) {
        e.kind = "cone_minimum";
        e.minimum = mr.min_set.front();
        e.unique = true;
      } else if (mr.min_set.size() == 1) {
        // a group element can only be the minimum of its own point patch:
        // it has finite valence, so any other patch extends past it
        const std::string& x = mr.min_set.front();
        HorofunctionPatch bx = HorofunctionPatch::of_point(g.graph, *g.space, x);
        bool is_point = finite_difference(lp.patch, bx).lower_bound == 0;
        e.kind = is_point ? "point" : "element_minimum";
        e.minimum = x;
        e.unique = is_point;
      } else {
        e.kind = "multi_minimum";
        e.unique = false;
      }
    } else {
      e.kind = "inconclusive";
      e.unique = false;
    }
    if (!e.unique) out.all_pass = false;
    out.entries.push_back(std::move(e));
  }
  return out;
}

ConeAccumulationReport cone_accumulation(const ConedOffGraph& g, const std::string& cone,
                                         const Isometry& p, const Isometry& conjugator,
                                         const SequenceSpec& base_ray, const std::vector<int>& powers,
                                         int horizon) {
  const ConedOffSpace& X = *g.space;
  if (!g.graph->has(cone)) fail(errc::unknown_coset, "no cone vertex " + cone);

  // the conjugator powers must leave every ball
  int disp = X.base().word_length(X.power(p, 4).word());
  if (disp < 4)
    fail(errc::bounded_conjugator,
         "peripheral element \"" + p.word() + "\" has bounded powers");

  ConeAccumulationReport out;
  std::vector<HorofunctionPatch> patches;
  std::vector<std::vector<std::string>> seq_points;
  for (int n : powers) {
    Isometry tw = X.compose(X.compose(conjugator, X.power(p, n)), X.inverse(conjugator));
    SequenceSpec moved = translated_sequence(X, base_ray, tw);
    LimitPatch lp = limit_along_sequence(g.graph, X, moved, horizon);
    patches.push_back(lp.patch);
    seq_points.push_back(lp.points);
  }
  out.acc = accumulation_probe(X, g.graph, g.graph->index_of(cone), patches, seq_points);
  out.agreement = out.acc.agreement;
  out.pass = out.acc.accumulates && out.acc.guards_ok;
  return out;
}

}  // namespace horolab
