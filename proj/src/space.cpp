#include "horolab/space.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "horolab/errors.hpp"

namespace horolab {

Isometry Space::power(const Isometry& g, long long n) const {
  Isometry base = n < 0 ? inverse(g) : g;
  long long k = n < 0 ? -n : n;
  Isometry acc;
  for (long long i = 0; i < k; ++i) acc = compose(acc, base);
  return acc;
}

std::vector<std::string> Space::ball_vertices(int radius, std::size_t max_vertices) const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::deque<std::pair<std::string, int>> queue;
  std::string o = basepoint();
  queue.emplace_back(o, 0);
  seen.insert(o);
  while (!queue.empty()) {
    auto [v, d] = queue.front();
    queue.pop_front();
    out.push_back(v);
    if (out.size() > max_vertices)
      fail(errc::resource_limit, "ball exceeds max vertex count " + std::to_string(max_vertices));
    if (d == radius) continue;
    for (const auto& w : neighbors(v)) {
      if (seen.insert(w).second) queue.emplace_back(w, d + 1);
    }
  }
  std::sort(out.begin(), out.end(), [this](const std::string& a, const std::string& b) {
    int na = base_norm(a), nb = base_norm(b);
    if (na != nb) return na < nb;
    return words::shortlex_less(a, b);
  });
  return out;
}

std::vector<Isometry> Space::group_ball(int radius, std::size_t max_elements) const {
  std::vector<Isometry> out;
  for (auto& name : ball_vertices(radius, max_elements)) out.emplace_back(std::move(name));
  return out;
}

std::vector<std::pair<std::string, std::string>> Space::induced_edges(
    const std::vector<std::string>& verts) const {
  std::set<std::string> in(verts.begin(), verts.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& v : verts) {
    for (const auto& w : neighbors(v)) {
      if (v < w && in.count(w)) edges.emplace_back(v, w);
    }
  }
  return edges;
}

HalfInt gromov_product(const Space& X, const std::string& x, const std::string& y,
                       const std::string& base) {
  long long d = static_cast<long long>(X.distance(x, base)) + X.distance(y, base) - X.distance(x, y);
  return HalfInt::from_doubled(d);
}

// ---------------------------------------------------------------------------
// WordSpace

WordSpace::WordSpace(std::vector<int> orders, std::string letters)
    : orders_(std::move(orders)), letters_(std::move(letters)) {
  if (orders_.empty()) fail(errc::config_invalid, "free product needs at least one factor");
  if (letters_.empty()) {
    for (std::size_t i = 0; i < orders_.size(); ++i) letters_.push_back(static_cast<char>('a' + i));
  }
  if (letters_.size() != orders_.size())
    fail(errc::config_invalid, "one generator letter per factor required");
  for (int& slot : factor_index_) slot = -1;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    char c = letters_[i];
    if (c < 'a' || c > 'z') fail(errc::config_invalid, "generator letters must be lowercase");
    if (factor_index_[c - 'a'] != -1) fail(errc::config_invalid, "duplicate generator letter");
    factor_index_[c - 'a'] = static_cast<int>(i);
  }
  for (int m : orders_) {
    if (m < 0 || m == 1) fail(errc::config_invalid, "factor order must be 0 (infinite) or >= 2");
  }
}

bool WordSpace::is_free() const {
  return std::all_of(orders_.begin(), orders_.end(), [](int m) { return m == 0; });
}

bool WordSpace::is_tree() const {
  return std::all_of(orders_.begin(), orders_.end(), [](int m) { return m == 0 || m == 2; });
}

int WordSpace::factor_of(char c) const {
  char l = words::lower(c);
  if (l < 'a' || l > 'z' || factor_index_[l - 'a'] < 0)
    fail(errc::unknown_vertex, std::string("letter '") + c + "' is not a generator of " + describe());
  return factor_index_[l - 'a'];
}

std::vector<WordSpace::Syllable> WordSpace::syllables(std::string_view letters_string) const {
  std::vector<Syllable> out;
  for (char c : letters_string) {
    int f = factor_of(c);
    long long e = words::is_inverse(c) ? -1 : 1;
    int m = orders_[f];
    if (!out.empty() && out.back().factor == f) {
      out.back().exp += e;
      if (m > 0) out.back().exp = ((out.back().exp % m) + m) % m;
      if (out.back().exp == 0) out.pop_back();
      continue;
    }
    if (m > 0) e = ((e % m) + m) % m;
    if (e != 0) out.push_back({f, e});
  }
  // adjacent syllables always carry distinct factors: letters merge into the
  // top of the stack and pops never make equal factors adjacent
  return out;
}

std::string WordSpace::render(const std::vector<Syllable>& sylls) const {
  std::string out;
  for (const auto& s : sylls) {
    char c = letters_[s.factor];
    long long e = s.exp;
    if (orders_[s.factor] == 0 && e < 0) {
      c = words::invert_letter(c);
      e = -e;
    }
    for (long long k = 0; k < e; ++k) out.push_back(c);
  }
  return out;
}

std::string WordSpace::normalize(std::string_view raw_letters) const {
  return render(syllables(raw_letters));
}

std::string WordSpace::invert_word(std::string_view canonical) const {
  return normalize(words::invert(canonical));
}

int WordSpace::word_length(std::string_view canonical) const {
  long long len = 0;
  for (const auto& s : syllables(canonical)) {
    int m = orders_[s.factor];
    if (m == 0) {
      len += s.exp < 0 ? -s.exp : s.exp;
    } else {
      len += std::min(s.exp, m - s.exp);
    }
  }
  return static_cast<int>(len);
}

std::string WordSpace::geodesic_letters(std::string_view canonical) const {
  std::string out;
  for (const auto& s : syllables(canonical)) {
    int m = orders_[s.factor];
    char c = letters_[s.factor];
    long long steps;
    char step_letter;
    if (m == 0) {
      steps = s.exp < 0 ? -s.exp : s.exp;
      step_letter = s.exp < 0 ? words::invert_letter(c) : c;
    } else if (s.exp <= m - s.exp) {
      steps = s.exp;
      step_letter = c;
    } else {
      steps = m - s.exp;
      step_letter = words::invert_letter(c);
    }
    for (long long k = 0; k < steps; ++k) out.push_back(step_letter);
  }
  return out;
}

std::string WordSpace::describe() const {
  std::string out = is_free() ? "free(" + std::to_string(orders_.size()) + ")" : "free_product(";
  if (!is_free()) {
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (i) out += ",";
      out += orders_[i] == 0 ? "Z" : "Z/" + std::to_string(orders_[i]);
    }
    out += ")";
  }
  out += "[" + letters_ + "]";
  return out;
}

Isometry WordSpace::iso(std::string_view word_expr) const {
  return Isometry(normalize(words::expand(word_expr)));
}

Isometry WordSpace::compose(const Isometry& g, const Isometry& h) const {
  return Isometry(normalize(g.word() + h.word()));
}

Isometry WordSpace::inverse(const Isometry& g) const { return Isometry(invert_word(g.word())); }

std::vector<char> WordSpace::generator_letters() const {
  return std::vector<char>(letters_.begin(), letters_.end());
}

bool WordSpace::has_vertex(const std::string& name) const {
  for (char c : name) {
    char l = words::lower(c);
    if (l < 'a' || l > 'z' || factor_index_[l - 'a'] < 0) return false;
  }
  return normalize(name) == name;
}

std::vector<std::string> WordSpace::neighbors(const std::string& name) const {
  std::vector<std::string> out;
  for (std::size_t f = 0; f < orders_.size(); ++f) {
    char c = letters_[f];
    out.push_back(normalize(name + c));
    if (orders_[f] != 2) out.push_back(normalize(name + words::invert_letter(c)));
  }
  std::sort(out.begin(), out.end(), words::shortlex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int WordSpace::distance(const std::string& u, const std::string& v) const {
  return word_length(normalize(words::invert(u) + v));
}

std::vector<std::string> WordSpace::geodesic(const std::string& u, const std::string& v) const {
  std::vector<std::string> path{normalize(u)};
  std::string letters = geodesic_letters(normalize(words::invert(u) + v));
  std::string cur = path.back();
  for (char c : letters) {
    cur = normalize(cur + c);
    path.push_back(cur);
  }
  return path;
}

std::string WordSpace::apply(const Isometry& g, const std::string& vertex) const {
  return normalize(g.word() + vertex);
}

// ---------------------------------------------------------------------------
// CustomSpace

CustomSpace::CustomSpace(std::vector<std::string> vertex_names,
                         std::vector<std::pair<std::string, std::string>> edges,
                         std::string basepoint, std::map<char, std::vector<std::string>> automorphisms,
                         std::size_t max_group)
    : names_(std::move(vertex_names)) {
  if (names_.empty()) fail(errc::config_invalid, "custom graph needs at least one vertex");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      fail(errc::config_invalid, "duplicate vertex name " + names_[i]);
  }
  adj_.resize(names_.size());
  for (const auto& [a, b] : edges) {
    int u = index(a), v = index(b);
    if (u == v) fail(errc::config_invalid, "self-loop at " + a);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  base_ = index(basepoint);

  // reachability and eccentricity from the basepoint
  const auto& r = row(base_);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (r[i] < 0) fail(errc::config_invalid, "graph is disconnected at vertex " + names_[i]);
    eccentricity_ = std::max(eccentricity_, r[i]);
  }

  for (const auto& [letter, images] : automorphisms) {
    if (letter < 'a' || letter > 'z')
      fail(errc::config_invalid, "automorphism labels must be lowercase letters");
    if (images.size() != names_.size())
      fail(errc::config_invalid, "automorphism image list has wrong length");
    Perm p(names_.size());
    std::vector<char> hit(names_.size(), 0);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      int img = index(images[i]);
      p[i] = img;
      if (hit[img]++) fail(errc::config_invalid, "automorphism is not a bijection");
    }
    // must preserve adjacency exactly
    for (std::size_t u = 0; u < names_.size(); ++u) {
      for (int v : adj_[u]) {
        const auto& nb = adj_[p[u]];
        if (!std::binary_search(nb.begin(), nb.end(), p[v]))
          fail(errc::config_invalid, std::string("label '") + letter + "' is not a graph automorphism");
      }
    }
    gen_letters_.push_back(letter);
    gen_perms_.emplace(letter, std::move(p));
  }
  enumerate_group(max_group);
}

int CustomSpace::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(errc::unknown_vertex, "no vertex named " + name);
  return it->second;
}

const std::vector<int>& CustomSpace::row(int src) const {
  if (rows_.empty()) rows_.resize(names_.size());
  auto& r = rows_[src];
  if (!r.empty()) return r;
  r.assign(names_.size(), -1);
  std::deque<int> queue{src};
  r[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj_[v]) {
      if (r[w] < 0) {
        r[w] = r[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return r;
}

void CustomSpace::enumerate_group(std::size_t max_group) {
  Perm id(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) id[i] = static_cast<int>(i);
  word_to_perm_.emplace("", id);
  perm_to_word_.emplace(id, "");
  std::deque<std::string> queue{""};
  // letters in canonical order: x then its inverse, per generator
  std::vector<std::pair<char, Perm>> steps;
  for (char c : gen_letters_) {
    const Perm& p = gen_perms_.at(c);
    Perm pinv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) pinv[p[i]] = static_cast<int>(i);
    steps.emplace_back(c, p);
    if (pinv != p) steps.emplace_back(words::invert_letter(c), pinv);
  }
  while (!queue.empty()) {
    std::string w = queue.front();
    queue.pop_front();
    const Perm base = word_to_perm_.at(w);
    for (const auto& [c, p] : steps) {
      // right multiplication: (w c) acts by base after p
      Perm q(base.size());
      for (std::size_t i = 0; i < base.size(); ++i) q[i] = base[p[i]];
      if (perm_to_word_.count(q)) continue;
      std::string wc = w + c;
      perm_to_word_.emplace(q, wc);
      word_to_perm_.emplace(wc, q);
      queue.push_back(wc);
      if (perm_to_word_.size() > max_group)
        fail(errc::resource_limit, "automorphism group exceeds enumeration cap");
    }
  }
}

std::string CustomSpace::describe() const {
  return "custom(" + std::to_string(names_.size()) + " vertices, group order " +
         std::to_string(perm_to_word_.size()) + ")";
}

const CustomSpace::Perm& CustomSpace::perm_of(const Isometry& g) const {
  auto it = word_to_perm_.find(g.word());
  if (it == word_to_perm_.end()) fail(errc::unknown_vertex, "isometry word not canonical: " + g.word());
  return it->second;
}

const std::string& CustomSpace::canonical_of(const Perm& p) const {
  auto it = perm_to_word_.find(p);
  if (it == perm_to_word_.end()) fail(errc::verification_failure, "permutation outside enumerated group");
  return it->second;
}

Isometry CustomSpace::iso(std::string_view word_expr) const {
  std::string letters = words::expand(word_expr);
  Perm acc(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) acc[i] = static_cast<int>(i);
  // word acts left to right on the right: evaluate by composing so that the
  // full word applied to v equals acc[v]
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    char c = *it;
    char l = words::lower(c);
    auto g = gen_perms_.find(l);
    if (g == gen_perms_.end()) fail(errc::unknown_vertex, std::string("no automorphism '") + l + "'");
    Perm p = g->second;
    if (words::is_inverse(c)) {
      Perm pinv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) pinv[p[i]] = static_cast<int>(i);
      p = pinv;
    }
    Perm next(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) next[i] = p[acc[i]];
    acc = next;
  }
  return Isometry(canonical_of(acc));
}

Isometry CustomSpace::compose(const Isometry& g, const Isometry& h) const {
  const Perm& pg = perm_of(g);
  const Perm& ph = perm_of(h);
  Perm q(pg.size());
  for (std::size_t i = 0; i < pg.size(); ++i) q[i] = pg[ph[i]];
  return Isometry(canonical_of(q));
}

Isometry CustomSpace::inverse(const Isometry& g) const {
  const Perm& p = perm_of(g);
  Perm pinv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pinv[p[i]] = static_cast<int>(i);
  return Isometry(canonical_of(pinv));
}

std::vector<char> CustomSpace::generator_letters() const { return gen_letters_; }

bool CustomSpace::has_vertex(const std::string& name) const { return index_.count(name) > 0; }

std::vector<std::string> CustomSpace::neighbors(const std::string& name) const {
  std::vector<std::string> out;
  for (int w : adj_[index(name)]) out.push_back(names_[w]);
  std::sort(out.begin(), out.end(), words::shortlex_less);
  return out;
}

int CustomSpace::distance(const std::string& u, const std::string& v) const {
  return row(index(u))[index(v)];
}

std::vector<std::string> CustomSpace::geodesic(const std::string& u, const std::string& v) const {
  int target = index(v);
  std::vector<std::string> path{u};
  int cur = index(u);
  while (cur != target) {
    int best = -1;
    for (int w : adj_[cur]) {
      if (row(w)[target] != row(cur)[target] - 1) continue;
      if (best < 0 || words::shortlex_less(names_[w], names_[best])) best = w;
    }
    cur = best;
    path.push_back(names_[cur]);
  }
  return path;
}

std::string CustomSpace::apply(const Isometry& g, const std::string& vertex) const {
  return names_[perm_of(g)[index(vertex)]];
}

bool CustomSpace::ball_is_exact(int radius) const { return radius >= eccentricity_; }

std::vector<Isometry> CustomSpace::group_ball(int radius, std::size_t max_elements) const {
  (void)radius;
  auto all = group_elements();
  if (all.size() > max_elements) fail(errc::resource_limit, "automorphism group too large");
  return all;
}

std::vector<Isometry> CustomSpace::group_elements() const {
  std::vector<Isometry> out;
  for (const auto& [perm, word] : perm_to_word_) out.emplace_back(word);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace horolab
