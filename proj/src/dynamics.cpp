#include "horolab/dynamics.hpp"

#include <algorithm>
#include <set>

#include "horolab/errors.hpp"

namespace horolab {

Ray make_ray(const Space& X, const std::string& template_expr, int depth) {
  if (depth < 1) fail(errc::precondition, "ray depth must be positive");
  Ray r;
  r.descriptor = template_expr;
  for (int n = 1; n <= depth; ++n)
    r.prefix.push_back(X.apply(X.iso(words::expand_template(template_expr, n)), X.basepoint()));
  return r;
}

BoundarySample make_sample(const Space& X, const std::vector<std::string>& templates, int depth,
                           HalfInt T) {
  BoundarySample out;
  out.resolution = T;
  for (const auto& t : templates) out.rays.push_back(make_ray(X, t, depth));
  std::string o = X.basepoint();
  for (std::size_t i = 0; i < out.rays.size(); ++i) {
    // escape: the prefix must leave every ball
    if (out.rays[i].prefix.size() >= 2 &&
        X.distance(o, out.rays[i].rep()) <= X.distance(o, out.rays[i].prefix.front()))
      fail(errc::precondition, "ray " + out.rays[i].descriptor + " does not escape");
    for (std::size_t j = i + 1; j < out.rays.size(); ++j) {
      if (gromov_product(X, out.rays[i].rep(), out.rays[j].rep(), o) >= T)
        fail(errc::precondition, "rays " + out.rays[i].descriptor + " and " +
                                     out.rays[j].descriptor + " are not separated at resolution " +
                                     T.str());
    }
  }
  return out;
}

NorthSouthReport north_south_probe(const Space& X, const Isometry& g, const BoundarySample& sample,
                                   int n_max, int rep_depth) {
  std::string o = X.basepoint();
  std::string attractor = X.orbit_point(g, rep_depth);
  std::string repeller = X.orbit_point(g, -rep_depth);
  for (const auto& r : sample.rays) {
    if (gromov_product(X, r.rep(), repeller, o) >= sample.resolution)
      fail(errc::precondition,
           "ray " + r.descriptor + " meets the repeller neighborhood of " + g.word());
  }

  NorthSouthReport out;
  std::vector<bool> ok(static_cast<std::size_t>(n_max) + 1, true);
  Isometry gn;
  for (int n = 0; n <= n_max; ++n) {
    HalfInt least = HalfInt::whole(1 << 20);
    for (const auto& r : sample.rays) {
      HalfInt p = gromov_product(X, X.apply(gn, r.rep()), attractor, o);
      least = min(least, p);
      if (p < sample.resolution) {
        ok[static_cast<std::size_t>(n)] = false;
        if (n == n_max) out.escaping.push_back(r.descriptor);
      }
    }
    out.min_product_per_n.push_back(least);
    gn = X.compose(g, gn);
  }
  for (int n = n_max; n >= 0; --n) {
    if (!ok[static_cast<std::size_t>(n)]) break;
    out.n0 = n;
  }
  out.pass = out.n0 >= 0;
  return out;
}

namespace {

// deterministic conjugator pool: the group ball plus prefixes of the target
std::vector<Isometry> conjugator_pool(const Space& X, const Ray& target, int radius) {
  std::vector<Isometry> out = X.group_ball(radius);
  for (const auto& v : target.prefix) {
    try {
      out.push_back(X.iso(v));
    } catch (const error&) {
      break;  // vertices of this space are not group elements
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ProximalityResult extreme_proximality_probe(const Space& X, const BoundarySample& F,
                                            const Ray& target, HalfInt T,
                                            const ProximalitySearch& search) {
  std::string o = X.basepoint();
  auto inside = [&](const Isometry& g) {
    for (const auto& r : F.rays) {
      if (gromov_product(X, X.apply(g, r.rep()), target.rep(), o) < T) return false;
    }
    return true;
  };

  if (inside(Isometry())) return ProximalityResult{Isometry(), Isometry(), Isometry(), 0};

  for (const auto& u : conjugator_pool(X, target, search.conjugator_radius)) {
    for (const auto& b : search.base_loxodromics) {
      Isometry l = X.compose(X.compose(u, b), X.inverse(u));
      if (l.is_identity()) continue;
      // aligned with the target direction
      if (gromov_product(X, X.orbit_point(l, search.rep_depth), target.rep(), o) < T) continue;
      Isometry g;
      for (int k = 1; k <= search.max_power; ++k) {
        g = X.compose(g, l);
        if (inside(g)) return ProximalityResult{g, b, u, k};
      }
    }
  }
  fail(errc::search_exhausted, "no conjugated power moves the sample into the target");
}

FixedPairResult fixed_pair_density_probe(const Space& X, const Ray& target_plus,
                                         const Ray& target_minus, HalfInt T,
                                         const ProximalitySearch& search) {
  std::string o = X.basepoint();
  if (gromov_product(X, target_plus.rep(), target_minus.rep(), o) >= T)
    fail(errc::precondition, "targets are not separated at the resolution");

  auto plus_of = [&](const Isometry& g) { return X.orbit_point(g, search.rep_depth); };
  auto minus_of = [&](const Isometry& g) { return X.orbit_point(g, -search.rep_depth); };

  // an existing loxodromic may already have the right fixed pair
  for (const auto& b : search.base_loxodromics) {
    HalfInt pp = gromov_product(X, plus_of(b), target_plus.rep(), o);
    HalfInt mm = gromov_product(X, minus_of(b), target_minus.rep(), o);
    if (pp >= T && mm >= T) return FixedPairResult{b, b, b, 0, pp, mm};
  }

  std::vector<Isometry> hs, ks;
  for (const auto& u : conjugator_pool(X, target_plus, search.conjugator_radius)) {
    for (const auto& b : search.base_loxodromics) {
      Isometry l = X.compose(X.compose(u, b), X.inverse(u));
      if (!l.is_identity() && gromov_product(X, plus_of(l), target_plus.rep(), o) >= T)
        hs.push_back(l);
    }
  }
  for (const auto& u : conjugator_pool(X, target_minus, search.conjugator_radius)) {
    for (const auto& b : search.base_loxodromics) {
      Isometry l = X.compose(X.compose(u, b), X.inverse(u));
      if (!l.is_identity() && gromov_product(X, minus_of(l), target_minus.rep(), o) >= T)
        ks.push_back(l);
    }
  }
  for (const auto& h : hs) {
    for (const auto& k : ks) {
      Isometry g;
      for (int n = 1; n <= search.max_power; ++n) {
        g = X.compose(X.power(h, n), X.power(k, n));
        if (g.is_identity()) continue;
        if (classify_isometry(X, g, 6).type != IsoType::loxodromic) continue;
        HalfInt pp = gromov_product(X, plus_of(g), target_plus.rep(), o);
        HalfInt mm = gromov_product(X, minus_of(g), target_minus.rep(), o);
        if (pp >= T && mm >= T) return FixedPairResult{g, h, k, n, pp, mm};
      }
    }
  }
  fail(errc::search_exhausted, "no composed loxodromic hits the target pair");
}

Ray MyrbergRay::as_ray() const {
  Ray r;
  r.descriptor = "myrberg";
  r.prefix = path;
  return r;
}

MyrbergRay myrberg_ray(const Space& X, const std::vector<int>& omega,
                       const std::vector<Isometry>& L, const std::vector<Isometry>& F,
                       int nbhd_radius) {
  MyrbergRay out;
  std::string o = X.basepoint();
  out.path.push_back(o);
  if (omega.empty()) {
    out.strictly_increasing = true;
    return out;
  }
  if (L.empty()) fail(errc::precondition, "need at least one loxodromic for the prefix");

  Isometry w;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (omega[i] < 1) fail(errc::precondition, "omega entries must be positive");
    const Isometry& h = L[i % L.size()];
    Isometry h_next = (i + 1 < omega.size()) ? L[(i + 1) % L.size()] : Isometry();
    Isometry f = extension_choice(X, F, h, h_next).f;

    // connector segment labeled h
    Isometry wh = X.compose(w, h);
    auto seg = X.geodesic(out.path.back(), X.apply(wh, o));
    out.path.insert(out.path.end(), seg.begin() + 1, seg.end());
    w = wh;

    // fellow-travel block labeled f^{2 n_i} lying on w Ax(f)
    MyrbergSegment block;
    block.start = out.path.size() - 1;
    Isometry fpow = X.power(f, 2 * omega[i]);
    auto fseg = X.geodesic(out.path.back(), X.apply(X.compose(w, fpow), o));
    out.path.insert(out.path.end(), fseg.begin() + 1, fseg.end());
    block.end = out.path.size() - 1;
    block.axis_label = w.word() + ".Ax(" + f.word() + ")";

    QuasiAxis axis = quasi_axis(X, f, -2, 2 * omega[i] + 3);
    std::vector<std::string> translated;
    translated.reserve(axis.points.size());
    for (const auto& v : axis.points) translated.push_back(X.apply(w, v));

    // diameter of the ray portion inside the neighborhood of the axis
    std::vector<std::size_t> inside;
    for (std::size_t j = 0; j < out.path.size(); ++j) {
      int best = -1;
      for (const auto& t : translated) {
        int d = X.distance(out.path[j], t);
        if (best < 0 || d < best) best = d;
      }
      if (best <= nbhd_radius) inside.push_back(j);
    }
    for (std::size_t a : inside)
      for (std::size_t b : inside)
        block.diameter = std::max(block.diameter, X.distance(out.path[a], out.path[b]));
    out.segments.push_back(std::move(block));
    w = X.compose(w, fpow);
  }
  out.strictly_increasing = true;
  for (std::size_t i = 1; i < out.segments.size(); ++i) {
    if (out.segments[i].diameter <= out.segments[i - 1].diameter) out.strictly_increasing = false;
  }
  return out;
}

namespace {

// the bounded-projection conditions shared by the semigroup and tower
// searches: every u in the test set must move the axis off itself and keep
// orbit segments from shadowing it
struct ClaimCheck {
  bool ok = false;
  int tau = 0;
};

ClaimCheck bounded_projection_claim(const Space& X, const QuasiAxis& axis,
                                    const std::vector<Isometry>& test_set, int orbit_range,
                                    int tau_cap) {
  ClaimCheck out;
  std::string o = X.basepoint();
  for (const auto& u : test_set) {
    std::vector<std::string> moved;
    moved.reserve(axis.points.size());
    for (const auto& v : axis.points) moved.push_back(X.apply(u, v));
    int d1 = set_diameter(X, project_to_set(X, axis.points, moved));
    if (d1 > tau_cap) return out;
    out.tau = std::max(out.tau, d1);
    for (int n = -orbit_range; n <= orbit_range; ++n) {
      if (n == 0) continue;
      auto seg = X.geodesic(o, X.orbit_point(u, n));
      int d2 = set_diameter(X, project_to_set(X, axis.points, seg));
      if (d2 > tau_cap) return out;
      out.tau = std::max(out.tau, d2);
    }
  }
  out.ok = true;
  return out;
}

// candidates with bounded projections against the test set, in search order;
// the power is raised until the displacement clears 2 tau + 2
struct ClaimElement {
  Isometry seed;
  Isometry powered;
  int tau = 0;
};

ClaimElement find_claim_element(const Space& X, const std::vector<Isometry>& test_set,
                                int search_radius, int axis_range, int orbit_range, int tau_cap) {
  std::string o = X.basepoint();
  for (const auto& cand : X.group_ball(search_radius)) {
    if (cand.is_identity()) continue;
    if (classify_isometry(X, cand, 8).type != IsoType::loxodromic) continue;
    QuasiAxis axis = quasi_axis(X, cand, -axis_range, axis_range + 1);
    ClaimCheck chk = bounded_projection_claim(X, axis, test_set, orbit_range, tau_cap);
    if (!chk.ok) continue;
    int need = 2 * chk.tau + 2;
    Isometry powered = cand;
    for (int m = 1; m <= need; ++m) {
      if (X.distance(o, X.apply(powered, o)) >= need) break;
      powered = X.compose(powered, cand);
    }
    return ClaimElement{cand, powered, chk.tau};
  }
  fail(errc::search_exhausted, "no element with bounded projections found in the search ball");
}

}  // namespace

FreeSemigroupCertificate free_semigroup_certificate(const Space& X,
                                                    const std::vector<Isometry>& A,
                                                    int length_check,
                                                    const SemigroupSearch& search) {
  if (A.empty()) fail(errc::precondition, "A must be nonempty");
  for (const auto& a : A)
    if (a.is_identity()) fail(errc::precondition, "A must consist of nontrivial elements");

  // A, its inverses, and the nontrivial differences a^{-1} a'
  std::vector<Isometry> test_set;
  for (const auto& a : A) {
    test_set.push_back(a);
    test_set.push_back(X.inverse(a));
    for (const auto& b : A) {
      Isometry d = X.compose(X.inverse(a), b);
      if (!d.is_identity()) test_set.push_back(d);
    }
  }
  std::sort(test_set.begin(), test_set.end());
  test_set.erase(std::unique(test_set.begin(), test_set.end()), test_set.end());

  ClaimElement elem = find_claim_element(X, test_set, search.search_radius, search.axis_range,
                                         search.orbit_range, search.tau_cap);

  FreeSemigroupCertificate cert;
  cert.f_seed = elem.seed;
  cert.f = elem.powered;
  cert.tau = elem.tau;

  // exhaustive distinctness of all products of <= length_check factors of A f
  double budget = 1;
  for (int k = 0; k < length_check; ++k) {
    budget *= static_cast<double>(A.size());
    if (budget > static_cast<double>(search.max_products))
      fail(errc::resource_limit, "product enumeration exceeds the cap");
  }
  std::vector<Isometry> factors;
  for (const auto& a : A) factors.push_back(X.compose(a, cert.f));

  std::set<std::string> seen;
  std::vector<std::pair<Isometry, std::string>> layer{{Isometry(), ""}};
  for (int k = 1; k <= length_check; ++k) {
    std::vector<std::pair<Isometry, std::string>> next;
    next.reserve(layer.size() * factors.size());
    for (const auto& [prod, trace] : layer) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        Isometry p = X.compose(prod, factors[i]);
        std::string t = trace + "." + A[i].word();
        ++cert.products_checked;
        if (!seen.insert(p.word()).second) {
          cert.relation_witness = t + " collides at " + p.word();
          fail(errc::verification_failure,
               "semigroup relation found: " + cert.relation_witness);
        }
        next.emplace_back(std::move(p), std::move(t));
      }
    }
    layer = std::move(next);
  }
  return cert;
}

PnaiCertificate pnai_certificate(const Space& X, const Isometry& a, const Isometry& f,
                                 int length_check) {
  PnaiCertificate cert;
  cert.order_a = classify_isometry(X, a, std::max(8, length_check + 1)).order;
  cert.order_f = classify_isometry(X, f, std::max(8, length_check + 1)).order;
  if (a.is_identity() || f.is_identity())
    fail(errc::precondition, "letters of the pair must be nontrivial");

  // alternating words a^{e1} f^{d1} a^{e2} ... with weights summing to at
  // most length_check; weight of x^e is the word-length contribution of the
  // exponent
  struct Block {
    const Isometry* base;
    int order;
    char tag;
  };
  Block blocks[2] = {{&a, cert.order_a, 'a'}, {&f, cert.order_f, 'f'}};

  auto exponents_for = [&](int order, int budget) {
    std::vector<std::pair<int, int>> out;  // (exponent, weight)
    if (order == 0) {
      for (int e = 1; e <= budget; ++e) {
        out.emplace_back(e, e);
        out.emplace_back(-e, e);
      }
    } else {
      for (int e = 1; e < order; ++e) {
        int w = std::min(e, order - e);
        if (w <= budget) out.emplace_back(e, w);
      }
    }
    return out;
  };

  // depth-first over alternating blocks
  std::function<void(int, int, const Isometry&, const std::string&)> walk =
      [&](int which, int budget, const Isometry& prod, const std::string& trace) {
        const Block& blk = blocks[which];
        for (auto [e, wgt] : exponents_for(blk.order, budget)) {
          Isometry p = X.compose(prod, X.power(*blk.base, e));
          std::string t = trace + blk.tag + "^" + std::to_string(e) + " ";
          ++cert.words_checked;
          if (p.is_identity())
            fail(errc::relation_found, "nontrivial relation: " + t + "= identity");
          if (budget - wgt > 0) walk(1 - which, budget - wgt, p, t);
        }
      };
  walk(0, length_check, Isometry(), "");
  walk(1, length_check, Isometry(), "");
  return cert;
}

int bounded_axis_probe(const Space& X, const Isometry& a, const QuasiAxis& axis, int n_lo,
                       int n_hi, HalfInt resolution) {
  std::string o = X.basepoint();
  const std::string& plus = axis.path.back();
  const std::string& minus = axis.path.front();
  for (const std::string& end : {plus, minus}) {
    for (const std::string& other : {plus, minus}) {
      if (gromov_product(X, X.apply(a, end), other, o) >= resolution)
        fail(errc::fixed_points_collide, "translate of " + end + " meets the axis ends");
    }
  }
  int tau = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (n == 0) continue;
    Isometry an = X.power(a, n);
    std::vector<std::string> moved;
    moved.reserve(axis.points.size());
    for (const auto& v : axis.points) moved.push_back(X.apply(an, v));
    tau = std::max(tau, set_diameter(X, project_to_set(X, axis.points, moved)));
  }
  return tau;
}

TowerCertificate paradoxical_towers(const Space& X, const std::vector<Isometry>& D,
                                    const std::vector<Isometry>& F, int check_radius,
                                    const TowerOptions& opts) {
  if (D.empty()) fail(errc::precondition, "D must be nonempty");
  for (const auto& d : D)
    if (d.is_identity()) fail(errc::precondition, "D must consist of nontrivial elements");
  if (F.size() != 3) fail(errc::precondition, "exactly three loxodromics required");
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = i + 1; j < F.size(); ++j)
      if (!weakly_independent(X, F[i], F[j], opts.independence_tau))
        fail(errc::precondition,
             "family members " + F[i].word() + ", " + F[j].word() + " are not weakly independent");

  // f0 for D and its difference set
  std::vector<Isometry> test_set;
  for (const auto& d : D) {
    test_set.push_back(d);
    test_set.push_back(X.inverse(d));
    for (const auto& e : D) {
      Isometry diff = X.compose(X.inverse(d), e);
      if (!diff.is_identity()) test_set.push_back(diff);
    }
  }
  std::sort(test_set.begin(), test_set.end());
  test_set.erase(std::unique(test_set.begin(), test_set.end()), test_set.end());
  ClaimElement elem = find_claim_element(X, test_set, opts.search_radius, opts.axis_range,
                                         /*orbit_range=*/2, opts.tau_cap);
  Isometry f0 = elem.powered;

  TowerCertificate cert;
  for (const auto& d : D) cert.D_words.push_back(d.word());
  for (const auto& f : F) cert.F_words.push_back(f.word());
  cert.f0 = f0.word();
  cert.check_radius = check_radius;
  cert.class_sizes.assign(F.size(), 0);

  // deterministic assignment b -> f_b via the extension choice
  auto assignment = [&](const Isometry& b) -> std::size_t {
    ExtensionChoice ch = extension_choice(X, F, f0, b, opts.ext);
    for (std::size_t i = 0; i < F.size(); ++i)
      if (F[i] == ch.f) return i;
    fail(errc::verification_failure, "extension choice returned a foreign element");
  };

  std::vector<Isometry> ball = X.group_ball(check_radius, opts.max_ball);
  cert.elements_checked = static_cast<long long>(ball.size());

  // precompute g_i = f_i^{-1} f0^{-1} and the left parts a f0 f_i
  std::vector<Isometry> f0fi, gi;
  for (const auto& f : F) {
    f0fi.push_back(X.compose(f0, f));
    gi.push_back(X.inverse(f0fi.back()));
  }

  // (1) the translates a A_i are pairwise disjoint over (a, i)
  cert.disjoint = true;
  for (const auto& x : ball) {
    int hits = 0;
    std::string first_hit;
    for (std::size_t ai = 0; ai < D.size() && hits <= 1; ++ai) {
      Isometry ax = X.compose(X.inverse(D[ai]), x);
      for (std::size_t i = 0; i < F.size(); ++i) {
        // x in a A_i iff b := (f0 f_i)^{-1} a^{-1} x is assigned f_i
        Isometry b = X.compose(gi[i], ax);
        if (assignment(b) == i) {
          ++hits;
          std::string tag = D[ai].word() + ".A" + std::to_string(i + 1);
          if (hits == 1) first_hit = tag;
          if (hits > 1) {
            cert.disjoint = false;
            fail(errc::verification_failure, "element " + (x.word().empty() ? "<e>" : x.word()) +
                                                 " lies in " + first_hit + " and " + tag);
          }
        }
      }
    }
  }

  // (2) every ball element lands in some g_i A_i; by construction this is
  // the totality of the assignment, checked literally
  cert.covering = true;
  for (const auto& x : ball) {
    std::size_t i = assignment(x);
    ++cert.class_sizes[i];
    // g_i (f0 f_i x) = x must hold exactly
    Isometry roundtrip = X.compose(gi[i], X.compose(f0fi[i], x));
    if (!(roundtrip == x))
      fail(errc::verification_failure, "translate arithmetic broke at " + x.word());
  }
  return cert;
}

FaithfulResult strongly_faithful_probe(const Space& X, const std::vector<Isometry>& F,
                                       const BoundarySample& sample, int probe_radius,
                                       int horizon) {
  if (sample.rays.empty()) fail(errc::precondition, "empty boundary sample");
  auto ball = std::make_shared<const BallGraph>(BallGraph::build(X, probe_radius));

  for (const auto& ray : sample.rays) {
    SequenceSpec seq = list_sequence(ray.descriptor, ray.prefix);
    LimitPatch base = limit_along_sequence(ball, X, seq, std::min<int>(horizon, ray.prefix.size()));
    FaithfulResult out;
    out.ray = ray;
    bool moved_by_all = true;
    for (const auto& f : F) {
      LimitPatch shifted = limit_along_sequence(ball, X, translated_sequence(X, seq, f),
                                                std::min<int>(horizon, ray.prefix.size()));
      int fd = finite_difference(base.patch, shifted.patch).lower_bound;
      out.differences.push_back(fd);
      if (fd == 0) {
        moved_by_all = false;
        break;
      }
    }
    if (moved_by_all) return out;
  }
  fail(errc::search_exhausted, "every sampled ray is fixed by some element of F");
}

TamednessReport tamedness_probe(const Space& X, const Isometry& b, const Isometry& c,
                                int conjugator_radius, std::size_t sample_cap, HalfInt resolution,
                                int rep_depth) {
  if (!weakly_independent(X, b, c, 2))
    fail(errc::precondition, "the defining pair must be weakly independent");

  // sample of the normal closure: conjugates of b, c and products of two
  std::vector<Isometry> pool;
  for (const auto& u : X.group_ball(conjugator_radius)) {
    for (const Isometry* base : {&b, &c}) {
      pool.push_back(X.compose(X.compose(u, *base), X.inverse(u)));
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<Isometry> sample = pool;
  for (std::size_t i = 0; i < pool.size() && sample.size() < sample_cap; ++i)
    for (std::size_t j = i + 1; j < pool.size() && sample.size() < sample_cap; ++j)
      sample.push_back(X.compose(pool[i], pool[j]));
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());

  TamednessReport out;
  std::string o = X.basepoint();
  std::vector<Isometry> loxos;
  for (const auto& g : sample) {
    if (g.is_identity()) continue;
    if (classify_isometry(X, g, 8).type == IsoType::loxodromic) loxos.push_back(g);
    if (loxos.size() >= sample_cap) break;
  }
  out.sampled = static_cast<int>(loxos.size());

  auto rep = [&](const Isometry& g, int dir) { return X.orbit_point(g, dir * rep_depth); };
  for (std::size_t i = 0; i < loxos.size(); ++i) {
    for (std::size_t j = i + 1; j < loxos.size(); ++j) {
      ++out.pairs;
      HalfInt pp = gromov_product(X, rep(loxos[i], 1), rep(loxos[j], 1), o);
      HalfInt pm = gromov_product(X, rep(loxos[i], 1), rep(loxos[j], -1), o);
      HalfInt mp = gromov_product(X, rep(loxos[i], -1), rep(loxos[j], 1), o);
      HalfInt mm = gromov_product(X, rep(loxos[i], -1), rep(loxos[j], -1), o);
      bool same = (pp >= resolution && mm >= resolution) || (pm >= resolution && mp >= resolution);
      bool apart = pp < resolution && pm < resolution && mp < resolution && mm < resolution;
      if (same) {
        ++out.equal;
      } else if (apart) {
        ++out.disjoint;
      } else {
        out.pass = false;
        if (out.counterexamples.size() < 8)
          out.counterexamples.push_back({loxos[i].word(), loxos[j].word(), "intermediate"});
      }
    }
  }
  return out;
}

}  // namespace horolab
