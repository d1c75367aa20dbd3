#include "acx/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "acx/dominance.hpp"
#include "acx/economy.hpp"
#include "acx/errors.hpp"
#include "acx/hull.hpp"
#include "acx/oracle.hpp"
#include "acx/random.hpp"
#include "acx/relation.hpp"
#include "acx/scene.hpp"
#include "acx/separation.hpp"

namespace acx {

unsigned suite_threads_from_env() {
  const char* v = std::getenv("ACX_SUITE_THREADS");
  if (v == nullptr) return 1;
  const int n = std::atoi(v);
  return n > 0 ? static_cast<unsigned>(n) : 1;
}

namespace {

using Check = std::function<std::optional<std::string>(std::size_t index)>;

constexpr std::size_t kMaxFailures = 5;

// Runs check(i) for i < count; an empty optional means the instance passed.
void run_instances(CriterionResult& out, std::size_t count, unsigned threads, const Check& check) {
  std::vector<std::optional<std::string>> verdicts(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        verdicts[i] = check(i);
      } catch (const std::exception& e) {
        verdicts[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  out.instances += count;
  for (std::size_t i = 0; i < count; ++i) {
    if (!verdicts[i]) {
      ++out.passed;
    } else if (out.failures.size() < kMaxFailures) {
      out.failures.push_back("instance " + std::to_string(i) + ": " + *verdicts[i]);
    }
  }
}

std::string fmt(const RationalVector& v) { return to_string(v); }

ChainSet shifted(const ChainSet& c, const RationalVector& delta) {
  FinitePointSet pts(c.dimension());
  for (const auto& p : c.base()) pts.insert(p + delta);
  return ChainSet(std::move(pts), c.cone());
}

RationalVector generator_sum(const Cone& cone) {
  RationalVector s = zeros(cone.dimension());
  for (const auto& g : cone.generators()) s += g;
  return s;
}

// Criterion 1: dominating and dominated elements with re-validated
// certificates and an oracle scan of the materialized set.
void dominance_soundness(CriterionResult& out, const SuiteOptions& o, std::size_t count) {
  run_instances(out, count, o.threads, [&](std::size_t i) -> std::optional<std::string> {
    Random rng(derive_seed(o.seed, 1, i));
    const std::size_t n = 2 + rng.below(3);
    const Cone cone = random_pointed_cone(rng, n, rng.coin());
    const DecomposableSet d = random_decomposable(rng, cone, 3, 6);
    const FinitePointSet y = materialize(d);
    const Cone k = k_closure(cone);
    // Scan candidates from the top of the sum-of-coordinates order.
    std::vector<RationalVector> order = y.points();
    const auto height = [](const RationalVector& p) {
      Rational s(0);
      for (const auto& c : p) s += c;
      return s;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](const auto& a, const auto& b) { return height(a) > height(b); });

    for (int h = 0; h < 10; ++h) {
      const RationalVector target = random_hull_point(rng, d).second;
      const DominationCertificate up = dominating_element(target, d);
      if (!verify_certificate(up, d)) return "certificate rejected for " + fmt(target);
      if (!y.contains(up.witness) || !oracle::cone_contains(k, up.witness - target)) {
        return "witness " + fmt(up.witness) + " fails the oracle for " + fmt(target);
      }
      const bool exists = std::any_of(order.begin(), order.end(), [&](const RationalVector& z) {
        return oracle::cone_contains(k, z - target);
      });
      if (!exists) return "oracle finds no dominating point for " + fmt(target);

      const DominationCertificate down = dominated_element(target, d);
      if (!verify_certificate(down, d)) {
        return "dominated certificate rejected for " + fmt(target);
      }
      if (!y.contains(down.witness) || !oracle::cone_contains(k, target - down.witness)) {
        return "dominated witness " + fmt(down.witness) + " fails the oracle";
      }
    }
    return std::nullopt;
  });
}

// Criterion 2: the three Pareto-optimum equalities against enumeration.
void pareto_equivalences(CriterionResult& out, const SuiteOptions& o, std::size_t count) {
  run_instances(out, count, o.threads, [&](std::size_t i) -> std::optional<std::string> {
    Random rng(derive_seed(o.seed, 2, i));
    const std::size_t n = 2 + rng.below(2);
    const Cone cone = random_pointed_cone(rng, n, rng.coin());
    const DecomposableSet d = random_decomposable(rng, cone, 3, 4);
    const EquivalenceReport rep = check_equivalences(d);
    if (!rep.zero_invariance) return std::string("optima change with the zero flag");
    if (!rep.hull_invariance) return std::string("hull optima differ from finite optima");
    if (!rep.maximal_equivalence) return std::string("domination maximals differ from optima");
    const FinitePointSet y = materialize(d);
    const FinitePointSet expected = oracle::pareto_optima(y, cone);
    if (!rep.optima.same_points(expected) || !rep.optima_with_zero.same_points(expected) ||
        !rep.domination_maximals.same_points(expected) ||
        !oracle::pareto_optima(y, cone.with_zero(!cone.contains_zero())).same_points(expected)) {
      return std::string("optima disagree with the enumeration oracle");
    }
    return std::nullopt;
  });
}

// Criterion 3: X = chain + cone and a decomposable Y avoiding X have
// disjoint hulls.
void disjoint_hulls(CriterionResult& out, const SuiteOptions& o, std::size_t count) {
  run_instances(out, count, o.threads, [&](std::size_t i) -> std::optional<std::string> {
    Random rng(derive_seed(o.seed, 3, i));
    const std::size_t n = 2 + rng.below(2);
    const Cone cone = random_pointed_cone(rng, n, true);
    const ChainSet chain = random_chain(rng, cone, 1 + rng.below(4));
    const Polyhedron x = upward_hull(chain.base(), cone);
    const RationalVector down = -generator_sum(cone);
    const std::size_t max_summands = i % 4 == 0 ? 1 : 3;
    for (int attempt = 0; attempt < 200; ++attempt) {
      DecomposableSet y = random_decomposable(rng, cone, max_summands, 4);
      std::vector<ChainSet> parts = y.summands();
      parts[0] = shifted(parts[0], Rational(rng.between(0, 6)) * down);
      y = DecomposableSet(std::move(parts));
      const FinitePointSet pts = materialize(y);
      const bool avoids = std::none_of(pts.begin(), pts.end(), [&](const RationalVector& p) {
        return hull_membership(p, x).member;
      });
      if (!avoids) continue;
      const DisjointnessResult r = hulls_disjoint(x, y);
      if (!r.disjoint) return "hulls meet at " + fmt(*r.common_point);
      if (!verify_disjointness(x, y, r)) return std::string("disjointness certificate rejected");
      return std::nullopt;
    }
    return std::string("no disjoint instance after 200 draws");
  });
}

// Criterion 4: strict separators of closed upward X and bounded Y.
void strict_separation(CriterionResult& out, const SuiteOptions& o, std::size_t count) {
  run_instances(out, count, o.threads, [&](std::size_t i) -> std::optional<std::string> {
    Random rng(derive_seed(o.seed, 4, i));
    const std::size_t n = 2 + rng.below(2);
    const Cone cone = random_pointed_cone(rng, n, true);
    const RationalVector down = -generator_sum(cone);
    for (int attempt = 0; attempt < 200; ++attempt) {
      FinitePointSet xs(n);
      const std::size_t nx = 1 + rng.below(4);
      while (xs.size() < nx) xs.insert(rng.point(n));
      const Polyhedron x = upward_hull(xs, cone);
      FinitePointSet ys(n);
      const std::size_t ny = 1 + rng.below(4);
      const RationalVector shift = Rational(rng.between(1, 6)) * down;
      while (ys.size() < ny) ys.insert(rng.point(n) + shift);
      const Polyhedron y = convex_hull(ys);
      SeparationResult s;
      try {
        s = strict_separator(x, y);
      } catch (const PreconditionViolation&) {
        continue;  // the hulls meet; draw again
      }
      for (const auto& c : s.functional) {
        if (c.get_den() != 1) return "functional " + fmt(s.functional) + " is not integral";
      }
      if (*s.inf_on_y - *s.sup_on_x < 1) return std::string("gap below 1");
      if (!separator_sign_check(s.functional, cone)) {
        return "functional " + fmt(s.functional) + " is positive on a generator";
      }
      if (!verify_separation(x, y.vertices.points(), s)) return std::string("separator rejected");
      return std::nullopt;
    }
    return std::string("no disjoint pair after 200 draws");
  });
}

// Criterion 5: ri of an upward polyhedron is upward.
void relative_interior_upward(CriterionResult& out, const SuiteOptions& o, std::size_t count) {
  run_instances(out, count, o.threads, [&](std::size_t i) -> std::optional<std::string> {
    Random rng(derive_seed(o.seed, 5, i));
    const std::size_t n = 2 + rng.below(2);
    const Cone cone = rng.below(4) == 0 ? random_cone(rng, n, true) : random_pointed_cone(rng, n, true);
    FinitePointSet pts(n);
    const std::size_t np = 1 + rng.below(4);
    while (pts.size() < np) pts.insert(rng.point(n));
    const Polyhedron x = upward_hull(pts, cone);
    const auto& verts = x.vertices.points();
    for (int k = 0; k < 10; ++k) {
      RationalVector lambda(verts.size());
      Rational total(0);
      for (auto& l : lambda) {
        l = rng.between(1, 5);
        total += l;
      }
      RationalVector z = zeros(n);
      for (std::size_t j = 0; j < verts.size(); ++j) z += Rational(lambda[j] / total) * verts[j];
      for (const auto& r : x.rays) z += ratio(rng.between(1, 5), rng.between(1, 3)) * r;
      if (!relative_interior_membership(z, x)) return "positive combination " + fmt(z) + " not in ri";
      for (const auto& g : cone.generators()) {
        if (!relative_interior_membership(z + g, x)) {
          return fmt(z) + " in ri but " + fmt(RationalVector(z + g)) + " is not";
        }
      }
    }
    return std::nullopt;
  });
}

Rational utility_by_formula(const Rational& x1, const Rational& x2) {
  return x1 * x2 / (x1 + 1) - 5 * x1 + x2;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return nlohmann::json::parse(ss.str());
}

// Criterion 6: the demand instance plus the pinned corpus.
void demand_instance(CriterionResult& out, const SuiteOptions& o) {
  run_instances(out, 1, 1, [&](std::size_t) -> std::optional<std::string> {
    const Utility u = utility_by_name("paper_6_3");
    const GridDomain grid{2, Rational(1), {Rational(4), Rational(4)}};
    const PriceSystem price{{Rational(1), Rational(1)}, Rational(2)};
    // Enumeration oracle over x1 + x2 <= 2 on the unit lattice.
    FinitePointSet best(2);
    std::optional<Rational> best_value;
    std::size_t feasible = 0;
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; b <= 4; ++b) {
        if (a + b > 2) continue;
        ++feasible;
        const Rational v = utility_by_formula(a, b);
        if (!best_value || v > *best_value) {
          best = FinitePointSet(2);
          best_value = v;
        }
        if (v == *best_value) best.insert({Rational(a), Rational(b)});
      }
    }
    const FinitePointSet expected{{Rational(0), Rational(2)}};
    if (feasible != 6 || !best.same_points(expected) || *best_value != 2) {
      return std::string("enumeration oracle disagrees with the stated instance");
    }
    const FinitePointSet d = demand(u, grid, price);
    if (!d.same_points(expected) || u(d[0]) != 2) return "demand is " + to_string(d[0]);
    const BoundaryReport b = check_boundary_and_antichain(u, grid, price);
    if (!b.on_hyperplane) return std::string("demand point off the budget line");
    const GrintaReport g = check_grinta(u, grid, price);
    if (!g.equal) return std::string("maximals differ from convexified maximals");
    return std::nullopt;
  });

  if (o.data_dir.empty()) {
    ++out.instances;
    out.failures.push_back("corpus: no data directory given");
    return;
  }
  const nlohmann::json corpus = read_json(o.data_dir + "/grinta_corpus.json");
  const auto& items = corpus.at("instances");
  run_instances(out, items.size(), o.threads, [&](std::size_t i) -> std::optional<std::string> {
    const auto& item = items[i];
    const std::string path = "instances[" + std::to_string(i) + "]";
    const Utility u = utility_by_name(item.at("utility").get<std::string>());
    const GridDomain grid{2, rational_from_json(item.at("step"), path + ".step"),
                          vector_from_json(item.at("upper"), 2, path + ".upper")};
    const PriceSystem price{vector_from_json(item.at("price"), 2, path + ".price"),
                            rational_from_json(item.at("wealth"), path + ".wealth")};
    const auto points = [&](const char* key) {
      FinitePointSet s(2);
      for (const auto& p : item.at(key)) s.insert(vector_from_json(p, 2, path + "." + key));
      return s;
    };
    const GrintaReport g = check_grinta(u, grid, price);
    if (!g.equal) return std::string("maximals differ from convexified maximals");
    if (!g.maximals.same_points(points("maximals"))) return std::string("maximals differ from the oracle");
    if (!g.convexified_maximals.same_points(points("convexified_maximals"))) {
      return std::string("convexified maximals differ from the oracle");
    }
    return std::nullopt;
  });
}

// Criterion 7: antichain quasiconcavity holds, plain quasiconcavity fails.
void quasiconcavity_contrast(CriterionResult& out, const SuiteOptions& o) {
  const Utility u = utility_by_name("paper_6_3");
  std::optional<QuasiconcavityWitness> found;
  run_instances(out, 1, 1, [&](std::size_t) -> std::optional<std::string> {
    const GridDomain grid{2, Rational(1, 2), {Rational(4), Rational(4)}};
    const QuasiconcavityReport r =
        check_antichain_quasiconcavity(u, grid, Cone::orthant(2), 1000, o.seed);
    if (!r.holds) return "violation at " + fmt(r.witness->z);
    if (r.pairs_checked != 1000) return "only " + std::to_string(r.pairs_checked) + " pairs";
    return std::nullopt;
  });
  run_instances(out, 1, 1, [&](std::size_t) -> std::optional<std::string> {
    const GridDomain grid{2, Rational(1), {Rational(4), Rational(4)}};
    const QuasiconcavityReport r = check_antichain_quasiconcavity(u, grid, Cone::zero(2), 1000);
    if (r.holds || !r.witness) return std::string("no quasiconcavity violation found");
    const auto& w = *r.witness;
    const Rational l = w.lambda;
    if (w.z != RationalVector(l * w.x + Rational(1 - l) * w.y)) return std::string("bad witness point");
    const Rational floor_value = std::min(utility_by_formula(w.x[0], w.x[1]), utility_by_formula(w.y[0], w.y[1]));
    if (!(utility_by_formula(w.z[0], w.z[1]) < floor_value)) return std::string("witness is not a violation");
    found = w;
    return std::nullopt;
  });
  if (o.data_dir.empty()) {
    ++out.instances;
    out.failures.push_back("fixture: no data directory given");
    return;
  }
  run_instances(out, 1, 1, [&](std::size_t) -> std::optional<std::string> {
    const nlohmann::json f = read_json(o.data_dir + "/quasiconcavity_violation.json");
    const RationalVector x = vector_from_json(f.at("x"), 2, "x");
    const RationalVector y = vector_from_json(f.at("y"), 2, "y");
    const Rational l = rational_from_json(f.at("lambda"), "lambda");
    const RationalVector z = vector_from_json(f.at("z"), 2, "z");
    if (z != RationalVector(l * x + Rational(1 - l) * y)) return std::string("fixture point inconsistent");
    if (!(u(z) < std::min(u(x), u(y)))) return std::string("fixture is no longer a violation");
    if (!found || found->x != x || found->y != y || found->lambda != l) {
      return std::string("search no longer reproduces the fixture witness");
    }
    return std::nullopt;
  });
}

// Criterion 8: upward equivalence, cone laws and relation laws.
void structural_laws(CriterionResult& out, const SuiteOptions& o, std::size_t count) {
  run_instances(out, count, o.threads, [&](std::size_t i) -> std::optional<std::string> {
    Random rng(derive_seed(o.seed, 81, i));
    const std::size_t n = 2 + rng.below(2);
    const Cone cone = random_cone(rng, n, rng.coin());
    Polyhedron p{FinitePointSet(n), {}};
    const std::size_t nv = 1 + rng.below(3);
    while (p.vertices.size() < nv) p.vertices.insert(rng.point(n));
    switch (rng.below(3)) {
      case 0:
        p.rays = cone.generators();
        p.rays.push_back(random_pointed_cone(rng, n, true).generators().front());
        break;
      case 1:
        for (const auto& g : cone.generators()) {
          if (rng.below(3) != 0) p.rays.push_back(g);
        }
        break;
      default:
        p.rays = random_pointed_cone(rng, n, true).generators();
        break;
    }
    const bool plain = is_upward(p, cone);
    const bool closed = is_upward(p, k_closure(cone));
    const Cone recession(n, p.rays, true);
    const bool brute = std::all_of(cone.generators().begin(), cone.generators().end(),
                                   [&](const RationalVector& g) { return oracle::cone_contains(recession, g); });
    if (plain != closed || plain != brute) return std::string("upward verdicts disagree");
    return std::nullopt;
  });

  run_instances(out, count, o.threads, [&](std::size_t i) -> std::optional<std::string> {
    Random rng(derive_seed(o.seed, 82, i));
    const std::size_t n = 2 + rng.below(2);
    const bool pointed_case = rng.coin();
    const Cone cone = pointed_case ? random_pointed_cone(rng, n, true) : random_cone(rng, n, true);
    const auto [mu1, c1] = random_cone_vector(rng, cone);
    const auto [mu2, c2] = random_cone_vector(rng, cone);
    if (!cone_contains(cone, c1).member || !cone_contains(cone, c2).member) {
      return std::string("sampled member rejected");
    }
    if (!cone_contains(cone, c1 + c2).member) return std::string("sum of members left the cone");
    if (is_pointed(cone)) {
      const Cone open = cone.with_zero(false);
      if (is_zero(c1 + c2) || !cone_contains(open, c1 + c2).member) {
        return std::string("pointed cone without zero is not closed under sums");
      }
      const RationalVector x = rng.point(n);
      if (!is_zero(c1) && relate(cone, x, x + c1) != Comparability::Up) {
        return std::string("antisymmetry fails");
      }
    }
    const RationalVector x = rng.point(n);
    const RationalVector y = rng.coin() ? RationalVector(x + c1) : rng.point(n);
    const bool up = relate(cone, x, y) == Comparability::Up || relate(cone, x, y) == Comparability::Both;
    const Comparability neg = relate(cone.negated(), x, y);
    const bool down = neg == Comparability::Down || neg == Comparability::Both;
    if (up != down) return std::string("negation duality fails");
    return std::nullopt;
  });

  run_instances(out, count, o.threads, [&](std::size_t i) -> std::optional<std::string> {
    Random rng(derive_seed(o.seed, 83, i));
    FinitePointSet ground(2);
    const std::size_t size = 5 + rng.below(5);
    while (ground.size() < size) ground.insert(rng.point(2));
    std::vector<Rational> values(size);
    for (auto& v : values) v = rng.between(-3, 3);
    const auto u = [&](const RationalVector& p) { return values[ground.index_of(p)]; };
    const auto coarse = [&](const RationalVector& p) {
      mpz_class half;
      mpz_fdiv_q_ui(half.get_mpz_t(), values[ground.index_of(p)].get_num_mpz_t(), 2);
      return Rational(half);
    };
    const TotalPreorder r = TotalPreorder::from_utility(ground, u);
    const TotalPreorder r2 = TotalPreorder::from_utility(ground, coarse);
    if (!r.relation().subset_of(r2.relation())) return std::string("coarsening is not a superset");
    FinitePointSet s(2);
    for (const auto& p : ground) {
      if (rng.below(3) != 0) s.insert(p);
    }
    if (s.empty()) s.insert(ground[0]);

    const FinitePointSet by_def = maximals_by_definition(r.relation(), s);
    const FinitePointSet by_base = maximals_by_base(r.relation(), s);
    if (!by_def.same_points(by_base)) return std::string("definition and base characterization differ");
    Rational top = u(s[0]);
    for (const auto& p : s) top = std::max(top, u(p));
    FinitePointSet argmax(2);
    for (const auto& p : s) {
      if (u(p) == top) argmax.insert(p);
    }
    if (!by_base.same_points(argmax)) return std::string("maximals differ from the argmax");

    const FinitePointSet coarse_max = maximals(r2, s);
    const FinitePointSet co_max = convexified_maximals(r, s);
    for (const auto& m : by_base) {
      if (!coarse_max.contains(m)) return std::string("maximals shrink under a larger relation");
      if (!co_max.contains(m)) return std::string("maximals leave the convexified maximals");
    }
    for (const auto& m : by_base) {
      const std::size_t im = ground.index_of(m);
      for (const auto& x : s) {
        if (r.relation().related(ground.index_of(x), im) && !by_base.contains(x)) {
          return std::string("a point above a maximal is not maximal");
        }
      }
    }
    return std::nullopt;
  });
}

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& o) {
  const auto wanted = [&](int id) {
    return o.criteria.empty() || std::find(o.criteria.begin(), o.criteria.end(), id) != o.criteria.end();
  };
  const auto count = [&](std::size_t fallback) { return o.instances.value_or(fallback); };
  struct Entry {
    int id;
    const char* title;
    double limit;
    std::function<void(CriterionResult&)> run;
  };
  const std::vector<Entry> entries = {
      {1, "dominating element soundness", 60, [&](CriterionResult& r) { dominance_soundness(r, o, count(500)); }},
      {2, "Pareto optimum equivalences", 60, [&](CriterionResult& r) { pareto_equivalences(r, o, count(200)); }},
      {3, "disjoint hulls of upward X and decomposable Y", 60,
       [&](CriterionResult& r) { disjoint_hulls(r, o, count(200)); }},
      {4, "strict separation with nonpositive sign on the cone", 30,
       [&](CriterionResult& r) { strict_separation(r, o, count(100)); }},
      {5, "relative interior of upward polyhedra is upward", 30,
       [&](CriterionResult& r) { relative_interior_upward(r, o, count(100)); }},
      {6, "demand instance and convexification invariance corpus", 30,
       [&](CriterionResult& r) { demand_instance(r, o); }},
      {7, "antichain quasiconcavity versus quasiconcavity", 60,
       [&](CriterionResult& r) { quasiconcavity_contrast(r, o); }},
      {8, "structural laws of cones, upward sets and relations", 30,
       [&](CriterionResult& r) { structural_laws(r, o, count(200)); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    if (!wanted(e.id)) continue;
    CriterionResult r;
    r.id = e.id;
    r.title = e.title;
    r.limit_seconds = e.limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(r);
    } catch (const std::exception& ex) {
      ++r.instances;
      r.failures.push_back(std::string("aborted: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

nlohmann::json suite_report(const std::vector<CriterionResult>& results, const SuiteOptions& o,
                            bool with_timings) {
  nlohmann::json crit = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json c = {{"id", r.id},          {"title", r.title},       {"instances", r.instances},
                        {"passed", r.passed},  {"failures", r.failures}, {"ok", r.all_passed()}};
    if (with_timings) {
      c["seconds"] = r.seconds;
      c["limit_seconds"] = r.limit_seconds;
    }
    all = all && r.all_passed();
    crit.push_back(std::move(c));
  }
  return {{"seed", o.seed}, {"criteria", crit}, {"passed", all}};
}

}  // namespace acx
