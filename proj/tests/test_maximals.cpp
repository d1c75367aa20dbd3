#include <algorithm>

#include "acx/economy.hpp"
#include "acx/errors.hpp"
#include "acx/oracle.hpp"
#include "acx/random.hpp"
#include "acx/relation.hpp"
#include "acx/sets.hpp"
#include "support.hpp"

using namespace acx;
using namespace acx::test;

namespace {

// Direct transcription of the demand example utility, kept apart from the library.
Rational formula(const RationalVector& x) {
  return Rational(x[0] * x[1] / (x[0] + 1) - 5 * x[0] + x[1]);
}

Rational coordinate_sum(const RationalVector& x) { return sum(x); }

FinitePointSet argmax(const FinitePointSet& s, Rational (*u)(const RationalVector&)) {
  Rational best = u(s[0]);
  for (const auto& p : s) best = std::max(best, u(p));
  FinitePointSet out(s.dimension());
  for (const auto& p : s) {
    if (u(p) == best) out.insert(p);
  }
  return out;
}

FinitePointSet box(int upper) {
  FinitePointSet out(2);
  for (int a = 0; a <= upper; ++a) {
    for (int b = 0; b <= upper; ++b) out.insert({Rational(a), Rational(b)});
  }
  return out;
}

const GridDomain kBox2{2, Rational(1), {Rational(2), Rational(2)}};
const GridDomain kBox4{2, Rational(1), {Rational(4), Rational(4)}};
const PriceSystem kUnit{{Rational(1), Rational(1)}, Rational(2)};

}  // namespace

TEST_SUITE("maximals") {

TEST_CASE("maximals of a utility preorder are its argmax") {
  const FinitePointSet s = pts({"0,0", "1,0", "1,1"});
  const TotalPreorder r = TotalPreorder::from_utility(s, coordinate_sum);
  CHECK(maximals(r, s).same_points(pts({"1,1"})));
  CHECK(maximals(r, s).same_points(argmax(s, coordinate_sum)));
}

TEST_CASE("the full relation keeps everything") {
  const FinitePointSet s = pts({"0,0", "1,0", "1,1"});
  const FiniteRelation all = FiniteRelation::from_predicate(s, [](const auto&, const auto&) { return true; });
  CHECK(maximals(all, s).same_points(s));
}

TEST_CASE("domination relation maximals are the Pareto optima") {
  const FinitePointSet s = pts({"0,0", "1,1", "1,0"});
  const Cone o = Cone::orthant(2);
  const FiniteRelation d = FiniteRelation::from_predicate(
      s, [&](const RationalVector& t, const RationalVector& x) { return nonnegative(t - x); });
  CHECK(d.is_total());
  CHECK(maximals(d, s).same_points(pts({"1,1"})));
  CHECK(maximals(d, s).same_points(oracle::pareto_optima(s, o)));

  const FinitePointSet w = pts({"0,0", "0,1", "1,0"});
  const FiniteRelation e = FiniteRelation::from_predicate(
      w, [&](const RationalVector& t, const RationalVector& x) { return nonnegative(t - x); });
  CHECK_FALSE(e.is_total());
  CHECK(maximals(e, w).same_points(pts({"0,1", "1,0"})));
  CHECK(maximals(e, w).same_points(oracle::pareto_optima(w, o)));
}

TEST_CASE("maximals reject points outside the ground set") {
  const FinitePointSet s = pts({"0,0", "1,0"});
  const TotalPreorder r = TotalPreorder::from_utility(s, coordinate_sum);
  CHECK_THROWS_AS(maximals(r, pts({"5,5"})), PreconditionViolation);
}

TEST_CASE("non-total relations are refused as preorders") {
  const FinitePointSet s = pts({"0,1", "1,0"});
  const FiniteRelation d = FiniteRelation::from_predicate(
      s, [](const RationalVector& t, const RationalVector& x) { return nonnegative(t - x); });
  CHECK_THROWS_AS(TotalPreorder{d}, PreconditionViolation);
}

TEST_CASE("convexified maximals") {
  const FinitePointSet one = pts({"1,1"});
  const TotalPreorder r = TotalPreorder::from_utility(box(2), coordinate_sum);
  CHECK(convexified_maximals(r, one).same_points(one));
  const FinitePointSet budget = budget_set(kBox2, kUnit);
  CHECK(convexified_maximals(r, budget).same_points(maximals(r, budget)));
  CHECK(maximals(r, budget).same_points(pts({"0,2", "1,1", "2,0"})));
}

TEST_CASE("budget sets") {
  CHECK(budget_set(kBox2, kUnit).same_points(pts({"0,0", "0,1", "0,2", "1,0", "1,1", "2,0"})));
  CHECK(budget_set(kBox2, {{Rational(1), Rational(1)}, Rational(0)}).same_points(pts({"0,0"})));
  CHECK_THROWS_AS((PriceSystem{{Rational(1), Rational(1)}, Rational(-1)}.validate()), PreconditionViolation);
  CHECK_THROWS_AS((PriceSystem{{Rational(0), Rational(1)}, Rational(1)}.validate()), PreconditionViolation);
}

TEST_CASE("demand example utility values") {
  CHECK(paper_utility(v("0,2")) == 2);
  CHECK(paper_utility(v("0,0")) == 0);
  CHECK(paper_utility(v("1,1")) == Rational(-7, 2));
  for (const auto& p : box(4)) CHECK(paper_utility(p) == formula(p));
  CHECK_THROWS_AS(paper_utility(v("-1,0")), PreconditionViolation);
  CHECK_THROWS_AS(paper_utility(v("1,0,0")), DimensionMismatch);
}

TEST_CASE("demand") {
  const Utility u = utility_by_name("paper_6_3");
  const FinitePointSet d = demand(u, kBox2, kUnit);
  CHECK(d.same_points(pts({"0,2"})));
  CHECK(u(d[0]) == 2);
  CHECK(d.same_points(argmax(budget_set(kBox2, kUnit), formula)));
  CHECK(demand(u, kBox4, kUnit).same_points(pts({"0,2"})));
  CHECK(demand(utility_by_name("linear"), kBox2, kUnit).same_points(pts({"0,2", "1,1", "2,0"})));
  CHECK(demand(u, kBox2, {{Rational(1), Rational(1)}, Rational(0)}).same_points(pts({"0,0"})));
  CHECK_THROWS_AS(utility_by_name("nope"), std::invalid_argument);
}

TEST_CASE("local nonsatiation") {
  CHECK(check_local_nonsatiation(utility_by_name("linear"), kBox4).holds);
  const NonsatiationReport c = check_local_nonsatiation(utility_by_name("constant"), kBox4);
  CHECK_FALSE(c.holds);
  CHECK(c.violators.size() == 16);  // the 4x4 points off the upper faces
  CHECK(check_local_nonsatiation(utility_by_name("paper_6_3"), kBox4).holds);
  // Raising x2 by one step always helps: u(x1, x2 + 1) - u(x1, x2) = x1/(x1+1) + 1.
  for (const auto& p : box(3)) CHECK(formula({p[0], p[1] + 1}) > formula(p));
}

TEST_CASE("maximals against convexified maximals on budget sets") {
  const GrintaReport g = check_grinta(utility_by_name("paper_6_3"), kBox4, kUnit);
  CHECK(g.equal);
  CHECK(g.hypothesis_met);
  CHECK(g.maximals.same_points(pts({"0,2"})));
  CHECK(check_grinta(utility_by_name("linear"), kBox4, kUnit).equal);
  const GrintaReport c = check_grinta(utility_by_name("constant"), kBox4, kUnit);
  CHECK_FALSE(c.hypothesis_met);
  CHECK(c.equal);
  CHECK(c.maximals.same_points(budget_set(kBox4, kUnit)));
}

TEST_CASE("demand lies on the budget line and is an antichain") {
  const BoundaryReport b = check_boundary_and_antichain(utility_by_name("paper_6_3"), kBox4, kUnit,
                                                        {cone({"1,1"}, true)});
  CHECK(b.all());
  CHECK(b.demand.same_points(pts({"0,2"})));
  const BoundaryReport l = check_boundary_and_antichain(utility_by_name("linear"), kBox2, kUnit);
  CHECK(l.all());
  CHECK(l.demand.size() == 3);
  const BoundaryReport z =
      check_boundary_and_antichain(utility_by_name("linear"), kBox2, {{Rational(1), Rational(1)}, Rational(0)});
  CHECK(z.on_hyperplane);
  CHECK_THROWS_AS(check_boundary_and_antichain(utility_by_name("linear"), kBox2,
                                               {{Rational(2), Rational(2)}, Rational(1)}),
                  PreconditionViolation);
  CHECK_THROWS_AS(check_boundary_and_antichain(utility_by_name("linear"), kBox2, kUnit, {cone({"1,-1"}, true)}),
                  PreconditionViolation);
}

TEST_CASE("maximizer convexity") {
  const Cone o = Cone::orthant(2);
  CHECK(check_maximizer_convexity(utility_by_name("linear"), kBox2, kUnit, o, 2).all());
  CHECK(check_maximizer_convexity(utility_by_name("paper_6_3"), kBox4, kUnit, o, 2).all());
  // Two peaks at (0,2) and (2,0) with the valley (1,1) between them.
  const ConvexityReport t = check_maximizer_convexity(utility_by_name("twin_peak"), kBox2, kUnit, o, 2);
  CHECK(t.demand.same_points(pts({"0,2", "2,0"})));
  CHECK_FALSE(t.grid_antichain_convex);
  CHECK_FALSE(t.segment_closed);
}

TEST_CASE("antichain quasiconcavity") {
  const GridDomain half{2, Rational(1, 2), {Rational(4), Rational(4)}};
  const QuasiconcavityReport m = check_antichain_quasiconcavity(utility_by_name("min"), half, Cone::orthant(2), 300);
  CHECK(m.holds);
  CHECK(m.pairs_checked == 300);
  const QuasiconcavityReport p =
      check_antichain_quasiconcavity(utility_by_name("paper_6_3"), half, Cone::orthant(2), 300, 5);
  CHECK(p.holds);
  const QuasiconcavityReport z = check_antichain_quasiconcavity(utility_by_name("paper_6_3"), kBox4, Cone::zero(2), 1000);
  REQUIRE_FALSE(z.holds);
  REQUIRE(z.witness.has_value());
  const auto& w = *z.witness;
  CHECK(w.z == RationalVector(w.lambda * w.x + Rational(1 - w.lambda) * w.y));
  CHECK(formula(w.z) < std::min(formula(w.x), formula(w.y)));
}

TEST_CASE("random utility preorders obey the maximal laws") {
  Random rng(51);
  for (int t = 0; t < 100; ++t) {
    FinitePointSet ground(2);
    const std::size_t n = 2 + rng.below(6);
    while (ground.size() < n) ground.insert(rng.point(2));
    std::vector<Rational> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(Rational(rng.between(0, 3)));
    const auto u = [&](const RationalVector& x) { return values[ground.index_of(x)]; };
    const TotalPreorder r = TotalPreorder::from_utility(ground, u);
    FinitePointSet s(2);
    for (const auto& p : ground) {
      if (rng.coin()) s.insert(p);
    }
    if (s.empty()) s.insert(ground[0]);
    const FinitePointSet m = maximals(r, s);
    Rational best = u(s[0]);
    for (const auto& p : s) best = std::max(best, u(p));
    FinitePointSet expected(2);
    for (const auto& p : s) {
      if (u(p) == best) expected.insert(p);
    }
    CHECK(m.same_points(expected));
    CHECK(maximals_by_definition(r.relation(), s).same_points(maximals_by_base(r.relation(), s)));
    // Anything at least as good as a maximal element is maximal.
    for (const auto& y : m) {
      for (const auto& x : s) {
        if (u(x) >= u(y)) CHECK(m.contains(x));
      }
    }
    const FinitePointSet cm = convexified_maximals(r, s);
    for (const auto& p : m) CHECK(cm.contains(p));
  }
}

}  // TEST_SUITE
