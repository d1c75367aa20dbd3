#include <algorithm>

#include "acx/errors.hpp"
#include "acx/hull.hpp"
#include "acx/random.hpp"
#include "acx/separation.hpp"
#include "support.hpp"

using namespace acx;
using namespace acx::test;

namespace {

// Test-side evaluation of a separator: sup over X (rays must not escape) and
// inf over the finite Y.
struct Values {
  bool rays_ok = true;
  Rational sup_x;
  Rational inf_y;
};

Values evaluate(const RationalVector& f, const Polyhedron& x, const std::vector<RationalVector>& y) {
  Values out;
  for (const auto& r : x.rays) out.rays_ok = out.rays_ok && dot(f, r) <= 0;
  out.sup_x = dot(f, x.vertices[0]);
  for (const auto& p : x.vertices) out.sup_x = std::max(out.sup_x, dot(f, p));
  out.inf_y = dot(f, y[0]);
  for (const auto& p : y) out.inf_y = std::min(out.inf_y, dot(f, p));
  return out;
}

const Polyhedron kQuadrantFrom22{pts({"2,2"}), vs({"1,0", "0,1"})};
const Polyhedron kQuadrant{pts({"0,0"}), vs({"1,0", "0,1"})};

DecomposableSet chain_set(std::initializer_list<const char*> points) {
  return DecomposableSet({ChainSet(pts(points), Cone::orthant(2))});
}

}  // namespace

TEST_SUITE("separation") {

TEST_CASE("disjoint upward set and chain") {
  const DecomposableSet y = chain_set({"0,0", "1,1"});
  const DisjointnessResult r = hulls_disjoint(kQuadrantFrom22, y);
  CHECK(r.disjoint);
  REQUIRE(r.separator.has_value());
  const Values e = evaluate(r.separator->functional, kQuadrantFrom22, vs({"0,0", "1,1"}));
  CHECK(e.rays_ok);
  CHECK(e.sup_x < e.inf_y);
  CHECK(verify_disjointness(kQuadrantFrom22, y, r));
}

TEST_CASE("shared point") {
  const Polyhedron x{pts({"0,0"}), {}};
  const DecomposableSet y = chain_set({"0,0"});
  const DisjointnessResult r = hulls_disjoint(x, y);
  CHECK_FALSE(r.disjoint);
  REQUIRE(r.common_point.has_value());
  CHECK(*r.common_point == v("0,0"));
  CHECK(verify_disjointness(x, y, r));
}

TEST_CASE("half-line and an off-line point") {
  const Polyhedron x{pts({"0,0"}), vs({"1,0"})};
  const DecomposableSet y = chain_set({"-1,1"});
  const DisjointnessResult r = hulls_disjoint(x, y);
  CHECK(r.disjoint);
  CHECK(verify_disjointness(x, y, r));
}

TEST_CASE("tampered disjointness results are rejected") {
  const DecomposableSet y = chain_set({"0,0", "1,1"});
  DisjointnessResult r = hulls_disjoint(kQuadrantFrom22, y);
  r.separator->functional = v("1,1");
  CHECK_FALSE(verify_disjointness(kQuadrantFrom22, y, r));
}

TEST_CASE("strict separation of an upward set from a segment") {
  const Polyhedron y{pts({"0,0", "1,1"}), {}};
  const SeparationResult s = strict_separator(kQuadrantFrom22, y);
  CHECK(s.kind == SeparationKind::StrictlySeparated);
  const Values e = evaluate(s.functional, kQuadrantFrom22, y.vertices.points());
  CHECK(e.rays_ok);
  CHECK(e.inf_y - e.sup_x >= 1);
  CHECK(*s.sup_on_x == e.sup_x);
  CHECK(*s.inf_on_y == e.inf_y);
  CHECK(separator_sign_check(s.functional, Cone::orthant(2)));
  for (const auto& c : s.functional) CHECK(c.get_den() == 1);
  CHECK(verify_separation(kQuadrantFrom22, y.vertices.points(), s));
}

TEST_CASE("strict separation of two points") {
  const Polyhedron x{pts({"0,0"}), {}};
  const Polyhedron y{pts({"1,0"}), {}};
  const SeparationResult s = strict_separator(x, y);
  const Values e = evaluate(s.functional, x, y.vertices.points());
  CHECK(e.inf_y - e.sup_x >= 1);
  CHECK(s.functional[0] > 0);
}

TEST_CASE("strict separation of parallel segments") {
  const Polyhedron x{pts({"0,0", "0,1"}), {}};
  const Polyhedron y{pts({"2,0", "2,1"}), {}};
  const SeparationResult s = strict_separator(x, y);
  CHECK(s.functional[1] == 0);
  CHECK(s.functional[0] > 0);
  CHECK(verify_separation(x, y.vertices.points(), s));
}

TEST_CASE("strict separation preconditions") {
  const Polyhedron x{pts({"0,0"}), {}};
  CHECK_THROWS_AS(strict_separator(x, Polyhedron{pts({"0,0", "1,1"}), {}}), PreconditionViolation);
  CHECK_THROWS_AS(strict_separator(x, Polyhedron{pts({"1,1"}), vs({"1,0"})}), PreconditionViolation);
}

TEST_CASE("proper separation from the orthant") {
  const Cone o = Cone::orthant(2);
  const DecomposableSet y = chain_set({"-1,-1"});
  const SeparationResult s = proper_separator(kQuadrant, y, o);
  const Values e = evaluate(s.functional, kQuadrant, vs({"-1,-1"}));
  CHECK(e.rays_ok);
  CHECK(e.sup_x == 0);
  CHECK(e.sup_x <= e.inf_y);
  CHECK(dot(s.functional, v("-1,-1")) > 0);
  CHECK(separator_sign_check(s.functional, o));
  CHECK(verify_separation(kQuadrant, vs({"-1,-1"}), s));
}

TEST_CASE("proper separation of a touching chain") {
  const Cone o = Cone::orthant(2);
  const DecomposableSet y = chain_set({"0,0", "-1,-2"});
  for (const auto& p : vs({"0,0", "-1,-2"})) CHECK_FALSE(relative_interior_membership(p, kQuadrant));
  const SeparationResult s = proper_separator(kQuadrant, y, o);
  const Values e = evaluate(s.functional, kQuadrant, vs({"0,0", "-1,-2"}));
  CHECK(e.rays_ok);
  CHECK(e.sup_x <= e.inf_y);
  REQUIRE(s.strict_pair.has_value());
  CHECK(s.strict_pair->second == v("-1,-2"));
  CHECK(dot(s.functional, s.strict_pair->first) < dot(s.functional, s.strict_pair->second));
  CHECK(verify_separation(kQuadrant, vs({"0,0", "-1,-2"}), s));
}

TEST_CASE("proper separation of two points") {
  const Polyhedron x{pts({"0,0"}), {}};
  const SeparationResult s = proper_separator(x, chain_set({"1,1"}), Cone::zero(2));
  CHECK(dot(s.functional, v("1,1")) > 0);
}

TEST_CASE("proper separation preconditions") {
  const Cone o = Cone::orthant(2);
  CHECK_THROWS_AS(proper_separator(Polyhedron{pts({"0,0", "1,1"}), {}}, chain_set({"-1,-1"}), o),
                  PreconditionViolation);
  CHECK_THROWS_AS(proper_separator(kQuadrant, chain_set({"1,1"}), o), PreconditionViolation);
}

TEST_CASE("sign check") {
  CHECK(separator_sign_check(v("-1,-1"), Cone::orthant(2)));
  CHECK_FALSE(separator_sign_check(v("1,0"), Cone::orthant(2)));
  const Cone c = cone({"1,1", "1,0"}, true);
  CHECK(separator_sign_check(v("-2,1"), c));
  CHECK(dot(v("-2,1"), v("1,1")) == -1);
  CHECK(dot(v("-2,1"), v("1,0")) == -2);
}

TEST_CASE("random disjoint pairs separate strictly with gap one") {
  // Generators of random pointed cones have positive coordinate sums, so
  // f = -(1,...,1) is nonpositive on C; Y is drawn below the level of X.
  Random rng(41);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 2 + rng.below(2);
    const Cone c = random_pointed_cone(rng, n, true);
    const ChainSet chain = random_chain(rng, c, 1 + rng.below(3));
    const Polyhedron x = upward_hull(chain.base(), c);
    Rational low = sum(chain.base()[0]);
    for (const auto& p : chain.base()) low = std::min(low, sum(p));
    FinitePointSet yp(n);
    const std::size_t k = 1 + rng.below(3);
    while (yp.size() < k) {
      RationalVector p = rng.point(n);
      p[0] += low - sum(p) - 1 - rng.below(3);
      yp.insert(std::move(p));
    }
    const SeparationResult s = strict_separator(x, Polyhedron{yp, {}});
    const Values e = evaluate(s.functional, x, yp.points());
    CHECK(e.rays_ok);
    CHECK(e.inf_y - e.sup_x >= 1);
    CHECK(separator_sign_check(s.functional, c));
    CHECK(verify_separation(x, yp.points(), s));
    for (const auto& p : yp) CHECK_FALSE(hull_membership(p, x).member);
  }
}

}  // TEST_SUITE
