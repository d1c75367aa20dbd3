#include "acx/errors.hpp"
#include "acx/oracle.hpp"
#include "acx/random.hpp"
#include "acx/sets.hpp"
#include "support.hpp"

using namespace acx;
using namespace acx::test;

TEST_SUITE("sets") {

TEST_CASE("chains") {
  const Cone o = Cone::orthant(2);
  CHECK(is_chain(pts({"0,0", "1,1", "2,3"}), o));
  CHECK_FALSE(is_chain(pts({"0,0", "1,-1"}), o));
  CHECK(is_chain(pts({"0,0"}), cone({"1,2"}, false)));
  CHECK_THROWS_AS(ChainSet(pts({"0,0", "1,-1"}), o), PreconditionViolation);
}

TEST_CASE("antichains") {
  const Cone o = Cone::orthant(2);
  CHECK(is_antichain(pts({"0,1", "1,0"}), o));
  CHECK_FALSE(is_antichain(pts({"0,0", "1,1"}), o));
  const Cone ray = cone({"1,1"}, true);
  CHECK(is_antichain(pts({"0,2", "1,0", "2,-1"}), ray));
  // Oracle: no difference is a nonnegative multiple of (1,1).
  for (const auto& d : vs({"1,-2", "2,-3", "1,-1"})) CHECK_FALSE((d[0] == d[1] && d[0] >= 0));
}

TEST_CASE("grid antichain convexity") {
  const Cone o = Cone::orthant(2);
  CHECK(is_grid_antichain_convex(pts({"0,0", "1,1", "2,3"}), o, 4));
  CHECK_FALSE(is_grid_antichain_convex(pts({"0,0", "0,2", "2,0"}), o, 2));
  CHECK(is_grid_antichain_convex(pts({"0,2", "1,1", "2,0"}), o, 2));
  CHECK_THROWS_AS(is_grid_antichain_convex(pts({"0,0"}), o, 0), std::invalid_argument);
  // With a half step the midpoint (1/2,3/2) of (0,2) and (1,1) is required too.
  CHECK_FALSE(is_grid_antichain_convex(pts({"0,2", "1,1", "2,0"}), o, 2, Rational(1, 2)));
}

TEST_CASE("minkowski sums") {
  CHECK(minkowski_sum(pts({"0,0"}), pts({"1,2"})).same_points(pts({"1,2"})));
  CHECK(minkowski_sum(pts({"0,0", "1,0"}), pts({"0,0", "0,1"}))
            .same_points(pts({"0,0", "1,0", "0,1", "1,1"})));
  CHECK(minkowski_sum(pts({"0,0", "2,1"}), pts({"0,0", "1,2"}))
            .same_points(pts({"0,0", "2,1", "1,2", "3,3"})));
}

TEST_CASE("materialize") {
  const Cone o = Cone::orthant(2);
  const ChainSet y(pts({"0,0", "2,1"}), o);
  CHECK(materialize(DecomposableSet({y})).same_points(y.base()));
  const DecomposableSet two({y, ChainSet(pts({"0,0", "1,2"}), o)});
  CHECK(materialize(two).same_points(pts({"0,0", "2,1", "1,2", "3,3"})));
  const DecomposableSet three(
      {ChainSet(pts({"1,0"}), o), ChainSet(pts({"0,1"}), o), ChainSet(pts({"1,1"}), o)});
  CHECK(materialize(three).same_points(pts({"2,2"})));
  CHECK_THROWS_AS(DecomposableSet({y, ChainSet(pts({"0,0"}), cone({"1,1"}, true))}),
                  PreconditionViolation);
}

TEST_CASE("convex hull drops non-extreme points") {
  CHECK(convex_hull(pts({"0,0", "1,1", "1/2,1/2"})).vertices.same_points(pts({"0,0", "1,1"})));
  CHECK(convex_hull(pts({"3,4"})).vertices.same_points(pts({"3,4"})));
  CHECK(convex_hull(pts({"0,0", "2,0", "0,2", "1,1"})).vertices.same_points(pts({"0,0", "2,0", "0,2"})));
  CHECK(oracle::hull_contains(v("1,1"), vs({"0,0", "2,0", "0,2"})));
}

TEST_CASE("upward hulls") {
  const Cone o = Cone::orthant(2);
  const Polyhedron p = upward_hull(pts({"2,2"}), o);
  CHECK(p.vertices.same_points(pts({"2,2"})));
  CHECK(p.rays == vs({"1,0", "0,1"}));
  const Polyhedron q = upward_hull(pts({"0,0", "1,1"}), o);
  CHECK(same_polyhedron(q, Polyhedron{pts({"0,0"}), vs({"1,0", "0,1"})}));
  const Polyhedron e = upward_hull(pts({"0,0"}), Cone(2, {}, false));
  CHECK(e.vertices.same_points(pts({"0,0"})));
  CHECK(e.rays.empty());
}

TEST_CASE("upwardness") {
  const Cone o = Cone::orthant(2);
  CHECK(is_upward(Polyhedron{pts({"2,2"}), vs({"1,0", "0,1"})}, o));
  CHECK_FALSE(is_upward(Polyhedron{pts({"0,0", "1,1"}), {}}, o));
  CHECK(is_upward(Polyhedron{pts({"0,0"}), vs({"1,1"})}, cone({"2,2"}, false)));
}

TEST_CASE("random chains are chains and their hulls contain the base") {
  Random rng(21);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.below(3);
    const Cone c = random_pointed_cone(rng, n, rng.coin());
    const ChainSet chain = random_chain(rng, c, 1 + rng.below(6));
    const auto& base = chain.base();
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        const bool up = oracle::cone_contains(c, base[j] - base[i]);
        const bool down = oracle::cone_contains(c, base[i] - base[j]);
        CHECK((up || down));
      }
    }
    const Polyhedron h = convex_hull(base);
    for (const auto& p : base) CHECK(oracle::hull_contains(p, h.vertices.points()));
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
      std::vector<RationalVector> others;
      for (std::size_t j = 0; j < h.vertices.size(); ++j) {
        if (j != i) others.push_back(h.vertices[j]);
      }
      if (!others.empty()) CHECK_FALSE(oracle::hull_contains(h.vertices[i], others));
    }
  }
}

TEST_CASE("random point sets: chain and antichain predicates match pairwise enumeration") {
  Random rng(22);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.below(2);
    const Cone c = random_cone(rng, n, true);
    FinitePointSet s(n);
    const std::size_t k = 1 + rng.below(4);
    while (s.size() < k) s.insert(rng.coin() && !s.empty() ? s[0] + random_cone_vector(rng, c).second : rng.point(n));
    bool chain = true, antichain = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        const bool comparable = oracle::cone_contains(c, s[j] - s[i]) || oracle::cone_contains(c, s[i] - s[j]);
        chain = chain && comparable;
        antichain = antichain && !comparable;
      }
    }
    CHECK(is_chain(s, c) == chain);
    CHECK(is_antichain(s, c) == antichain);
  }
}

}  // TEST_SUITE
