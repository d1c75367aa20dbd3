#include "acx/dominance.hpp"
#include "acx/errors.hpp"
#include "acx/oracle.hpp"
#include "acx/random.hpp"
#include "support.hpp"

using namespace acx;
using namespace acx::test;

namespace {

// Brute force: points z of `s` with z - y componentwise nonnegative.
std::vector<RationalVector> orthant_dominators(const RationalVector& y, const FinitePointSet& s) {
  std::vector<RationalVector> out;
  for (const auto& z : s) {
    if (nonnegative(z - y)) out.push_back(z);
  }
  return out;
}

DecomposableSet two_summands() {
  const Cone o = Cone::orthant(2);
  return DecomposableSet({ChainSet(pts({"0,0", "2,1"}), o), ChainSet(pts({"0,0", "1,2"}), o)});
}

}  // namespace

TEST_SUITE("dominance") {

TEST_CASE("chain domination of a midpoint") {
  const ChainSet y(pts({"0,0", "2,1"}), Cone::orthant(2));
  const ChainDomination d = dominating_element_chain(v("1,1/2"), v("1/2,1/2"), y, Cone::orthant(2));
  CHECK(d.witness == v("2,1"));
  CHECK(d.cone_vector == v("1,1/2"));
  CHECK(orthant_dominators(v("1,1/2"), y.base()) == vs({"2,1"}));
}

TEST_CASE("chain domination of a single point") {
  const Cone c = cone({"1,2"}, true);
  const ChainSet y(pts({"5,5"}), c);
  const ChainDomination d = dominating_element_chain(v("5,5"), v("1"), y, c);
  CHECK(d.witness == v("5,5"));
  CHECK(is_zero(d.cone_vector));
}

TEST_CASE("chain domination of a centroid") {
  const ChainSet y(pts({"0,0", "1,1", "2,3"}), Cone::orthant(2));
  const RationalVector target = v("1,4/3");
  const ChainDomination d = dominating_element_chain(target, v("1/3,1/3,1/3"), y, Cone::orthant(2));
  CHECK(d.witness == v("2,3"));
  CHECK(d.cone_vector == v("1,5/3"));
  CHECK(orthant_dominators(target, y.base()) == vs({"2,3"}));
}

TEST_CASE("chain domination preconditions") {
  const ChainSet y(pts({"0,0", "2,1"}), Cone::orthant(2));
  CHECK_THROWS_AS(dominating_element_chain(v("1,1/2"), v("1/2,1/2"), y, cone({"1,0", "0,1"}, false)),
                  PreconditionViolation);
  CHECK_THROWS_AS(dominating_element_chain(v("1,1/2"), v("1/2,1/3"), y, Cone::orthant(2)),
                  PreconditionViolation);
  CHECK_THROWS_AS(dominating_element_chain(v("1,1"), v("1/2,1/2"), y, Cone::orthant(2)),
                  PreconditionViolation);
}

TEST_CASE("hull decomposition") {
  const DecomposableSet d = two_summands();
  const HullDecomposition h = decompose_in_hulls(v("3/2,3/2"), d);
  REQUIRE(h.member);
  REQUIRE(h.weights.size() == 2);
  // Any valid blocks must reproduce the target; here they are unique.
  CHECK(h.weights[0] == v("1/2,1/2"));
  CHECK(h.weights[1] == v("1/2,1/2"));
  CHECK(combine(h.weights[0], vs({"0,0", "2,1"})) + combine(h.weights[1], vs({"0,0", "1,2"})) ==
        v("3/2,3/2"));

  const DecomposableSet single({ChainSet(pts({"0,0", "2,1"}), Cone::orthant(2))});
  const HullDecomposition s = decompose_in_hulls(v("2,1"), single);
  REQUIRE(s.member);
  CHECK(s.weights[0] == v("0,1"));
}

TEST_CASE("hull decomposition of an outside point separates") {
  const DecomposableSet d = two_summands();
  const HullDecomposition h = decompose_in_hulls(v("10,10"), d);
  REQUIRE_FALSE(h.member);
  REQUIRE(h.certificate.has_value());
  CHECK(dot(h.certificate->normal, v("10,10")) > h.certificate->bound);
  for (const auto& p : materialize(d)) CHECK(dot(h.certificate->normal, p) <= h.certificate->bound);
  CHECK_THROWS_AS(dominating_element(v("10,10"), d), PreconditionViolation);
}

TEST_CASE("dominating element of a two-summand sum") {
  const DecomposableSet d = two_summands();
  const DominationCertificate c = dominating_element(v("3/2,3/2"), d);
  CHECK(c.witness == v("3,3"));
  CHECK(c.cone_vector == v("3/2,3/2"));
  CHECK(verify_certificate(c, d));
  CHECK(orthant_dominators(v("3/2,3/2"), materialize(d)) == vs({"3,3"}));
}

TEST_CASE("dominated element of a two-summand sum") {
  const DecomposableSet d = two_summands();
  const DominationCertificate c = dominated_element(v("3/2,3/2"), d);
  CHECK(c.direction == DominationCertificate::Direction::Dominated);
  CHECK(c.witness == v("0,0"));
  CHECK(c.cone_vector == v("3/2,3/2"));
  CHECK(verify_certificate(c, d));
}

TEST_CASE("singleton summands dominate with their sum") {
  const Cone o = Cone::orthant(2);
  const DecomposableSet d({ChainSet(pts({"1,0"}), o), ChainSet(pts({"0,1"}), o)});
  const DominationCertificate c = dominating_element(v("1,1"), d);
  CHECK(c.witness == v("1,1"));
  CHECK(is_zero(c.cone_vector));
  const DominationCertificate e = dominated_element(v("1,1"), d);
  CHECK(e.witness == v("1,1"));
}

TEST_CASE("dominated element of a chain maximum is the minimum or below") {
  const Cone o = Cone::orthant(2);
  const DecomposableSet d({ChainSet(pts({"0,0", "1,1", "2,3"}), o)});
  const DominationCertificate c = dominated_element(v("2,3"), d);
  CHECK(nonnegative(v("2,3") - c.witness));
  CHECK(verify_certificate(c, d));
}

TEST_CASE("tampered certificates are rejected") {
  const DecomposableSet d = two_summands();
  DominationCertificate c = dominating_element(v("3/2,3/2"), d);
  DominationCertificate bad = c;
  bad.witness = v("3,2");
  CHECK_FALSE(verify_certificate(bad, d));
  bad = c;
  bad.cone_coefficients[0] = -1;
  CHECK_FALSE(verify_certificate(bad, d));
  bad = c;
  bad.decomposition[0] = v("1,0");
  CHECK_FALSE(verify_certificate(bad, d));
}

TEST_CASE("finite Pareto optima") {
  const Cone o = Cone::orthant(2);
  CHECK(pareto_optima_finite(pts({"0,0", "1,1", "1,0"}), o).same_points(pts({"1,1"})));
  const FinitePointSet anti = pts({"0,2", "1,1", "2,0"});
  CHECK(pareto_optima_finite(anti, o).same_points(anti));
  CHECK(pareto_optima_finite(pts({"0,0"}), cone({"1,3"}, false)).same_points(pts({"0,0"})));
}

TEST_CASE("Pareto optimality in the hull") {
  const Cone o = Cone::orthant(2);
  const DecomposableSet d({ChainSet(pts({"0,0", "1,1"}), o)});
  CHECK(is_pareto_in_hull(v("1,1"), d));
  CHECK_FALSE(is_pareto_in_hull(v("1/2,1/2"), d));
  const DecomposableSet s({ChainSet(pts({"0,1"}), o), ChainSet(pts({"1,0"}), o)});
  CHECK(is_pareto_in_hull(v("1,1"), s));
  CHECK_THROWS_AS(is_pareto_in_hull(v("5,5"), d), PreconditionViolation);
}

TEST_CASE("equivalence report on small sets") {
  const EquivalenceReport r = check_equivalences(two_summands());
  CHECK(r.all());
  CHECK(r.optima.same_points(pts({"3,3"})));
  const EquivalenceReport one = check_equivalences(DecomposableSet({ChainSet(pts({"1,2"}), Cone::orthant(2))}));
  CHECK(one.all());
  CHECK(one.optima.same_points(pts({"1,2"})));
}

TEST_CASE("zero invariance also holds for a line cone") {
  const Cone line = cone({"1,0", "-1,0"}, false);
  const FinitePointSet y = pts({"0,0", "1,0", "3,0"});
  CHECK(pareto_optima_finite(y, line).same_points(pareto_optima_finite(y, line.with_zero(true))));
  // Every point dominates every other along the line.
  CHECK(pareto_optima_finite(y, line).empty());
}

TEST_CASE("random sums: certificates verify and brute force finds dominators") {
  Random rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng.below(3);
    const Cone c = random_pointed_cone(rng, n, rng.coin());
    const DecomposableSet d = random_decomposable(rng, c, 3, 4);
    const FinitePointSet all = materialize(d);
    const Cone k = k_closure(c);
    for (int h = 0; h < 3; ++h) {
      const RationalVector y = random_hull_point(rng, d).second;
      CHECK(oracle::hull_contains(y, all.points()));
      const DominationCertificate up = dominating_element(y, d);
      const DominationCertificate down = dominated_element(y, d);
      CHECK(verify_certificate(up, d));
      CHECK(verify_certificate(down, d));
      CHECK(all.contains(up.witness));
      CHECK(all.contains(down.witness));
      CHECK(oracle::cone_contains(k, up.witness - y));
      CHECK(oracle::cone_contains(k, y - down.witness));
    }
  }
}

TEST_CASE("random sums: equivalence report against enumeration") {
  Random rng(32);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng.below(2);
    const Cone c = random_pointed_cone(rng, n, rng.coin());
    const DecomposableSet d = random_decomposable(rng, c, 2, 4);
    const EquivalenceReport r = check_equivalences(d);
    CHECK(r.all());
    CHECK(r.optima.same_points(oracle::pareto_optima(materialize(d), c)));
  }
}

}  // TEST_SUITE
