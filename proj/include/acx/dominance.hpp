#pragma once

#include <optional>
#include <vector>

#include "acx/cone.hpp"
#include "acx/geometry.hpp"
#include "acx/hull.hpp"
#include "acx/sets.hpp"

namespace acx {

/// Proof object for "target is dominated by witness".
///
/// For a dominating certificate, cone_vector = witness - target; for a
/// dominated certificate, cone_vector = target - witness. Either way
/// cone_vector = sum cone_coefficients[i] * generators(K)[i] with
/// K = k_closure(C), the coefficients nonnegative, and target equal to the
/// sum over summands of their convex combinations.
struct DominationCertificate {
  enum class Direction { Dominating, Dominated };

  Direction direction = Direction::Dominating;
  RationalVector target;
  RationalVector witness;
  RationalVector cone_vector;
  RationalVector cone_coefficients;
  std::vector<RationalVector> decomposition;      // convex weights per summand
  std::vector<RationalVector> summand_witnesses;  // z_i, one chain point per summand
};

/// Independent arithmetic re-check of every field of a certificate against
/// the decomposable set it was issued for. Both directions are checked
/// against the same set: the coefficients always refer to the generators
/// of C itself.
bool verify_certificate(const DominationCertificate& cert, const DecomposableSet& d);

/// Result of the single-chain construction.
struct ChainDomination {
  RationalVector witness;      // z in Y
  RationalVector cone_vector;  // z - y, a member of C
};

/// Finds z in the chain with z - y in C, where y = sum weights[i] * base[i].
///
/// Follows the induction: points with zero weight are dropped; the first
/// listed point y1 is peeled off, the tail combination y0 is dominated by
/// some z0 in the chain, and then z0 is kept if z0 - y1 in C, or y1 is taken
/// if y1 - z0 in C. Chain points are always comparable, so the third
/// (incomparable) branch of the induction is never needed.
///
/// Throws PreconditionViolation when C lacks zero, when the weights are not
/// a convex combination of the base, or when an incomparable pair turns up.
ChainDomination dominating_element_chain(const RationalVector& y, const RationalVector& weights,
                                         const ChainSet& chain, const Cone& cone);

struct HullDecomposition {
  bool member = false;
  std::vector<RationalVector> weights;   // one convex weight block per summand
  std::optional<Separator> certificate;  // separates y from co(materialize(D))
};

/// One LP over all summand blocks: each block is a convex combination of its
/// chain, and the block sums add up to y. Works with co(A + B) = co A + co B,
/// so the materialized sum is never needed.
HullDecomposition decompose_in_hulls(const RationalVector& y, const DecomposableSet& d);

/// Witness z in the decomposable set with z - y in K = k_closure(C).
/// Throws PreconditionViolation carrying the separating functional when y
/// lies outside the hull.
DominationCertificate dominating_element(const RationalVector& y, const DecomposableSet& d);

/// Witness x in the decomposable set with y - x in K, obtained by running the
/// dominating construction for -C.
DominationCertificate dominated_element(const RationalVector& y, const DecomposableSet& d);

/// y in S is kept iff no other s in S has s - y in C.
FinitePointSet pareto_optima_finite(const FinitePointSet& s, const Cone& cone);

/// Whether y is a C-Pareto optimum of co(materialize(D)): maximizes the total
/// cone mass mu such that y + sum mu_j g_j stays in the hull; true iff that
/// optimum is 0. Pointedness makes positive mass equivalent to a nonzero cone
/// vector, so non-pointed cones are refused with PreconditionViolation, as
/// are points outside the hull.
bool is_pareto_in_hull(const RationalVector& y, const DecomposableSet& d);

struct EquivalenceReport {
  // O(C, Y) = O(C u {0}, Y)
  bool zero_invariance = false;
  // O(C, Y) = O(C, co Y) on Y, plus sampled hull points off Y being dominated.
  bool hull_invariance = false;
  // O(C, Y) = M(D, Y) for the domination relation D(y) = { x : x in y + C }.
  bool maximal_equivalence = false;

  FinitePointSet optima;
  FinitePointSet optima_with_zero;
  FinitePointSet domination_maximals;
  std::size_t hull_points_sampled = 0;

  bool all() const { return zero_invariance && hull_invariance && maximal_equivalence; }
};

/// Checks the three Pareto-optimum equalities on Y = materialize(D).
/// Requires a pointed cone.
EquivalenceReport check_equivalences(const DecomposableSet& d);

}  // namespace acx
