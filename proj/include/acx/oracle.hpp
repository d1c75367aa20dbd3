#pragma once

#include <optional>
#include <span>

#include "acx/cone.hpp"
#include "acx/geometry.hpp"

namespace acx::oracle {

// Brute-force deciders that never touch the simplex code. They enumerate
// generator subsets and solve square systems by Gaussian elimination, so
// they are only meant for desk-scale inputs.

/// Solves sum x_i cols[i] = v when the columns are linearly independent
/// and v lies in their span; nullopt otherwise.
std::optional<RationalVector> solve_independent(std::span<const RationalVector> cols,
                                                const RationalVector& v);

/// v in cone(G) by conic Caratheodory: some linearly independent subset of
/// G expresses v with nonnegative coefficients. Zero follows the cone's
/// set semantics.
bool cone_contains(const Cone& cone, const RationalVector& v);

/// p in co(points) by affine Caratheodory over affinely independent subsets.
bool hull_contains(const RationalVector& p, std::span<const RationalVector> points);

/// Points y of S with no other s in S satisfying s - y in C.
FinitePointSet pareto_optima(const FinitePointSet& s, const Cone& cone);

}  // namespace acx::oracle
