#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "acx/cone.hpp"
#include "acx/geometry.hpp"
#include "acx/sets.hpp"

namespace acx {

enum class SeparationKind { Separated, ProperlySeparated, StrictlySeparated };

const char* to_string(SeparationKind k);

/// A functional f with sup f[X] <= inf f[Y]; X is always on the sup side.
///
/// An absent sup_on_x stands for +infinity and an absent inf_on_y for
/// -infinity; neither occurs for a valid separator of nonempty sets.
struct SeparationResult {
  RationalVector functional;
  std::optional<Rational> sup_on_x;
  std::optional<Rational> inf_on_y;
  SeparationKind kind = SeparationKind::Separated;
  // x in X and y in Y with f.x < f.y (proper and strict results).
  std::optional<std::pair<RationalVector, RationalVector>> strict_pair;
};

struct DisjointnessResult {
  bool disjoint = false;
  // Common point with its representation in X and in co(Y).
  std::optional<RationalVector> common_point;
  RationalVector x_vertex_weights;
  RationalVector x_ray_weights;
  std::vector<RationalVector> y_weights;  // one convex block per summand
  // Strict separator built from the Farkas certificate.
  std::optional<SeparationResult> separator;
};

/// Decides whether X and co(materialize(Y)) share a point with one LP over
/// X's weights and the summand blocks of Y.
DisjointnessResult hulls_disjoint(const Polyhedron& x, const DecomposableSet& y);

/// Arithmetic re-check: either the common point is reproduced by both
/// weight systems, or the separator strictly separates X from every
/// combination of the summand blocks.
bool verify_disjointness(const Polyhedron& x, const DecomposableSet& y,
                         const DisjointnessResult& r);

/// Strict separator with gap >= 1, scaled to integer coordinates.
/// Throws PreconditionViolation when Y has rays or the sets intersect, and
/// InternalError if the LP fails on disjoint inputs.
SeparationResult strict_separator(const Polyhedron& x, const Polyhedron& y);

/// Proper separator of a C-upward X from the decomposable set Y.
///
/// Solves the weak separation LP once per candidate strictness witness:
/// first each point of Y (f.y >= a + 1), then each vertex of X
/// (f.v <= a - 1), then each ray of X (f.r <= -1). The first feasible
/// candidate wins. Throws PreconditionViolation when X is not C-upward,
/// when a point of Y lies in ri(X), or when no candidate succeeds.
SeparationResult proper_separator(const Polyhedron& x, const DecomposableSet& y, const Cone& cone);

/// f.g <= 0 for every generator g of C, hence on all of co(C u {0}).
bool separator_sign_check(const RationalVector& f, const Cone& cone);

/// Arithmetic re-check of a separator against X and a finite point set whose
/// hull is Y: the stated sup and inf are attained, rays do not escape, the
/// inequality matches the kind, and the strict pair (when present) lies in
/// X and Y with f.x < f.y.
bool verify_separation(const Polyhedron& x, std::span<const RationalVector> y_points,
                       const SeparationResult& s);

}  // namespace acx
