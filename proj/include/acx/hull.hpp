#pragma once

#include <optional>
#include <span>
#include <vector>

#include "acx/geometry.hpp"
#include "acx/rational.hpp"

namespace acx {

/// Affine functional certifying that a point lies outside a polyhedron:
/// normal.v <= bound for every vertex v, normal.r <= 0 for every ray r,
/// and normal.p > bound for the excluded point p.
struct Separator {
  RationalVector normal;
  Rational bound;
};

struct HullMembership {
  bool member = false;
  RationalVector vertex_weights;  // >= 0, sum 1 (when member)
  RationalVector ray_weights;     // >= 0 (when member)
  std::optional<Separator> certificate;  // when not a member
};

/// Decides p in co(vertices) + cone(rays) by one feasibility LP.
/// Throws PreconditionViolation on an empty vertex list and
/// DimensionMismatch on inconsistent dimensions.
HullMembership hull_membership(const RationalVector& p, std::span<const RationalVector> vertices,
                               std::span<const RationalVector> rays = {});

HullMembership hull_membership(const RationalVector& p, const Polyhedron& poly);

/// Arithmetic re-check of a membership verdict against the generators.
bool verify_membership(const RationalVector& p, std::span<const RationalVector> vertices,
                       std::span<const RationalVector> rays, const HullMembership& m);

/// p in ri(poly). A point of co(V) + cone(R) is relatively interior iff it
/// admits a representation with every vertex and every ray weight strictly
/// positive; the LP maximizes the smallest weight and compares it with 0.
bool relative_interior_membership(const RationalVector& p, const Polyhedron& poly);

/// Nonnegative combination of `generators` equal to v, if one exists.
std::optional<RationalVector> conic_combination(const RationalVector& v,
                                                std::span<const RationalVector> generators);

}  // namespace acx
