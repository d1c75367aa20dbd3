#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acx/cone.hpp"
#include "acx/geometry.hpp"

namespace acx {

/// An exactly evaluable utility function.
struct Utility {
  std::string name;
  std::function<Rational(const RationalVector&)> eval;

  Rational operator()(const RationalVector& x) const { return eval(x); }
};

/// u(x1, x2) = x1 x2 / (x1 + 1) - 5 x1 + x2 on the nonnegative quadrant.
/// Throws PreconditionViolation on a negative coordinate and
/// DimensionMismatch outside dimension 2.
Rational paper_utility(const RationalVector& x);

/// Named utilities: "paper_6_3", "linear" (sum of coordinates), "min"
/// (smallest coordinate), "constant" (always 0) and "twin_peak"
/// (sum of coordinates plus |x1 - 1|, two separated maximizers on the
/// unit budget line of total 2). Throws std::invalid_argument on an
/// unknown name.
Utility utility_by_name(std::string_view name);
std::vector<std::string> utility_names();

/// The lattice {k * step} within [0, upper_i] in every coordinate.
struct GridDomain {
  std::size_t dimension = 0;
  Rational step;
  RationalVector upper;

  /// Throws PreconditionViolation unless step > 0 and upper >= 0 has the
  /// right length.
  void validate() const;
  /// All lattice points, lexicographically ordered.
  FinitePointSet points() const;
};

/// Linear price p.x with every p_i > 0, and wealth w >= 0.
struct PriceSystem {
  RationalVector price;
  Rational wealth;

  void validate() const;
  Rational cost(const RationalVector& x) const;
};

/// Grid points with p.x <= w.
FinitePointSet budget_set(const GridDomain& grid, const PriceSystem& price);

/// Maximizers of u over the budget set.
FinitePointSet demand(const Utility& u, const GridDomain& grid, const PriceSystem& price);

struct NonsatiationReport {
  bool holds = false;
  std::vector<RationalVector> violators;      // off the upper faces, no better neighbor
  std::vector<RationalVector> exempt_points;  // on an upper face, no better neighbor
};

/// Every grid point off the box's upper faces has a one-step neighbor
/// (one coordinate moved by +-step, staying in the grid) with larger utility.
NonsatiationReport check_local_nonsatiation(const Utility& u, const GridDomain& grid);

struct GrintaReport {
  bool equal = false;
  bool hypothesis_met = false;  // local nonsatiation on the grid
  FinitePointSet maximals;
  FinitePointSet convexified_maximals;
};

/// Maximals of R and of R^co over the budget set, where R(x) is the set of
/// grid points with utility at least u(x) and R^co(x) its convex hull.
GrintaReport check_grinta(const Utility& u, const GridDomain& grid, const PriceSystem& price);

struct BoundaryReport {
  FinitePointSet demand;
  bool on_hyperplane = false;         // p.x = w for every demand point
  bool antichain_orthant = false;
  std::vector<bool> antichain_cones;  // one verdict per supplied cone

  bool all() const;
};

/// Throws PreconditionViolation when no grid point satisfies p.x = w, or
/// when a supplied cone is not inside the nonnegative orthant.
BoundaryReport check_boundary_and_antichain(const Utility& u, const GridDomain& grid,
                                            const PriceSystem& price,
                                            const std::vector<Cone>& cones = {});

struct ConvexityReport {
  FinitePointSet demand;
  bool grid_antichain_convex = false;
  bool segment_closed = false;  // every grid point between two demand points is demand

  bool all() const { return grid_antichain_convex && segment_closed; }
};

/// Same alignment precondition as check_boundary_and_antichain.
ConvexityReport check_maximizer_convexity(const Utility& u, const GridDomain& grid,
                                          const PriceSystem& price, const Cone& cone,
                                          unsigned denominator);

struct QuasiconcavityWitness {
  RationalVector x;
  RationalVector y;
  Rational lambda;
  RationalVector z;  // lambda x + (1 - lambda) y, with u(z) < min(u(x), u(y))
};

struct QuasiconcavityReport {
  bool holds = false;
  std::size_t pairs_checked = 0;
  std::size_t evaluations = 0;
  std::optional<QuasiconcavityWitness> witness;
};

/// Checks u(lambda x + (1 - lambda) y) >= min(u(x), u(y)) on incomparable
/// grid pairs for every lambda = k/d with 2 <= d <= max_denominator. When
/// the grid has at most `samples` incomparable pairs they are all checked in
/// order; otherwise `samples` pairs are drawn with a seeded generator.
/// Stops at the first violation.
QuasiconcavityReport check_antichain_quasiconcavity(const Utility& u, const GridDomain& grid,
                                                    const Cone& cone, std::size_t samples,
                                                    std::uint64_t seed = 1,
                                                    unsigned max_denominator = 8);

}  // namespace acx
