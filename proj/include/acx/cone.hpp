#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acx/rational.hpp"

namespace acx {

/// A finitely generated cone in Q^n.
///
/// Represents { sum mu_i g_i : mu >= 0, sum mu > 0 } together with 0 when
/// `contains_zero` is set. Without the flag, 0 belongs to the set only when
/// a nontrivial nonnegative combination of generators vanishes, which can
/// only happen for non-pointed generator lists. No generators and no zero is
/// the empty cone.
class Cone {
 public:
  Cone() = default;
  Cone(std::size_t dimension, std::vector<RationalVector> generators, bool contains_zero);

  /// The nonnegative orthant of Q^n, zero included.
  static Cone orthant(std::size_t dimension);
  /// {0}: no generators, zero included.
  static Cone zero(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  const std::vector<RationalVector>& generators() const { return generators_; }
  bool contains_zero() const { return contains_zero_; }

  Cone negated() const;
  Cone with_zero(bool flag) const;
  Cone with_generator(RationalVector g) const;

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<RationalVector> generators_;
  bool contains_zero_ = false;
};

struct ConeMembership {
  bool member = false;
  RationalVector coefficients;               // mu >= 0 over generators, when member
  std::optional<RationalVector> separator;   // y with y.g <= 0 for all g and y.v > 0
};

ConeMembership cone_contains(const Cone& cone, const RationalVector& v);

/// Arithmetic re-check of a cone membership verdict.
bool verify_cone_membership(const Cone& cone, const RationalVector& v, const ConeMembership& m);

/// C intersected with -C is contained in {0}.
bool is_pointed(const Cone& cone);

enum class Comparability { Up, Down, Both, Incomparable };

const char* to_string(Comparability c);

/// Up: y - x in C. Down: x - y in C.
Comparability relate(const Cone& cone, const RationalVector& x, const RationalVector& y);

inline bool comparable(Comparability c) { return c != Comparability::Incomparable; }

/// K = co(C u {0}). A finitely generated positive hull is already convex,
/// so this only switches the zero flag on.
Cone k_closure(const Cone& cone);

}  // namespace acx
