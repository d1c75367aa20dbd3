#pragma once

#include <doctest.h>

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "acx/cone.hpp"
#include "acx/geometry.hpp"
#include "acx/rational.hpp"

namespace acx {

// doctest prints these on failed comparisons.
inline std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
  return os << to_string(v);
}

}  // namespace acx

namespace acx::test {

inline RationalVector v(const char* text) { return parse_vector(text); }

inline Rational q(const char* text) { return parse_rational(text); }

inline std::vector<RationalVector> vs(std::initializer_list<const char*> texts) {
  std::vector<RationalVector> out;
  for (const char* t : texts) out.push_back(v(t));
  return out;
}

inline FinitePointSet pts(std::initializer_list<const char*> texts) {
  std::vector<RationalVector> list = vs(texts);
  const std::size_t n = list.front().size();
  return FinitePointSet(n, std::move(list));
}

inline Cone cone(std::initializer_list<const char*> gens, bool contains_zero) {
  std::vector<RationalVector> g = vs(gens);
  const std::size_t n = g.front().size();
  return Cone(n, std::move(g), contains_zero);
}

// Test-side arithmetic, kept free of library calls beyond vector algebra.
inline bool nonnegative(const RationalVector& x) {
  for (const auto& c : x) {
    if (c < 0) return false;
  }
  return true;
}

inline RationalVector combine(const RationalVector& weights, const std::vector<RationalVector>& points) {
  RationalVector out(points.front().size(), Rational(0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += weights[i] * points[i][k];
  }
  return out;
}

inline Rational sum(const RationalVector& x) {
  Rational s(0);
  for (const auto& c : x) s += c;
  return s;
}

}  // namespace acx::test
