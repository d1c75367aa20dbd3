#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "acx/cone.hpp"
#include "acx/sets.hpp"

namespace acx {

/// Seeded source for random instances.
///
/// Every draw is a plain modulo reduction of the 64-bit Mersenne Twister
/// output, which the standard fixes bit for bit; library distributions are
/// avoided because their algorithms vary between implementations.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  /// In [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool coin() { return (next() & 1U) != 0; }

  /// Numerator in [-9, 9], denominator in {1, 2, 3}.
  Rational rational();
  RationalVector point(std::size_t n);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream for instance `index` of family `stream`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// The orthant, or 1..n+1 small integer generators in the open half-space
/// {x : sum x > 0}, which makes the cone pointed.
Cone random_pointed_cone(Random& rng, std::size_t n, bool contains_zero);

/// Like random_pointed_cone, but one time in three a generator's negation is
/// added so that the cone contains a line.
Cone random_cone(Random& rng, std::size_t n, bool contains_zero);

/// Nonnegative combination of the generators with coefficients in
/// {0, 1/2, 1, 2} and at least one positive coefficient. Returns the
/// coefficients alongside the vector.
std::pair<RationalVector, RationalVector> random_cone_vector(Random& rng, const Cone& cone);

/// A random start point followed by cumulative nonzero cone steps, listed in
/// shuffled order. Requires a cone with at least one nonzero generator.
ChainSet random_chain(Random& rng, const Cone& cone, std::size_t size);

/// 1..max_summands chains of 1..max_points points each.
DecomposableSet random_decomposable(Random& rng, const Cone& cone, std::size_t max_summands,
                                    std::size_t max_points);

/// Random convex weights per summand (integers 0..5, at least one positive,
/// normalized); returns the weight blocks and the resulting hull point.
std::pair<std::vector<RationalVector>, RationalVector> random_hull_point(Random& rng,
                                                                       const DecomposableSet& d);

}  // namespace acx
