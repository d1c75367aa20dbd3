#include "acx/random.hpp"

#include <algorithm>

#include "acx/errors.hpp"

namespace acx {

Rational Random::rational() {
  const int num = between(-9, 9);
  const int den = between(1, 3);
  return ratio(num, den);
}

RationalVector Random::point(std::size_t n) {
  RationalVector p(n);
  for (auto& c : p) c = rational();
  return p;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 finalizer over a combined key.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream * 0x100000001ULL + index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

RationalVector positive_generator(Random& rng, std::size_t n) {
  while (true) {
    RationalVector g(n);
    Rational sum(0);
    for (auto& c : g) {
      c = rng.between(-2, 3);
      sum += c;
    }
    if (sum > 0) return g;
  }
}

std::vector<RationalVector> pointed_generators(Random& rng, std::size_t n) {
  if (rng.below(3) == 0) return Cone::orthant(n).generators();
  const std::size_t k = 1 + rng.below(n + 1);
  std::vector<RationalVector> gens;
  while (gens.size() < k) {
    RationalVector g = positive_generator(rng, n);
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

Cone random_pointed_cone(Random& rng, std::size_t n, bool contains_zero) {
  return Cone(n, pointed_generators(rng, n), contains_zero);
}

Cone random_cone(Random& rng, std::size_t n, bool contains_zero) {
  std::vector<RationalVector> gens = pointed_generators(rng, n);
  if (rng.below(3) == 0) gens.push_back(-gens[rng.below(gens.size())]);
  return Cone(n, std::move(gens), contains_zero);
}

std::pair<RationalVector, RationalVector> random_cone_vector(Random& rng, const Cone& cone) {
  const auto& gens = cone.generators();
  if (gens.empty()) throw PreconditionViolation("cone without generators");
  static const Rational choices[] = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  RationalVector mu(gens.size());
  bool positive = false;
  for (auto& m : mu) {
    m = choices[rng.below(4)];
    positive = positive || m > 0;
  }
  if (!positive) mu[rng.below(mu.size())] = 1;
  RationalVector v = zeros(cone.dimension());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (mu[i] != 0) v += mu[i] * gens[i];
  }
  return {std::move(mu), std::move(v)};
}

ChainSet random_chain(Random& rng, const Cone& cone, std::size_t size) {
  const std::size_t n = cone.dimension();
  std::vector<RationalVector> pts{rng.point(n)};
  for (std::size_t attempts = 0; pts.size() < size && attempts < 4 * size; ++attempts) {
    RationalVector step = random_cone_vector(rng, cone).second;
    if (is_zero(step)) continue;
    RationalVector next = pts.back() + step;
    if (std::find(pts.begin(), pts.end(), next) == pts.end()) pts.push_back(std::move(next));
  }
  rng.shuffle(pts);
  return ChainSet(FinitePointSet(n, std::move(pts)), cone);
}

DecomposableSet random_decomposable(Random& rng, const Cone& cone, std::size_t max_summands,
                                    std::size_t max_points) {
  const std::size_t summands = 1 + rng.below(max_summands);
  std::vector<ChainSet> chains;
  for (std::size_t i = 0; i < summands; ++i) {
    chains.push_back(random_chain(rng, cone, 1 + rng.below(max_points)));
  }
  return DecomposableSet(std::move(chains));
}

std::pair<std::vector<RationalVector>, RationalVector> random_hull_point(Random& rng,
                                                                       const DecomposableSet& d) {
  std::vector<RationalVector> blocks;
  RationalVector y = zeros(d.dimension());
  for (const auto& s : d.summands()) {
    const auto& base = s.base();
    RationalVector w(base.size());
    Rational total(0);
    for (auto& x : w) {
      x = rng.between(0, 5);
      total += x;
    }
    if (total == 0) {
      w[rng.below(w.size())] = 1;
      total = 1;
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      w[j] /= total;
      if (w[j] != 0) y += w[j] * base[j];
    }
    blocks.push_back(std::move(w));
  }
  return {std::move(blocks), std::move(y)};
}

}  // namespace acx
