#include "acx/sets.hpp"

#include <stdexcept>
#include <string>

#include "acx/errors.hpp"
#include "acx/hull.hpp"

namespace acx {

namespace {

void check_dimension(const FinitePointSet& s, const Cone& cone) {
  if (!s.empty() && s.dimension() != cone.dimension()) {
    throw DimensionMismatch("set of dimension " + std::to_string(s.dimension()) +
                            " with cone of dimension " + std::to_string(cone.dimension()));
  }
}

bool on_lattice(const RationalVector& p, const Rational& step) {
  for (const auto& x : p) {
    const Rational q = x / step;
    if (q.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

ChainSet::ChainSet(FinitePointSet base, Cone cone) : base_(std::move(base)), cone_(std::move(cone)) {
  check_dimension(base_, cone_);
  for (std::size_t i = 0; i < base_.size(); ++i) {
    for (std::size_t j = i + 1; j < base_.size(); ++j) {
      if (!comparable(relate(cone_, base_[i], base_[j]))) {
        throw PreconditionViolation("not a chain: " + to_string(base_[i]) + " and " +
                                    to_string(base_[j]) + " are incomparable");
      }
    }
  }
}

ChainSet ChainSet::negated_cone() const { return ChainSet(base_, cone_.negated()); }

DecomposableSet::DecomposableSet(std::vector<ChainSet> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw PreconditionViolation("a decomposable set needs a summand");
  for (const auto& s : summands_) {
    if (s.base().empty()) throw PreconditionViolation("empty chain summand");
    if (s.dimension() != dimension()) {
      throw DimensionMismatch("summands of dimension " + std::to_string(s.dimension()) +
                              " and " + std::to_string(dimension()));
    }
    if (!(s.cone() == cone())) throw PreconditionViolation("summands use different cones");
  }
}

DecomposableSet DecomposableSet::negated_cone() const {
  std::vector<ChainSet> neg;
  for (const auto& s : summands_) neg.push_back(s.negated_cone());
  return DecomposableSet(std::move(neg));
}

bool is_chain(const FinitePointSet& s, const Cone& cone) {
  check_dimension(s, cone);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!comparable(relate(cone, s[i], s[j]))) return false;
    }
  }
  return true;
}

bool is_antichain(const FinitePointSet& s, const Cone& cone) {
  check_dimension(s, cone);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (comparable(relate(cone, s[i], s[j]))) return false;
    }
  }
  return true;
}

bool is_grid_antichain_convex(const FinitePointSet& s, const Cone& cone, unsigned denominator) {
  Rational step(1);
  if (!s.empty()) {
    std::vector<Rational> coords;
    for (const auto& p : s) coords.insert(coords.end(), p.begin(), p.end());
    step = Rational(1) / Rational(common_denominator(coords));
  }
  return is_grid_antichain_convex(s, cone, denominator, step);
}

bool is_grid_antichain_convex(const FinitePointSet& s, const Cone& cone, unsigned denominator,
                              const Rational& step) {
  if (denominator == 0) throw std::invalid_argument("denominator must be positive");
  if (step <= 0) throw std::invalid_argument("lattice step must be positive");
  check_dimension(s, cone);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (comparable(relate(cone, s[i], s[j]))) continue;
      for (unsigned k = 1; k < denominator; ++k) {
        const Rational lambda = ratio(k, denominator);
        const RationalVector z = lambda * s[i] + (1 - lambda) * s[j];
        if (on_lattice(z, step) && !s.contains(z)) return false;
      }
    }
  }
  return true;
}

FinitePointSet minkowski_sum(const FinitePointSet& a, const FinitePointSet& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("Minkowski sum of dimensions " + std::to_string(a.dimension()) +
                            " and " + std::to_string(b.dimension()));
  }
  FinitePointSet out(a.dimension());
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(x + y);
  }
  return out;
}

FinitePointSet materialize(const DecomposableSet& d) {
  FinitePointSet acc = d.summands().front().base();
  for (std::size_t i = 1; i < d.summands().size(); ++i) {
    acc = minkowski_sum(acc, d.summands()[i].base());
  }
  return acc;
}

Polyhedron convex_hull(const FinitePointSet& s) {
  if (s.empty()) throw PreconditionViolation("convex hull of an empty set");
  Polyhedron out{FinitePointSet(s.dimension()), {}};
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != i) others.push_back(s[j]);
    }
    if (others.empty() || !hull_membership(s[i], others).member) out.vertices.insert(s[i]);
  }
  return out;
}

Polyhedron upward_hull(const FinitePointSet& s, const Cone& cone) {
  check_dimension(s, cone);
  Polyhedron out = convex_hull(s);
  const Cone k = k_closure(cone);
  for (const auto& g : k.generators()) {
    if (!is_zero(g)) out.rays.push_back(g);
  }
  return out;
}

bool is_upward(const Polyhedron& poly, const Cone& cone) {
  validate(poly);
  if (poly.dimension() != cone.dimension()) {
    throw DimensionMismatch("polyhedron of dimension " + std::to_string(poly.dimension()) +
                            " with cone of dimension " + std::to_string(cone.dimension()));
  }
  for (const auto& g : cone.generators()) {
    if (!conic_combination(g, poly.rays)) return false;
  }
  return true;
}

bool polyhedron_contains(const Polyhedron& outer, const Polyhedron& inner) {
  validate(outer);
  validate(inner);
  for (const auto& v : inner.vertices) {
    if (!hull_membership(v, outer).member) return false;
  }
  for (const auto& r : inner.rays) {
    if (!conic_combination(r, outer.rays)) return false;
  }
  return true;
}

bool same_polyhedron(const Polyhedron& a, const Polyhedron& b) {
  return polyhedron_contains(a, b) && polyhedron_contains(b, a);
}

}  // namespace acx
