#include "acx/cone.hpp"

#include <string>

#include "acx/errors.hpp"
#include "acx/lp.hpp"

namespace acx {

Cone::Cone(std::size_t dimension, std::vector<RationalVector> generators, bool contains_zero)
    : dimension_(dimension), generators_(std::move(generators)), contains_zero_(contains_zero) {
  for (const auto& g : generators_) {
    if (g.size() != dimension_) {
      throw DimensionMismatch("cone generator " + to_string(g) + " in dimension " +
                              std::to_string(dimension_));
    }
  }
}

Cone Cone::orthant(std::size_t dimension) {
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < dimension; ++i) {
    RationalVector e = zeros(dimension);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return Cone(dimension, std::move(gens), true);
}

Cone Cone::zero(std::size_t dimension) { return Cone(dimension, {}, true); }

Cone Cone::negated() const {
  std::vector<RationalVector> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(-g);
  return Cone(dimension_, std::move(gens), contains_zero_);
}

Cone Cone::with_zero(bool flag) const { return Cone(dimension_, generators_, flag); }

Cone Cone::with_generator(RationalVector g) const {
  auto gens = generators_;
  gens.push_back(std::move(g));
  return Cone(dimension_, std::move(gens), contains_zero_);
}

namespace {

// sum mu_i g_i = v, mu >= 0, optionally with sum mu = 1.
LpResult positive_hull_program(const Cone& cone, const RationalVector& v, bool normalize) {
  const auto& gens = cone.generators();
  LinearProgram lp(gens.size());
  for (std::size_t d = 0; d < v.size(); ++d) {
    RationalVector row(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) row[i] = gens[i][d];
    lp.add(std::move(row), Relation::Equal, v[d]);
  }
  if (normalize) lp.add(RationalVector(gens.size(), Rational(1)), Relation::Equal, Rational(1));
  return lp_solve(lp);
}

}  // namespace

ConeMembership cone_contains(const Cone& cone, const RationalVector& v) {
  if (v.size() != cone.dimension()) {
    throw DimensionMismatch("vector " + to_string(v) + " vs cone of dimension " +
                            std::to_string(cone.dimension()));
  }
  ConeMembership out;
  const bool zero_vector = is_zero(v);
  if (zero_vector && cone.contains_zero()) {
    out.member = true;
    out.coefficients = zeros(cone.generators().size());
    return out;
  }
  if (cone.generators().empty()) {
    if (!zero_vector) out.separator = v;
    return out;
  }

  // For v = 0 without the flag, ask for a vanishing combination of unit mass.
  const LpResult r = positive_hull_program(cone, v, zero_vector);
  if (r.status != LpStatus::Infeasible) {
    out.member = true;
    out.coefficients = r.primal;
    return out;
  }
  if (!zero_vector) {
    // Farkas row multipliers f: f.g >= 0 for every generator, f.v < 0.
    out.separator = -RationalVector(r.dual.begin(), r.dual.begin() + v.size());
  }
  return out;
}

bool verify_cone_membership(const Cone& cone, const RationalVector& v, const ConeMembership& m) {
  const auto& gens = cone.generators();
  if (m.member) {
    if (m.coefficients.size() != gens.size()) return false;
    RationalVector sum = zeros(v.size());
    Rational mass(0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (m.coefficients[i] < 0) return false;
      mass += m.coefficients[i];
      sum += m.coefficients[i] * gens[i];
    }
    if (sum != v) return false;
    return mass > 0 || cone.contains_zero();
  }
  if (!m.separator) return !cone.contains_zero() && is_zero(v);
  for (const auto& g : gens) {
    if (dot(*m.separator, g) > 0) return false;
  }
  return dot(*m.separator, v) > 0;
}

bool is_pointed(const Cone& cone) {
  // If a nonzero w and -w both lie in the cone, adding their representations
  // gives a vanishing combination; any nonzero generator g_i carrying
  // positive weight there has -g_i in the positive hull. So one LP per
  // nonzero generator decides the question.
  for (const auto& g : cone.generators()) {
    if (is_zero(g)) continue;
    if (positive_hull_program(cone, -g, false).status != LpStatus::Infeasible) return false;
  }
  return true;
}

const char* to_string(Comparability c) {
  switch (c) {
    case Comparability::Up:
      return "Up";
    case Comparability::Down:
      return "Down";
    case Comparability::Both:
      return "Both";
    case Comparability::Incomparable:
      return "Incomparable";
  }
  return "?";
}

Comparability relate(const Cone& cone, const RationalVector& x, const RationalVector& y) {
  if (x.size() != cone.dimension() || y.size() != cone.dimension()) {
    throw DimensionMismatch("relate " + to_string(x) + ", " + to_string(y) + " in dimension " +
                            std::to_string(cone.dimension()));
  }
  const bool up = cone_contains(cone, y - x).member;
  const bool down = cone_contains(cone, x - y).member;
  if (up && down) return Comparability::Both;
  if (up) return Comparability::Up;
  if (down) return Comparability::Down;
  return Comparability::Incomparable;
}

Cone k_closure(const Cone& cone) { return cone.with_zero(true); }

}  // namespace acx
