#include "acx/economy.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "acx/errors.hpp"
#include "acx/relation.hpp"
#include "acx/sets.hpp"

namespace acx {

Rational paper_utility(const RationalVector& x) {
  if (x.size() != 2) throw DimensionMismatch("utility expects 2 coordinates, got " + std::to_string(x.size()));
  if (x[0] < 0 || x[1] < 0) {
    throw PreconditionViolation("utility is defined on the nonnegative quadrant, got " + to_string(x));
  }
  return Rational(x[0] * x[1] / (x[0] + 1) - 5 * x[0] + x[1]);
}

namespace {

Rational coordinate_sum(const RationalVector& x) {
  Rational s(0);
  for (const auto& c : x) s += c;
  return s;
}

}  // namespace

Utility utility_by_name(std::string_view name) {
  if (name == "paper_6_3") return {"paper_6_3", paper_utility};
  if (name == "linear") return {"linear", coordinate_sum};
  if (name == "min") {
    return {"min", [](const RationalVector& x) {
              if (x.empty()) throw DimensionMismatch("min of an empty vector");
              return *std::min_element(x.begin(), x.end());
            }};
  }
  if (name == "constant") return {"constant", [](const RationalVector&) { return Rational(0); }};
  if (name == "twin_peak") {
    return {"twin_peak", [](const RationalVector& x) {
              if (x.empty()) throw DimensionMismatch("twin_peak of an empty vector");
              return Rational(coordinate_sum(x) + abs(x[0] - 1));
            }};
  }
  throw std::invalid_argument("unknown utility '" + std::string(name) + "'");
}

std::vector<std::string> utility_names() {
  return {"paper_6_3", "linear", "min", "constant", "twin_peak"};
}

void GridDomain::validate() const {
  if (step <= 0) throw PreconditionViolation("grid step must be positive");
  if (upper.size() != dimension) {
    throw PreconditionViolation("grid bounds have " + std::to_string(upper.size()) +
                                " entries for dimension " + std::to_string(dimension));
  }
  for (const auto& u : upper) {
    if (u < 0) throw PreconditionViolation("grid bounds must be nonnegative");
  }
}

FinitePointSet GridDomain::points() const {
  validate();
  std::vector<std::vector<Rational>> axes(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    for (Rational v(0); v <= upper[i]; v += step) axes[i].push_back(v);
  }
  FinitePointSet out(dimension);
  std::vector<std::size_t> idx(dimension, 0);
  if (dimension == 0) return out;
  while (true) {
    RationalVector p(dimension);
    for (std::size_t i = 0; i < dimension; ++i) p[i] = axes[i][idx[i]];
    out.insert(std::move(p));
    std::size_t i = dimension;
    while (i > 0 && ++idx[i - 1] == axes[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

void PriceSystem::validate() const {
  if (price.empty()) throw PreconditionViolation("empty price vector");
  for (const auto& p : price) {
    if (p <= 0) throw PreconditionViolation("prices must be positive, got " + to_string(price));
  }
  if (wealth < 0) throw PreconditionViolation("wealth must be nonnegative");
}

Rational PriceSystem::cost(const RationalVector& x) const { return dot(price, x); }

namespace {

void check_pair(const GridDomain& grid, const PriceSystem& price) {
  grid.validate();
  price.validate();
  if (price.price.size() != grid.dimension) {
    throw DimensionMismatch("price of dimension " + std::to_string(price.price.size()) +
                            " on a grid of dimension " + std::to_string(grid.dimension));
  }
}

void check_aligned(const GridDomain& grid, const PriceSystem& price) {
  for (const auto& x : budget_set(grid, price)) {
    if (price.cost(x) == price.wealth) return;
  }
  throw PreconditionViolation("budget hyperplane p.x = " + to_string(price.wealth) +
                              " contains no grid point; choose w on the lattice");
}

}  // namespace

FinitePointSet budget_set(const GridDomain& grid, const PriceSystem& price) {
  check_pair(grid, price);
  FinitePointSet out(grid.dimension);
  for (const auto& x : grid.points()) {
    if (price.cost(x) <= price.wealth) out.insert(x);
  }
  return out;
}

FinitePointSet demand(const Utility& u, const GridDomain& grid, const PriceSystem& price) {
  const FinitePointSet budget = budget_set(grid, price);
  if (budget.empty()) throw PreconditionViolation("empty budget set");
  std::vector<Rational> values;
  values.reserve(budget.size());
  for (const auto& x : budget) values.push_back(u(x));
  const Rational best = *std::max_element(values.begin(), values.end());
  FinitePointSet out(grid.dimension);
  for (std::size_t i = 0; i < budget.size(); ++i) {
    if (values[i] == best) out.insert(budget[i]);
  }
  return out;
}

NonsatiationReport check_local_nonsatiation(const Utility& u, const GridDomain& grid) {
  const FinitePointSet pts = grid.points();
  NonsatiationReport rep;
  for (const auto& x : pts) {
    const Rational ux = u(x);
    bool better = false;
    for (std::size_t i = 0; i < grid.dimension && !better; ++i) {
      for (int sign : {1, -1}) {
        RationalVector y = x;
        y[i] += sign * grid.step;
        if (y[i] < 0 || y[i] > grid.upper[i]) continue;
        if (u(y) > ux) {
          better = true;
          break;
        }
      }
    }
    if (better) continue;
    bool upper_face = false;
    for (std::size_t i = 0; i < grid.dimension; ++i) {
      if (x[i] + grid.step > grid.upper[i]) upper_face = true;
    }
    (upper_face ? rep.exempt_points : rep.violators).push_back(x);
  }
  rep.holds = rep.violators.empty();
  return rep;
}

GrintaReport check_grinta(const Utility& u, const GridDomain& grid, const PriceSystem& price) {
  const FinitePointSet budget = budget_set(grid, price);
  const TotalPreorder r = TotalPreorder::from_utility(grid.points(), u.eval);
  GrintaReport rep;
  rep.maximals = maximals(r, budget);
  rep.convexified_maximals = convexified_maximals(r, budget);
  rep.equal = rep.maximals.same_points(rep.convexified_maximals);
  rep.hypothesis_met = check_local_nonsatiation(u, grid).holds;
  return rep;
}

bool BoundaryReport::all() const {
  return on_hyperplane && antichain_orthant &&
         std::all_of(antichain_cones.begin(), antichain_cones.end(), [](bool b) { return b; });
}

BoundaryReport check_boundary_and_antichain(const Utility& u, const GridDomain& grid,
                                            const PriceSystem& price,
                                            const std::vector<Cone>& cones) {
  check_pair(grid, price);
  check_aligned(grid, price);
  for (const auto& c : cones) {
    if (c.dimension() != grid.dimension) throw DimensionMismatch("cone dimension differs from grid");
    for (const auto& g : c.generators()) {
      for (const auto& v : g) {
        if (v < 0) throw PreconditionViolation("cone generator " + to_string(g) + " leaves the orthant");
      }
    }
  }
  BoundaryReport rep;
  rep.demand = demand(u, grid, price);
  rep.on_hyperplane = std::all_of(rep.demand.begin(), rep.demand.end(),
                                  [&](const RationalVector& x) { return price.cost(x) == price.wealth; });
  rep.antichain_orthant = is_antichain(rep.demand, Cone::orthant(grid.dimension));
  for (const auto& c : cones) rep.antichain_cones.push_back(is_antichain(rep.demand, c));
  return rep;
}

ConvexityReport check_maximizer_convexity(const Utility& u, const GridDomain& grid,
                                          const PriceSystem& price, const Cone& cone,
                                          unsigned denominator) {
  check_pair(grid, price);
  check_aligned(grid, price);
  ConvexityReport rep;
  rep.demand = demand(u, grid, price);
  rep.grid_antichain_convex = is_grid_antichain_convex(rep.demand, cone, denominator, grid.step);
  rep.segment_closed = true;
  const auto& d = rep.demand;
  for (std::size_t i = 0; i < d.size() && rep.segment_closed; ++i) {
    for (std::size_t j = i + 1; j < d.size() && rep.segment_closed; ++j) {
      // Lattice points of [x, y] are x + (k/g)(y - x), g the gcd of the steps.
      mpz_class g = 0;
      for (std::size_t c = 0; c < grid.dimension; ++c) {
        const Rational steps = (d[j][c] - d[i][c]) / grid.step;
        g = gcd(g, mpz_class(abs(steps.get_num())));
      }
      const RationalVector delta = d[j] - d[i];
      for (mpz_class k = 1; k < g; ++k) {
        const RationalVector z = d[i] + ratio(k, g) * delta;
        if (!d.contains(z)) {
          rep.segment_closed = false;
          break;
        }
      }
    }
  }
  return rep;
}

QuasiconcavityReport check_antichain_quasiconcavity(const Utility& u, const GridDomain& grid,
                                                    const Cone& cone, std::size_t samples,
                                                    std::uint64_t seed,
                                                    unsigned max_denominator) {
  const FinitePointSet pts = grid.points();
  if (cone.dimension() != grid.dimension) throw DimensionMismatch("cone dimension differs from grid");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!comparable(relate(cone, pts[i], pts[j]))) pairs.emplace_back(i, j);
    }
  }
  if (pairs.size() > samples) {
    // Partial Fisher-Yates with a plain modulo draw, so the selection depends
    // only on the 64-bit engine output and not on library distributions.
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      const std::size_t pick = k + static_cast<std::size_t>(rng() % (pairs.size() - k));
      std::swap(pairs[k], pairs[pick]);
    }
    pairs.resize(samples);
  }

  std::vector<Rational> lambdas;
  for (unsigned d = 2; d <= max_denominator; ++d) {
    for (unsigned k = 1; k < d; ++k) {
      const Rational l = ratio(k, d);
      if (std::find(lambdas.begin(), lambdas.end(), l) == lambdas.end()) lambdas.push_back(l);
    }
  }
  std::sort(lambdas.begin(), lambdas.end());

  QuasiconcavityReport rep;
  for (const auto& [i, j] : pairs) {
    ++rep.pairs_checked;
    const Rational floor_value = std::min(u(pts[i]), u(pts[j]));
    for (const auto& l : lambdas) {
      RationalVector z = l * pts[i] + Rational(1 - l) * pts[j];
      ++rep.evaluations;
      if (u(z) < floor_value) {
        rep.witness = QuasiconcavityWitness{pts[i], pts[j], l, std::move(z)};
        return rep;
      }
    }
  }
  rep.holds = true;
  return rep;
}

}  // namespace acx
