#include "acx/hull.hpp"

#include <string>

#include "acx/errors.hpp"
#include "acx/lp.hpp"

namespace acx {

namespace {

void check_dims(const RationalVector& p, std::span<const RationalVector> a,
                std::span<const RationalVector> b) {
  for (const auto& v : a) {
    if (v.size() != p.size()) {
      throw DimensionMismatch("generator " + to_string(v) + " vs point " + to_string(p));
    }
  }
  for (const auto& v : b) {
    if (v.size() != p.size()) {
      throw DimensionMismatch("generator " + to_string(v) + " vs point " + to_string(p));
    }
  }
}

// Variables: one weight per vertex, then one per ray.
// Rows: the n coordinate equations, then sum of vertex weights = 1.
LinearProgram membership_program(const RationalVector& p, std::span<const RationalVector> vertices,
                                 std::span<const RationalVector> rays) {
  const std::size_t n = p.size();
  const std::size_t k = vertices.size() + rays.size();
  LinearProgram lp(k);
  for (std::size_t d = 0; d < n; ++d) {
    RationalVector row(k);
    for (std::size_t i = 0; i < vertices.size(); ++i) row[i] = vertices[i][d];
    for (std::size_t i = 0; i < rays.size(); ++i) row[vertices.size() + i] = rays[i][d];
    lp.add(std::move(row), Relation::Equal, p[d]);
  }
  RationalVector sum(k, Rational(0));
  for (std::size_t i = 0; i < vertices.size(); ++i) sum[i] = 1;
  lp.add(std::move(sum), Relation::Equal, Rational(1));
  return lp;
}

}  // namespace

HullMembership hull_membership(const RationalVector& p, std::span<const RationalVector> vertices,
                               std::span<const RationalVector> rays) {
  if (vertices.empty()) throw PreconditionViolation("hull membership needs a vertex");
  check_dims(p, vertices, rays);
  const LinearProgram lp = membership_program(p, vertices, rays);
  const LpResult r = lp_solve(lp);

  HullMembership out;
  if (r.status != LpStatus::Infeasible) {
    out.member = true;
    out.vertex_weights.assign(r.primal.begin(), r.primal.begin() + vertices.size());
    out.ray_weights.assign(r.primal.begin() + vertices.size(), r.primal.end());
    return out;
  }
  // Farkas multipliers (f, beta): f.v + beta >= 0, f.r >= 0, f.p + beta < 0.
  const std::size_t n = p.size();
  Separator s;
  s.normal.resize(n);
  for (std::size_t d = 0; d < n; ++d) s.normal[d] = -r.dual[d];
  s.bound = r.dual[n];
  out.certificate = std::move(s);
  return out;
}

HullMembership hull_membership(const RationalVector& p, const Polyhedron& poly) {
  validate(poly);
  return hull_membership(p, poly.vertices.points(), poly.rays);
}

bool verify_membership(const RationalVector& p, std::span<const RationalVector> vertices,
                       std::span<const RationalVector> rays, const HullMembership& m) {
  if (m.member) {
    if (m.vertex_weights.size() != vertices.size() || m.ray_weights.size() != rays.size()) {
      return false;
    }
    RationalVector sum = zeros(p.size());
    Rational total(0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (m.vertex_weights[i] < 0) return false;
      total += m.vertex_weights[i];
      sum += m.vertex_weights[i] * vertices[i];
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (m.ray_weights[i] < 0) return false;
      sum += m.ray_weights[i] * rays[i];
    }
    return total == 1 && sum == p;
  }
  if (!m.certificate) return false;
  const Separator& s = *m.certificate;
  if (s.normal.size() != p.size()) return false;
  for (const auto& v : vertices) {
    if (dot(s.normal, v) > s.bound) return false;
  }
  for (const auto& r : rays) {
    if (dot(s.normal, r) > 0) return false;
  }
  return dot(s.normal, p) > s.bound;
}

bool relative_interior_membership(const RationalVector& p, const Polyhedron& poly) {
  validate(poly);
  if (p.size() != poly.dimension()) {
    throw DimensionMismatch("point " + to_string(p) + " vs polyhedron of dimension " +
                            std::to_string(poly.dimension()));
  }
  const auto& vertices = poly.vertices.points();
  const std::size_t k = vertices.size() + poly.rays.size();
  // Last variable t is free: maximize t subject to every weight >= t.
  LinearProgram lp = membership_program(p, vertices, poly.rays);
  for (auto& c : lp.constraints) c.coefficients.push_back(Rational(0));
  lp.variables = k + 1;
  lp.nonnegative.push_back(false);
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[k] = 1;
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector row(k + 1, Rational(0));
    row[i] = 1;
    row[k] = -1;
    lp.add(std::move(row), Relation::GreaterEqual, Rational(0));
  }
  const LpResult r = lp_solve(lp);
  if (r.status == LpStatus::Infeasible) return false;
  // t <= every vertex weight <= 1, so the program is bounded.
  if (r.status != LpStatus::Optimal) throw InternalError("relative interior LP unbounded");
  return r.value > 0;
}

std::optional<RationalVector> conic_combination(const RationalVector& v,
                                                std::span<const RationalVector> generators) {
  check_dims(v, generators, {});
  LinearProgram lp(generators.size());
  for (std::size_t d = 0; d < v.size(); ++d) {
    RationalVector row(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) row[i] = generators[i][d];
    lp.add(std::move(row), Relation::Equal, v[d]);
  }
  const LpResult r = lp_solve(lp);
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  return r.primal;
}

}  // namespace acx
