#include "acx/separation.hpp"

#include <algorithm>
#include <string>

#include "acx/errors.hpp"
#include "acx/hull.hpp"
#include "acx/lp.hpp"

namespace acx {

const char* to_string(SeparationKind k) {
  switch (k) {
    case SeparationKind::Separated:
      return "separated";
    case SeparationKind::ProperlySeparated:
      return "properly_separated";
    case SeparationKind::StrictlySeparated:
      return "strictly_separated";
  }
  return "unknown";
}

namespace {

using Blocks = std::vector<std::vector<RationalVector>>;

void check_same_dimension(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("sets of dimension " + std::to_string(a) + " and " + std::to_string(b));
  }
}

Rational max_dot(const RationalVector& f, std::span<const RationalVector> points) {
  Rational best = dot(f, points.front());
  for (const auto& p : points) best = std::max(best, Rational(dot(f, p)));
  return best;
}

Rational min_dot(const RationalVector& f, std::span<const RationalVector> points) {
  Rational best = dot(f, points.front());
  for (const auto& p : points) best = std::min(best, Rational(dot(f, p)));
  return best;
}

const RationalVector& argmax_dot(const RationalVector& f, std::span<const RationalVector> points) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (dot(f, points[i]) > dot(f, points[best])) best = i;
  }
  return points[best];
}

const RationalVector& argmin_dot(const RationalVector& f, std::span<const RationalVector> points) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (dot(f, points[i]) < dot(f, points[best])) best = i;
  }
  return points[best];
}

// Columns: lambda over X's vertices, mu over X's rays, then one convex block
// per entry of `blocks`. Rows: sum lambda v + sum mu r - sum kappa p = 0,
// sum lambda = 1, and sum kappa_b = 1 for each block.
DisjointnessResult disjoint_blocks(const Polyhedron& x, const Blocks& blocks) {
  validate(x);
  const std::size_t n = x.dimension();
  const auto& verts = x.vertices.points();
  const std::size_t nv = verts.size();
  const std::size_t nr = x.rays.size();
  std::vector<std::size_t> offset;
  std::size_t columns = nv + nr;
  for (const auto& b : blocks) {
    if (b.empty()) throw PreconditionViolation("empty block");
    for (const auto& p : b) check_same_dimension(n, p.size());
    offset.push_back(columns);
    columns += b.size();
  }

  LinearProgram lp(columns);
  for (std::size_t c = 0; c < n; ++c) {
    RationalVector row(columns, Rational(0));
    for (std::size_t i = 0; i < nv; ++i) row[i] = verts[i][c];
    for (std::size_t i = 0; i < nr; ++i) row[nv + i] = x.rays[i][c];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::size_t j = 0; j < blocks[b].size(); ++j) row[offset[b] + j] = -blocks[b][j][c];
    }
    lp.add(std::move(row), Relation::Equal, Rational(0));
  }
  {
    RationalVector row(columns, Rational(0));
    for (std::size_t i = 0; i < nv; ++i) row[i] = 1;
    lp.add(std::move(row), Relation::Equal, Rational(1));
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    RationalVector row(columns, Rational(0));
    for (std::size_t j = 0; j < blocks[b].size(); ++j) row[offset[b] + j] = 1;
    lp.add(std::move(row), Relation::Equal, Rational(1));
  }

  const LpResult r = lp_solve(lp);
  DisjointnessResult out;
  if (r.status != LpStatus::Infeasible) {
    const auto at = [&](std::size_t i) { return r.primal.begin() + static_cast<std::ptrdiff_t>(i); };
    out.x_vertex_weights.assign(at(0), at(nv));
    out.x_ray_weights.assign(at(nv), at(nv + nr));
    RationalVector p = zeros(n);
    for (std::size_t i = 0; i < nv; ++i) p += out.x_vertex_weights[i] * verts[i];
    for (std::size_t i = 0; i < nr; ++i) p += out.x_ray_weights[i] * x.rays[i];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      out.y_weights.emplace_back(at(offset[b]), at(offset[b] + blocks[b].size()));
    }
    out.common_point = std::move(p);
    return out;
  }

  // Farkas (f, alpha, beta): f.v + alpha >= 0, f.r >= 0, -f.p + beta_b >= 0
  // and alpha + sum beta < 0. With g = -f, g.x <= alpha < -sum beta <= g.y.
  out.disjoint = true;
  SeparationResult s;
  s.functional = -RationalVector(r.dual.begin(), r.dual.begin() + static_cast<std::ptrdiff_t>(n));
  s.sup_on_x = max_dot(s.functional, verts);
  Rational inf(0);
  for (const auto& b : blocks) inf += min_dot(s.functional, b);
  s.inf_on_y = inf;
  s.kind = SeparationKind::StrictlySeparated;
  out.separator = std::move(s);
  return out;
}

Blocks summand_blocks(const DecomposableSet& y) {
  Blocks blocks;
  for (const auto& s : y.summands()) blocks.push_back(s.base().points());
  return blocks;
}

RationalVector integer_scaled(const RationalVector& f) {
  const mpz_class l = common_denominator(f);
  return Rational(l) * f;
}

}  // namespace

DisjointnessResult hulls_disjoint(const Polyhedron& x, const DecomposableSet& y) {
  check_same_dimension(x.dimension(), y.dimension());
  return disjoint_blocks(x, summand_blocks(y));
}

bool verify_disjointness(const Polyhedron& x, const DecomposableSet& y,
                         const DisjointnessResult& r) {
  const auto& verts = x.vertices.points();
  const std::size_t n = x.dimension();
  if (!r.disjoint) {
    if (!r.common_point || r.x_vertex_weights.size() != verts.size() ||
        r.x_ray_weights.size() != x.rays.size() || r.y_weights.size() != y.summands().size()) {
      return false;
    }
    if (!verify_membership(*r.common_point, verts, x.rays,
                           {true, r.x_vertex_weights, r.x_ray_weights, std::nullopt})) {
      return false;
    }
    RationalVector sum = zeros(n);
    for (std::size_t b = 0; b < y.summands().size(); ++b) {
      const auto& pts = y.summands()[b].base().points();
      const auto& w = r.y_weights[b];
      if (w.size() != pts.size()) return false;
      Rational total(0);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (w[j] < 0) return false;
        total += w[j];
        sum += w[j] * pts[j];
      }
      if (total != 1) return false;
    }
    return sum == *r.common_point;
  }
  if (!r.separator) return false;
  const RationalVector& f = r.separator->functional;
  if (f.size() != n) return false;
  for (const auto& ray : x.rays) {
    if (dot(f, ray) > 0) return false;
  }
  Rational inf(0);
  for (const auto& s : y.summands()) inf += min_dot(f, s.base().points());
  return max_dot(f, verts) < inf;
}

SeparationResult strict_separator(const Polyhedron& x, const Polyhedron& y) {
  validate(x);
  validate(y);
  check_same_dimension(x.dimension(), y.dimension());
  if (!y.bounded()) throw PreconditionViolation("strict separation needs a bounded Y");
  const DisjointnessResult d = disjoint_blocks(x, {y.vertices.points()});
  if (!d.disjoint) {
    throw PreconditionViolation("sets intersect at " + to_string(*d.common_point));
  }

  // Variables f (free), a, b (free): f.v <= a, f.r <= 0, f.w >= b, b - a >= 1.
  const std::size_t n = x.dimension();
  const std::size_t a = n;
  const std::size_t b = n + 1;
  LinearProgram lp(n + 2, Sense::Minimize);
  lp.nonnegative.assign(n + 2, false);
  lp.objective[b] = 1;
  lp.objective[a] = -1;
  for (const auto& v : x.vertices) {
    RationalVector row(v);
    row.emplace_back(-1);
    row.emplace_back(0);
    lp.add(std::move(row), Relation::LessEqual, Rational(0));
  }
  for (const auto& r : x.rays) {
    RationalVector row(r);
    row.emplace_back(0);
    row.emplace_back(0);
    lp.add(std::move(row), Relation::LessEqual, Rational(0));
  }
  for (const auto& w : y.vertices) {
    RationalVector row(w);
    row.emplace_back(0);
    row.emplace_back(-1);
    lp.add(std::move(row), Relation::GreaterEqual, Rational(0));
  }
  {
    RationalVector row(n + 2, Rational(0));
    row[a] = -1;
    row[b] = 1;
    lp.add(std::move(row), Relation::GreaterEqual, Rational(1));
  }
  const LpResult r = lp_solve(lp);
  if (r.status != LpStatus::Optimal) {
    throw InternalError(std::string("strict separation LP ended ") + to_string(r.status) +
                        " on disjoint sets");
  }

  SeparationResult s;
  // Scaling by the common denominator multiplies the gap by at least 1.
  s.functional = integer_scaled(RationalVector(r.primal.begin(), r.primal.begin() + static_cast<std::ptrdiff_t>(n)));
  s.sup_on_x = max_dot(s.functional, x.vertices.points());
  s.inf_on_y = min_dot(s.functional, y.vertices.points());
  s.kind = SeparationKind::StrictlySeparated;
  s.strict_pair.emplace(argmax_dot(s.functional, x.vertices.points()),
                        argmin_dot(s.functional, y.vertices.points()));
  if (*s.inf_on_y - *s.sup_on_x < 1) throw InternalError("strict separation gap below 1");
  return s;
}

SeparationResult proper_separator(const Polyhedron& x, const DecomposableSet& y, const Cone& cone) {
  validate(x);
  check_same_dimension(x.dimension(), y.dimension());
  check_same_dimension(x.dimension(), cone.dimension());
  if (!is_upward(x, cone)) throw PreconditionViolation("X is not upward for the cone");
  const FinitePointSet points = materialize(y);
  for (const auto& p : points) {
    if (relative_interior_membership(p, x)) {
      throw PreconditionViolation("point " + to_string(p) + " of Y lies in ri(X)");
    }
  }

  // Variables f (free), a (free): f.v <= a, f.r <= 0, f.y >= a.
  const std::size_t n = x.dimension();
  const auto with_a = [&](const RationalVector& v, int coeff) {
    RationalVector row(v);
    row.emplace_back(coeff);
    return row;
  };
  LinearProgram base(n + 1);
  base.nonnegative.assign(n + 1, false);
  for (const auto& v : x.vertices) base.add(with_a(v, -1), Relation::LessEqual, Rational(0));
  for (const auto& r : x.rays) base.add(with_a(r, 0), Relation::LessEqual, Rational(0));
  for (const auto& p : points) base.add(with_a(p, -1), Relation::GreaterEqual, Rational(0));

  const auto& verts = x.vertices.points();
  const auto& ys = points.points();
  const auto finish = [&](const LpResult& r, std::optional<std::size_t> ray) {
    SeparationResult s;
    s.functional = integer_scaled(RationalVector(r.primal.begin(), r.primal.begin() + static_cast<std::ptrdiff_t>(n)));
    s.sup_on_x = max_dot(s.functional, verts);
    s.inf_on_y = min_dot(s.functional, ys);
    s.kind = SeparationKind::ProperlySeparated;
    RationalVector px = argmin_dot(s.functional, verts);
    if (ray) px += x.rays[*ray];
    s.strict_pair.emplace(std::move(px), argmax_dot(s.functional, ys));
    return s;
  };

  for (const auto& p : ys) {
    LinearProgram lp = base;
    lp.add(with_a(p, -1), Relation::GreaterEqual, Rational(1));
    const LpResult r = lp_solve(lp);
    if (r.status == LpStatus::Optimal) return finish(r, std::nullopt);
  }
  for (const auto& v : verts) {
    LinearProgram lp = base;
    lp.add(with_a(v, -1), Relation::LessEqual, Rational(-1));
    const LpResult r = lp_solve(lp);
    if (r.status == LpStatus::Optimal) return finish(r, std::nullopt);
  }
  for (std::size_t i = 0; i < x.rays.size(); ++i) {
    LinearProgram lp = base;
    lp.add(with_a(x.rays[i], 0), Relation::LessEqual, Rational(-1));
    const LpResult r = lp_solve(lp);
    if (r.status == LpStatus::Optimal) return finish(r, i);
  }
  throw PreconditionViolation("no proper separator: every weak separator is constant on X and Y");
}

bool separator_sign_check(const RationalVector& f, const Cone& cone) {
  check_same_dimension(f.size(), cone.dimension());
  for (const auto& g : cone.generators()) {
    if (dot(f, g) > 0) return false;
  }
  return true;
}

bool verify_separation(const Polyhedron& x, std::span<const RationalVector> y_points,
                       const SeparationResult& s) {
  const RationalVector& f = s.functional;
  if (f.size() != x.dimension() || is_zero(f) || y_points.empty()) return false;
  for (const auto& p : y_points) {
    if (p.size() != f.size()) return false;
  }
  for (const auto& r : x.rays) {
    if (dot(f, r) > 0) return false;
  }
  if (!s.sup_on_x || !s.inf_on_y) return false;
  if (*s.sup_on_x != max_dot(f, x.vertices.points())) return false;
  if (*s.inf_on_y != min_dot(f, y_points)) return false;
  if (*s.sup_on_x > *s.inf_on_y) return false;
  switch (s.kind) {
    case SeparationKind::Separated:
      return true;
    case SeparationKind::StrictlySeparated:
      if (*s.sup_on_x >= *s.inf_on_y) return false;
      break;
    case SeparationKind::ProperlySeparated:
      if (!s.strict_pair) return false;
      break;
  }
  if (!s.strict_pair) return true;
  const auto& [px, py] = *s.strict_pair;
  if (px.size() != f.size() || py.size() != f.size()) return false;
  if (!(dot(f, px) < dot(f, py))) return false;
  return hull_membership(px, x).member && hull_membership(py, y_points).member;
}

}  // namespace acx
