#pragma once

#include <cstddef>
#include <vector>

#include "acx/rational.hpp"

namespace acx {

enum class Sense { Maximize, Minimize };
enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  RationalVector coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

struct LinearProgram {
  std::size_t variables = 0;
  Sense sense = Sense::Maximize;
  RationalVector objective;        // empty means the zero objective
  std::vector<Constraint> constraints;
  std::vector<bool> nonnegative;   // empty means every variable is >= 0

  explicit LinearProgram(std::size_t n, Sense s = Sense::Maximize)
      : variables(n), sense(s), objective(n, Rational(0)), nonnegative(n, true) {}

  void add(RationalVector row, Relation rel, Rational rhs) {
    constraints.push_back({std::move(row), rel, std::move(rhs)});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

// Certificates use one multiplier per constraint, in constraint order.
//
// Optimal:    `dual` is an optimal dual solution: for Maximize it has
//             y_i >= 0 on <= rows, y_i <= 0 on >= rows, A^T y >= c on
//             nonnegative variables, A^T y = c on free ones, and y.b equals
//             `value` (signs mirrored for Minimize).
// Infeasible: `dual` is a Farkas certificate: y_i >= 0 on <= rows,
//             y_i <= 0 on >= rows, (A^T y)_j >= 0 for nonnegative variables,
//             = 0 for free ones, and y.b < 0.
// Unbounded:  `ray` is a recession direction that stays feasible and
//             strictly improves the objective; `primal` is a feasible point.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector primal;
  RationalVector dual;
  RationalVector ray;
};

/// Exact two-phase primal simplex on a dense rational tableau.
///
/// Pivoting follows Bland's rule (lowest eligible column enters, ties in
/// the ratio test go to the lowest basic index), which guarantees
/// termination and makes the result a pure function of the input.
/// Throws DimensionMismatch when a row, the objective or the sign mask
/// disagree with `variables`.
LpResult lp_solve(const LinearProgram& lp);

// Independent checkers. They only do arithmetic on the certificate and
// never call back into the solver.
bool is_feasible_point(const LinearProgram& lp, const RationalVector& x);
bool verify_optimal(const LinearProgram& lp, const LpResult& result);
bool verify_farkas(const LinearProgram& lp, const RationalVector& y);
bool verify_unbounded(const LinearProgram& lp, const LpResult& result);

}  // namespace acx
