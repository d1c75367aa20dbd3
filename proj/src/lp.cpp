#include "acx/lp.hpp"

#include <optional>
#include <string>

#include "acx/errors.hpp"

namespace acx {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.variables;
  if (!lp.objective.empty() && lp.objective.size() != n) {
    throw DimensionMismatch("objective has " + std::to_string(lp.objective.size()) +
                            " coefficients for " + std::to_string(n) + " variables");
  }
  if (!lp.nonnegative.empty() && lp.nonnegative.size() != n) {
    throw DimensionMismatch("sign mask length " + std::to_string(lp.nonnegative.size()) +
                            " for " + std::to_string(n) + " variables");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (lp.constraints[i].coefficients.size() != n) {
      throw DimensionMismatch("constraint " + std::to_string(i) + " has " +
                              std::to_string(lp.constraints[i].coefficients.size()) +
                              " coefficients for " + std::to_string(n) + " variables");
    }
  }
}

bool is_nonneg(const LinearProgram& lp, std::size_t j) {
  return lp.nonnegative.empty() || lp.nonnegative[j];
}

Rational objective_coef(const LinearProgram& lp, std::size_t j) {
  return lp.objective.empty() ? Rational(0) : lp.objective[j];
}

// Standard-form tableau  min c.x  s.t.  A x = b, x >= 0,  b >= 0.
// Column layout: structural (free variables split in +/- parts), then one
// slack or surplus per inequality, then one artificial per row.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t m = lp.constraints.size();
    for (std::size_t j = 0; j < lp.variables; ++j) {
      plus_col_.push_back(ncols_++);
      minus_col_.push_back(is_nonneg(lp, j) ? std::nullopt : std::optional(ncols_++));
    }
    for (std::size_t i = 0; i < m; ++i) {
      slack_col_.push_back(lp.constraints[i].relation == Relation::Equal
                               ? std::nullopt
                               : std::optional(ncols_++));
    }
    first_artificial_ = ncols_;
    ncols_ += m;
    rhs_ = ncols_;

    rows_.assign(m, RationalVector(ncols_ + 1, Rational(0)));
    sign_.assign(m, 1);
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint& c = lp.constraints[i];
      sign_[i] = c.rhs < 0 ? -1 : 1;
      auto& row = rows_[i];
      for (std::size_t j = 0; j < lp.variables; ++j) {
        row[plus_col_[j]] = sign_[i] * c.coefficients[j];
        if (minus_col_[j]) row[*minus_col_[j]] = -sign_[i] * c.coefficients[j];
      }
      if (slack_col_[i]) {
        row[*slack_col_[i]] = (c.relation == Relation::LessEqual ? 1 : -1) * sign_[i];
      }
      row[first_artificial_ + i] = 1;
      row[rhs_] = sign_[i] * c.rhs;
      basis_[i] = first_artificial_ + i;
    }
  }

  LpResult solve() {
    LpResult result;
    // Phase I: minimize the sum of artificials.
    RationalVector phase1(ncols_, Rational(0));
    for (std::size_t a = first_artificial_; a < ncols_; ++a) phase1[a] = 1;
    price(phase1);
    run(first_artificial_ + rows_.size());  // artificials may enter in phase I
    if (objective_value() > 0) {
      result.status = LpStatus::Infeasible;
      result.dual.resize(rows_.size());
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational pi = 1 - cost_[first_artificial_ + i];
        result.dual[i] = -sign_[i] * pi;
      }
      return result;
    }
    drive_out_artificials();

    // Phase II on the original objective, always as a minimization.
    RationalVector phase2(ncols_, Rational(0));
    const bool maximize = lp_.sense == Sense::Maximize;
    for (std::size_t j = 0; j < lp_.variables; ++j) {
      const Rational c = maximize ? Rational(-objective_coef(lp_, j)) : objective_coef(lp_, j);
      phase2[plus_col_[j]] = c;
      if (minus_col_[j]) phase2[*minus_col_[j]] = -c;
    }
    price(phase2);
    const std::optional<std::size_t> unbounded_col = run(first_artificial_);
    result.primal = primal();
    if (unbounded_col) {
      result.status = LpStatus::Unbounded;
      result.ray = ray(*unbounded_col);
      return result;
    }
    result.status = LpStatus::Optimal;
    result.value = maximize ? Rational(-objective_value()) : objective_value();
    result.dual.resize(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational pi = -cost_[first_artificial_ + i];
      result.dual[i] = maximize ? Rational(-sign_[i] * pi) : Rational(sign_[i] * pi);
    }
    return result;
  }

 private:
  // Reduced costs d = c - c_B^T T and the stored value -c_B^T b.
  void price(const RationalVector& c) {
    cost_ = c;
    cost_.push_back(Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= ncols_; ++j) {
        if (rows_[i][j] != 0) cost_[j] -= cb * rows_[i][j];
      }
    }
  }

  Rational objective_value() const { return -cost_[rhs_]; }

  // Runs simplex iterations with columns [0, limit) eligible to enter.
  // Returns the entering column when an unbounded direction is found.
  std::optional<std::size_t> run(std::size_t limit) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j) {
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return std::nullopt;

      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][rhs_] / a;
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return enter;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[col];
    for (auto& x : prow) {
      if (x != 0) x *= inv;
    }
    auto eliminate = [&](RationalVector& row) {
      const Rational f = row[col];
      if (f == 0) return;
      for (std::size_t j = 0; j <= ncols_; ++j) {
        if (prow[j] != 0) row[j] -= f * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(cost_);
    basis_[r] = col;
  }

  // A zero-valued artificial left in the basis is swapped for any
  // non-artificial column with a nonzero entry in its row. Rows with no such
  // entry are redundant; their artificial stays basic at zero forever.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  RationalVector internal_values() const {
    RationalVector x(ncols_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i][rhs_];
    return x;
  }

  RationalVector to_original(const RationalVector& internal) const {
    RationalVector x(lp_.variables);
    for (std::size_t j = 0; j < lp_.variables; ++j) {
      x[j] = internal[plus_col_[j]];
      if (minus_col_[j]) x[j] -= internal[*minus_col_[j]];
    }
    return x;
  }

  RationalVector primal() const { return to_original(internal_values()); }

  RationalVector ray(std::size_t col) const {
    RationalVector d(ncols_, Rational(0));
    d[col] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) d[basis_[i]] = -rows_[i][col];
    return to_original(d);
  }

  const LinearProgram& lp_;
  std::size_t ncols_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t rhs_ = 0;
  std::vector<std::size_t> plus_col_;
  std::vector<std::optional<std::size_t>> minus_col_;
  std::vector<std::optional<std::size_t>> slack_col_;
  std::vector<int> sign_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> basis_;
  RationalVector cost_;
};

bool row_satisfied(const Constraint& c, const Rational& lhs) {
  switch (c.relation) {
    case Relation::LessEqual:
      return lhs <= c.rhs;
    case Relation::Equal:
      return lhs == c.rhs;
    case Relation::GreaterEqual:
      return lhs >= c.rhs;
  }
  return false;
}

// Sign restriction on a multiplier of the "y.A <= / >= ..." kind used by both
// the Farkas and the maximization dual checks.
bool multiplier_sign_ok(Relation rel, const Rational& y) {
  switch (rel) {
    case Relation::LessEqual:
      return y >= 0;
    case Relation::GreaterEqual:
      return y <= 0;
    case Relation::Equal:
      return true;
  }
  return false;
}

RationalVector transpose_times(const LinearProgram& lp, const RationalVector& y) {
  RationalVector aty(lp.variables, Rational(0));
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < lp.variables; ++j) {
      aty[j] += y[i] * lp.constraints[i].coefficients[j];
    }
  }
  return aty;
}

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  validate(lp);
  return Tableau(lp).solve();
}

bool is_feasible_point(const LinearProgram& lp, const RationalVector& x) {
  if (x.size() != lp.variables) return false;
  for (std::size_t j = 0; j < lp.variables; ++j) {
    if (is_nonneg(lp, j) && x[j] < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    if (!row_satisfied(c, dot(c.coefficients, x))) return false;
  }
  return true;
}

bool verify_optimal(const LinearProgram& lp, const LpResult& result) {
  if (result.status != LpStatus::Optimal) return false;
  if (!is_feasible_point(lp, result.primal)) return false;
  RationalVector c(lp.variables, Rational(0));
  for (std::size_t j = 0; j < lp.variables; ++j) c[j] = objective_coef(lp, j);
  if (dot(c, result.primal) != result.value) return false;
  if (result.dual.size() != lp.constraints.size()) return false;

  // Work with the maximization form: a Minimize dual is the negated
  // dual of maximizing -c.
  const bool maximize = lp.sense == Sense::Maximize;
  RationalVector y = maximize ? result.dual : -result.dual;
  RationalVector cmax = maximize ? c : -c;
  Rational by(0);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (!multiplier_sign_ok(lp.constraints[i].relation, y[i])) return false;
    by += y[i] * lp.constraints[i].rhs;
  }
  const RationalVector aty = transpose_times(lp, y);
  for (std::size_t j = 0; j < lp.variables; ++j) {
    if (is_nonneg(lp, j) ? aty[j] < cmax[j] : aty[j] != cmax[j]) return false;
  }
  // Strong duality: the dual bound meets the primal value exactly.
  return (maximize ? by : Rational(-by)) == result.value;
}

bool verify_farkas(const LinearProgram& lp, const RationalVector& y) {
  if (y.size() != lp.constraints.size()) return false;
  Rational by(0);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (!multiplier_sign_ok(lp.constraints[i].relation, y[i])) return false;
    by += y[i] * lp.constraints[i].rhs;
  }
  if (by >= 0) return false;
  const RationalVector aty = transpose_times(lp, y);
  for (std::size_t j = 0; j < lp.variables; ++j) {
    if (is_nonneg(lp, j) ? aty[j] < 0 : aty[j] != 0) return false;
  }
  return true;
}

bool verify_unbounded(const LinearProgram& lp, const LpResult& result) {
  if (result.status != LpStatus::Unbounded) return false;
  if (!is_feasible_point(lp, result.primal)) return false;
  const RationalVector& r = result.ray;
  if (r.size() != lp.variables) return false;
  for (std::size_t j = 0; j < lp.variables; ++j) {
    if (is_nonneg(lp, j) && r[j] < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    const Rational lhs = dot(c.coefficients, r);
    const bool ok = c.relation == Relation::LessEqual   ? lhs <= 0
                    : c.relation == Relation::Equal     ? lhs == 0
                                                        : lhs >= 0;
    if (!ok) return false;
  }
  RationalVector c(lp.variables, Rational(0));
  for (std::size_t j = 0; j < lp.variables; ++j) c[j] = objective_coef(lp, j);
  const Rational gain = dot(c, r);
  return lp.sense == Sense::Maximize ? gain > 0 : gain < 0;
}

}  // namespace acx
