#include "acx/oracle.hpp"

#include <functional>
#include <vector>

namespace acx::oracle {

std::optional<RationalVector> solve_independent(std::span<const RationalVector> cols,
                                                const RationalVector& v) {
  const std::size_t n = v.size();
  const std::size_t k = cols.size();
  // Augmented matrix [cols | v], rows = coordinates.
  std::vector<RationalVector> m(n, RationalVector(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = cols[c][r];
    m[r][k] = v[r];
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;  // dependent columns
    std::swap(m[row], m[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[row][c];
      for (std::size_t j = c; j <= k; ++j) m[r][j] -= factor * m[row][j];
    }
    ++row;
  }
  for (std::size_t r = row; r < n; ++r) {
    if (m[r][k] != 0) return std::nullopt;  // v outside the span
  }
  RationalVector x(k);
  for (std::size_t c = 0; c < k; ++c) x[c] = m[c][k] / m[c][c];
  return x;
}

namespace {

// Calls visit on every subset of {0..n-1} with 1..max_size elements until it
// returns true.
bool any_subset(std::size_t n, std::size_t max_size,
                const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty() && visit(pick)) return true;
    if (pick.size() == max_size) return false;
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

bool in_positive_hull(std::span<const RationalVector> gens, const RationalVector& v) {
  return any_subset(gens.size(), v.size(), [&](const std::vector<std::size_t>& idx) {
    std::vector<RationalVector> cols;
    for (std::size_t i : idx) cols.push_back(gens[i]);
    const auto x = solve_independent(cols, v);
    if (!x) return false;
    for (const auto& c : *x) {
      if (c < 0) return false;
    }
    return true;
  });
}

}  // namespace

bool cone_contains(const Cone& cone, const RationalVector& v) {
  const auto& gens = cone.generators();
  if (!is_zero(v)) return in_positive_hull(gens, v);
  if (cone.contains_zero()) return true;
  // 0 = sum mu g with mu_k > 0 iff g_k = 0 or -g_k in cone(G \ {g_k}).
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (is_zero(gens[k])) return true;
    std::vector<RationalVector> others;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i != k) others.push_back(gens[i]);
    }
    if (in_positive_hull(others, -gens[k])) return true;
  }
  return false;
}

bool hull_contains(const RationalVector& p, std::span<const RationalVector> points) {
  // Lift to (x, 1) so affine combinations become linear ones.
  std::vector<RationalVector> lifted;
  for (const auto& q : points) {
    RationalVector l = q;
    l.emplace_back(1);
    lifted.push_back(std::move(l));
  }
  RationalVector target = p;
  target.emplace_back(1);
  return in_positive_hull(lifted, target);
}

FinitePointSet pareto_optima(const FinitePointSet& s, const Cone& cone) {
  FinitePointSet out(s.dimension());
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < s.size() && !dominated; ++j) {
      dominated = j != i && oracle::cone_contains(cone, s[j] - s[i]);
    }
    if (!dominated) out.insert(s[i]);
  }
  return out;
}

}  // namespace acx::oracle
