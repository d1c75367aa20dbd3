#include "acx/relation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "acx/errors.hpp"
#include "acx/hull.hpp"

namespace acx {

FiniteRelation::FiniteRelation(FinitePointSet ground, std::vector<std::vector<bool>> related)
    : ground_(std::move(ground)), related_(std::move(related)) {
  if (related_.size() != ground_.size()) {
    throw DimensionMismatch("relation matrix has " + std::to_string(related_.size()) +
                            " rows for " + std::to_string(ground_.size()) + " points");
  }
  for (const auto& row : related_) {
    if (row.size() != ground_.size()) throw DimensionMismatch("relation matrix is not square");
  }
}

FiniteRelation FiniteRelation::from_predicate(
    FinitePointSet ground,
    const std::function<bool(const RationalVector&, const RationalVector&)>& pred) {
  const std::size_t n = ground.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) m[t][s] = pred(ground[t], ground[s]);
  }
  return FiniteRelation(std::move(ground), std::move(m));
}

FinitePointSet FiniteRelation::upper_set(std::size_t s) const {
  FinitePointSet out(ground_.dimension());
  for (std::size_t t = 0; t < size(); ++t) {
    if (related_[t][s]) out.insert(ground_[t]);
  }
  return out;
}

bool FiniteRelation::is_total() const {
  for (std::size_t s = 0; s < size(); ++s) {
    for (std::size_t t = 0; t < size(); ++t) {
      if (!related_[t][s] && !related_[s][t]) return false;
    }
  }
  return true;
}

bool FiniteRelation::is_transitive() const {
  const std::size_t n = size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      if (!related_[r][s]) continue;
      for (std::size_t t = 0; t < n; ++t) {
        if (related_[s][t] && !related_[r][t]) return false;
      }
    }
  }
  return true;
}

bool FiniteRelation::subset_of(const FiniteRelation& other) const {
  if (other.size() != size()) return false;
  for (std::size_t t = 0; t < size(); ++t) {
    for (std::size_t s = 0; s < size(); ++s) {
      if (related_[t][s] && !other.related_[t][s]) return false;
    }
  }
  return true;
}

TotalPreorder::TotalPreorder(FiniteRelation relation) : relation_(std::move(relation)) {
  if (!relation_.is_total()) throw PreconditionViolation("relation is not total");
  if (!relation_.is_transitive()) throw PreconditionViolation("relation is not transitive");
}

TotalPreorder TotalPreorder::from_utility(FinitePointSet ground,
                                          const std::function<Rational(const RationalVector&)>& u) {
  std::vector<Rational> values;
  values.reserve(ground.size());
  for (const auto& p : ground) values.push_back(u(p));
  const std::size_t n = ground.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) m[t][s] = values[t] >= values[s];
  }
  return TotalPreorder(FiniteRelation(std::move(ground), std::move(m)));
}

namespace {

std::vector<std::size_t> indices_in_ground(const FiniteRelation& r, const FinitePointSet& s) {
  std::vector<std::size_t> idx;
  idx.reserve(s.size());
  for (const auto& p : s) {
    const std::size_t i = r.ground().index_of(p);
    if (i == r.size()) {
      throw PreconditionViolation("point " + to_string(p) + " is not in the ground set");
    }
    idx.push_back(i);
  }
  return idx;
}

}  // namespace

FinitePointSet maximals_by_definition(const FiniteRelation& r, const FinitePointSet& s) {
  const auto idx = indices_in_ground(r, s);
  FinitePointSet out(s.dimension());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < idx.size() && maximal; ++b) {
      if (r.related(idx[b], idx[a]) && !r.related(idx[a], idx[b])) maximal = false;
    }
    if (maximal) out.insert(s[a]);
  }
  return out;
}

FinitePointSet maximals_by_base(const FiniteRelation& r, const FinitePointSet& s) {
  const auto idx = indices_in_ground(r, s);
  FinitePointSet out(s.dimension());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < idx.size() && maximal; ++b) {
      if (!r.related(idx[a], idx[b])) maximal = false;
    }
    if (maximal) out.insert(s[a]);
  }
  return out;
}

FinitePointSet maximals(const FiniteRelation& r, const FinitePointSet& s) {
  return r.is_total() ? maximals_by_base(r, s) : maximals_by_definition(r, s);
}

FinitePointSet maximals(const TotalPreorder& r, const FinitePointSet& s) {
  return maximals_by_base(r.relation(), s);
}

FinitePointSet convexified_maximals(const TotalPreorder& r, const FinitePointSet& s) {
  const FiniteRelation& rel = r.relation();
  const auto idx = indices_in_ground(rel, s);
  std::vector<FinitePointSet> uppers;
  uppers.reserve(idx.size());
  for (std::size_t i : idx) uppers.push_back(rel.upper_set(i));

  // Smallest upper sets first: a non-maximal point usually fails there.
  std::vector<std::size_t> order(idx.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return uppers[x].size() < uppers[y].size();
  });

  FinitePointSet out(s.dimension());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    bool maximal = true;
    for (std::size_t b : order) {
      if (!maximal) break;
      if (rel.related(idx[a], idx[b])) continue;  // already in R(s), hence in co(R(s))
      maximal = hull_membership(s[a], uppers[b].points()).member;
    }
    if (maximal) out.insert(s[a]);
  }
  return out;
}

}  // namespace acx
