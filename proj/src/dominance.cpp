#include "acx/dominance.hpp"

#include <string>

#include "acx/errors.hpp"
#include "acx/lp.hpp"
#include "acx/relation.hpp"

namespace acx {

namespace {

// Columns of the block LP: the weights of summand b occupy
// [offset[b], offset[b] + |base_b|).
struct BlockLayout {
  std::vector<std::size_t> offset;
  std::size_t columns = 0;

  explicit BlockLayout(const DecomposableSet& d, std::size_t leading = 0) : columns(leading) {
    for (const auto& s : d.summands()) {
      offset.push_back(columns);
      columns += s.base().size();
    }
  }
};

// Rows 0..n-1:  sum_b sum_j w_bj p_bj - sum_k mu_k g_k = y
// Rows n..n+B-1: sum_j w_bj = 1
// The mu columns come first when `extra` is nonempty.
LinearProgram block_program(const RationalVector& y, const DecomposableSet& d,
                            const std::vector<RationalVector>& extra, const BlockLayout& layout) {
  const std::size_t n = y.size();
  LinearProgram lp(layout.columns);
  for (std::size_t c = 0; c < n; ++c) {
    RationalVector row(layout.columns, Rational(0));
    for (std::size_t k = 0; k < extra.size(); ++k) row[k] = -extra[k][c];
    for (std::size_t b = 0; b < d.summands().size(); ++b) {
      const auto& base = d.summands()[b].base();
      for (std::size_t j = 0; j < base.size(); ++j) row[layout.offset[b] + j] = base[j][c];
    }
    lp.add(std::move(row), Relation::Equal, y[c]);
  }
  for (std::size_t b = 0; b < d.summands().size(); ++b) {
    RationalVector row(layout.columns, Rational(0));
    for (std::size_t j = 0; j < d.summands()[b].base().size(); ++j) row[layout.offset[b] + j] = 1;
    lp.add(std::move(row), Relation::Equal, Rational(1));
  }
  return lp;
}

RationalVector combine(const FinitePointSet& base, const RationalVector& weights) {
  RationalVector y = zeros(base.dimension());
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (weights[j] != 0) y += weights[j] * base[j];
  }
  return y;
}

void check_dimension(const RationalVector& y, const DecomposableSet& d) {
  if (y.size() != d.dimension()) {
    throw DimensionMismatch("point " + to_string(y) + " vs set of dimension " +
                            std::to_string(d.dimension()));
  }
}

}  // namespace

ChainDomination dominating_element_chain(const RationalVector& y, const RationalVector& weights,
                                         const ChainSet& chain, const Cone& cone) {
  if (!cone.contains_zero()) {
    throw PreconditionViolation("dominating element needs a cone containing zero");
  }
  const FinitePointSet& base = chain.base();
  if (weights.size() != base.size()) {
    throw PreconditionViolation("weights do not match the chain size");
  }
  Rational total(0);
  for (const auto& w : weights) {
    if (w < 0) throw PreconditionViolation("negative convex weight");
    total += w;
  }
  if (total != 1) throw PreconditionViolation("convex weights sum to " + to_string(total));
  if (combine(base, weights) != y) {
    throw PreconditionViolation("weights do not reproduce " + to_string(y));
  }

  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (weights[j] > 0) active.push_back(j);
  }
  // Unwinding the recursion: z dominates the normalized combination of the
  // suffix active[i..]. The base case is the last point with c = 0.
  RationalVector z = base[active.back()];
  for (std::size_t i = active.size() - 1; i-- > 0;) {
    const RationalVector& y1 = base[active[i]];
    switch (relate(cone, y1, z)) {
      case Comparability::Up:
      case Comparability::Both:
        break;  // z - y1 in C: z keeps dominating
      case Comparability::Down:
        z = y1;  // y1 - z in C, hence y1 - y in C
        break;
      case Comparability::Incomparable:
        throw PreconditionViolation("incomparable pair " + to_string(y1) + ", " + to_string(z) +
                                    " inside a chain");
    }
  }
  RationalVector c = z - y;
  if (!cone_contains(cone, c).member) {
    throw InternalError("constructed witness " + to_string(z) + " does not dominate " +
                        to_string(y));
  }
  return {std::move(z), std::move(c)};
}

HullDecomposition decompose_in_hulls(const RationalVector& y, const DecomposableSet& d) {
  check_dimension(y, d);
  const BlockLayout layout(d);
  const LinearProgram lp = block_program(y, d, {}, layout);
  const LpResult r = lp_solve(lp);

  HullDecomposition out;
  if (r.status != LpStatus::Infeasible) {
    out.member = true;
    for (std::size_t b = 0; b < d.summands().size(); ++b) {
      const auto first = r.primal.begin() + static_cast<std::ptrdiff_t>(layout.offset[b]);
      out.weights.emplace_back(first, first + static_cast<std::ptrdiff_t>(
                                                  d.summands()[b].base().size()));
    }
    return out;
  }
  // Farkas (f, beta): f.p_bj + beta_b >= 0 and f.y + sum beta < 0, so
  // -f . z <= sum beta for every materialized z while -f . y > sum beta.
  Separator s;
  s.normal = -RationalVector(r.dual.begin(), r.dual.begin() + static_cast<std::ptrdiff_t>(y.size()));
  s.bound = 0;
  for (std::size_t b = 0; b < d.summands().size(); ++b) s.bound += r.dual[y.size() + b];
  out.certificate = std::move(s);
  return out;
}

DominationCertificate dominating_element(const RationalVector& y, const DecomposableSet& d) {
  HullDecomposition dec = decompose_in_hulls(y, d);
  if (!dec.member) {
    throw PreconditionViolation("point " + to_string(y) + " lies outside the hull; separator " +
                                to_string(dec.certificate->normal) + " <= " +
                                to_string(dec.certificate->bound));
  }
  const Cone k = k_closure(d.cone());
  DominationCertificate cert;
  cert.direction = DominationCertificate::Direction::Dominating;
  cert.target = y;
  cert.witness = zeros(y.size());
  for (std::size_t b = 0; b < d.summands().size(); ++b) {
    const ChainSet& chain = d.summands()[b];
    const RationalVector yb = combine(chain.base(), dec.weights[b]);
    ChainDomination part = dominating_element_chain(yb, dec.weights[b], chain, k);
    cert.witness += part.witness;
    cert.summand_witnesses.push_back(std::move(part.witness));
  }
  cert.decomposition = std::move(dec.weights);
  cert.cone_vector = cert.witness - y;
  ConeMembership m = cone_contains(k, cert.cone_vector);
  if (!m.member) throw InternalError("summed witness escapes K");
  cert.cone_coefficients = std::move(m.coefficients);
  return cert;
}

DominationCertificate dominated_element(const RationalVector& y, const DecomposableSet& d) {
  DominationCertificate cert = dominating_element(y, d.negated_cone());
  // witness - y = sum mu (-g)  <=>  y - witness = sum mu g
  cert.direction = DominationCertificate::Direction::Dominated;
  cert.cone_vector = y - cert.witness;
  return cert;
}

bool verify_certificate(const DominationCertificate& cert, const DecomposableSet& d) {
  const std::size_t n = d.dimension();
  const auto& summands = d.summands();
  if (cert.target.size() != n || cert.witness.size() != n || cert.cone_vector.size() != n) {
    return false;
  }
  if (cert.decomposition.size() != summands.size() ||
      cert.summand_witnesses.size() != summands.size()) {
    return false;
  }
  RationalVector y = zeros(n);
  RationalVector z = zeros(n);
  for (std::size_t b = 0; b < summands.size(); ++b) {
    const auto& base = summands[b].base();
    const auto& w = cert.decomposition[b];
    if (w.size() != base.size()) return false;
    Rational total(0);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] < 0) return false;
      total += w[j];
      y += w[j] * base[j];
    }
    if (total != 1) return false;
    if (!base.contains(cert.summand_witnesses[b])) return false;
    z += cert.summand_witnesses[b];
  }
  if (y != cert.target || z != cert.witness) return false;

  const RationalVector expected = cert.direction == DominationCertificate::Direction::Dominating
                                      ? RationalVector(cert.witness - cert.target)
                                      : RationalVector(cert.target - cert.witness);
  if (expected != cert.cone_vector) return false;

  const auto& gens = d.cone().generators();
  if (cert.cone_coefficients.size() != gens.size()) return false;
  RationalVector c = zeros(n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (cert.cone_coefficients[i] < 0) return false;
    c += cert.cone_coefficients[i] * gens[i];
  }
  return c == cert.cone_vector;  // K contains zero, so zero mass is allowed
}

FinitePointSet pareto_optima_finite(const FinitePointSet& s, const Cone& cone) {
  FinitePointSet out(s.dimension());
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool optimal = true;
    for (std::size_t j = 0; j < s.size() && optimal; ++j) {
      if (j != i && cone_contains(cone, s[j] - s[i]).member) optimal = false;
    }
    if (optimal) out.insert(s[i]);
  }
  return out;
}

bool is_pareto_in_hull(const RationalVector& y, const DecomposableSet& d) {
  check_dimension(y, d);
  if (!is_pointed(d.cone())) {
    throw PreconditionViolation("hull Pareto test needs a pointed cone");
  }
  std::vector<RationalVector> gens;
  for (const auto& g : d.cone().generators()) {
    if (!is_zero(g)) gens.push_back(g);
  }
  const BlockLayout layout(d, gens.size());
  LinearProgram lp = block_program(y, d, gens, layout);
  for (std::size_t k = 0; k < gens.size(); ++k) lp.objective[k] = 1;

  const LpResult r = lp_solve(lp);
  if (r.status == LpStatus::Infeasible) {
    throw PreconditionViolation("point " + to_string(y) + " lies outside the hull");
  }
  if (r.status == LpStatus::Unbounded) throw InternalError("cone mass unbounded on a pointed cone");
  return r.value == 0;
}

EquivalenceReport check_equivalences(const DecomposableSet& d) {
  const Cone& cone = d.cone();
  if (!is_pointed(cone)) throw PreconditionViolation("equivalence checks need a pointed cone");
  const FinitePointSet y = materialize(d);

  EquivalenceReport rep;
  rep.optima = pareto_optima_finite(y, cone);
  rep.optima_with_zero = pareto_optima_finite(y, cone.with_zero(true));
  const FinitePointSet without_zero = pareto_optima_finite(y, cone.with_zero(false));
  rep.zero_invariance =
      rep.optima.same_points(rep.optima_with_zero) && rep.optima.same_points(without_zero);

  bool hull_ok = true;
  for (const auto& p : y) {
    if (is_pareto_in_hull(p, d) != rep.optima.contains(p)) hull_ok = false;
  }
  // Hull points off Y are never hull optima: pair midpoints and the centroid.
  std::vector<RationalVector> samples;
  const std::size_t m = y.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    samples.push_back(Rational(1, 2) * (y[i] + y[i + 1]));
    samples.push_back(Rational(1, 2) * (y[i] + y[m - 1 - i]));
  }
  RationalVector centroid = zeros(d.dimension());
  for (const auto& p : y) centroid += p;
  samples.push_back(Rational(1, static_cast<long>(m)) * centroid);
  for (const auto& q : samples) {
    if (y.contains(q)) continue;
    ++rep.hull_points_sampled;
    if (is_pareto_in_hull(q, d)) hull_ok = false;
  }
  rep.hull_invariance = hull_ok;

  // D(s) = { t in Y : s is dominated by t }, i.e. related(t, s) iff t - s in C.
  const FiniteRelation dom = FiniteRelation::from_predicate(
      y, [&](const RationalVector& t, const RationalVector& s) {
        return cone_contains(cone, t - s).member;
      });
  rep.domination_maximals = maximals(dom, y);
  rep.maximal_equivalence = rep.optima.same_points(rep.domination_maximals);
  return rep;
}

}  // namespace acx
