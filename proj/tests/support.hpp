#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "recurquot/recurquot.hpp"

namespace testing_support {

using recurquot::LinearRecurrence;
using recurquot::Rational;
using recurquot::UniPoly;

inline LinearRecurrence build(const std::vector<oracle::Term>& terms) {
  std::vector<recurquot::RecurrenceTerm> out;
  for (const auto& t : terms) out.push_back({t.root, UniPoly(t.coeff)});
  return recurquot::from_closed_form(std::move(out));
}

// Shorthand for a closed form with constant coefficients.
inline LinearRecurrence sum_of_powers(const std::vector<std::pair<Rational, Rational>>& terms) {
  std::vector<oracle::Term> ts;
  for (const auto& [root, c] : terms) ts.push_back({root, {c}});
  return build(ts);
}

inline UniPoly poly(const std::string& text) { return recurquot::parse_unipoly(text); }

// Random small closed forms over a torsion-free pool of positive roots.
inline std::vector<oracle::Term> random_terms(oracle::Rng& rng, const std::vector<Rational>& roots,
                                              long max_terms, long max_degree) {
  std::vector<oracle::Term> terms;
  long count = rng.range(1, max_terms);
  std::vector<Rational> pool = roots;
  for (long i = 0; i < count && !pool.empty(); ++i) {
    auto k = static_cast<std::size_t>(rng.range(0, static_cast<long>(pool.size()) - 1));
    oracle::Term t{pool[k], {}};
    pool.erase(pool.begin() + static_cast<long>(k));
    long deg = rng.range(0, max_degree);
    for (long j = 0; j <= deg; ++j) t.coeff.push_back(Rational(rng.range(-4, 4)));
    if (t.coeff.back() == 0) t.coeff.back() = 1;
    terms.push_back(std::move(t));
  }
  return terms;
}

// If v divides u in the group ring, the quotient's X-degree is the
// difference of X-degrees and its T-support lies in the box given by the
// differences of the per-variable exponent ranges. The product of the box
// sizes bounds the quotient's order. Returns 0 when no quotient can exist.
inline std::size_t quotient_order_bound(const LinearRecurrence& u, const LinearRecurrence& v) {
  if (u.is_zero()) return 1;
  const LinearRecurrence* both[] = {&u, &v};
  auto basis = recurquot::common_basis(both);
  auto fu = recurquot::to_group_ring(u, basis).poly(), fv = recurquot::to_group_ring(v, basis).poly();
  std::size_t bound = 1;
  for (std::size_t var = 0; var < fu.nvars(); ++var) {
    long lo_u = fu.min_exponents()[var], lo_v = fv.min_exponents()[var];
    long hi_u = lo_u, hi_v = lo_v;
    for (const auto& [e, c] : fu.terms()) hi_u = std::max(hi_u, e[var]);
    for (const auto& [e, c] : fv.terms()) hi_v = std::max(hi_v, e[var]);
    // X is not inverted: a term n^d alpha^n has order d + 1.
    long width = var == 0 ? hi_u - hi_v : (hi_u - lo_u) - (hi_v - lo_v);
    if (width < 0 || (var == 0 && lo_u < lo_v)) return 0;
    bound *= static_cast<std::size_t>(width + 1);
  }
  return bound;
}

}  // namespace testing_support
