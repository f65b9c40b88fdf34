#include "recurquot/quotient.hpp"

#include <set>

#include "recurquot/errors.hpp"
#include "recurquot/factor.hpp"

namespace recurquot {

namespace {

Integer coefficient_denominator_lcm(const LinearRecurrence& q) {
  Integer l = 1;
  for (const auto& t : q.terms()) l = lcm(l, lcm_of_denominators(t.coeff.coefficients()));
  return l;
}

Integer coefficient_denominator_lcm(const MultiRecurrence& q) {
  Integer l = 1;
  for (const auto& t : q.terms())
    for (const auto& [e, c] : t.coeff.terms()) l = lcm(l, Integer(c.get_den()));
  return l;
}

UniPoly x_part(const GroupRingElement& f) {
  // f must be free of T after shift normalization.
  UniPoly p;
  for (const auto& [e, c] : f.poly().terms()) p += UniPoly::monomial(c, static_cast<unsigned>(e[0]));
  return p;
}

GroupRingElement embed(const UniPoly& p, const std::shared_ptr<const MultiplicativeBasis>& basis) {
  LinearRecurrence as_seq = from_closed_form({{Rational(1), p}});
  return to_group_ring(as_seq, basis);
}

void require_nonzero(const LinearRecurrence& v) {
  if (v.is_zero()) throw DivisorZero("the divisor recurrence is zero");
}

void add_primes(const Rational& x, std::set<Integer>& out) {
  if (x == 0) return;
  for (const auto& [p, e] : factor_rational(x).exponents) out.insert(p);
}

}  // namespace

std::shared_ptr<const MultiplicativeBasis> common_basis(std::span<const LinearRecurrence* const> seqs) {
  std::vector<Rational> roots;
  for (const auto* s : seqs)
    for (const auto& t : s->terms()) roots.push_back(t.root);
  return std::make_shared<const MultiplicativeBasis>(compute_basis(roots));
}

HadamardQuotient hadamard_quotient(const LinearRecurrence& u, const LinearRecurrence& v) {
  require_nonzero(v);
  const LinearRecurrence* seqs[] = {&u, &v};
  auto basis = common_basis(seqs);
  auto q = laurent_divide(to_group_ring(u, basis), to_group_ring(v, basis));
  HadamardQuotient out;
  if (q) out.quotient = from_group_ring(*q);
  return out;
}

ClearanceResult polynomial_clearance(const LinearRecurrence& u, const LinearRecurrence& v) {
  require_nonzero(v);
  const LinearRecurrence* seqs[] = {&u, &v};
  auto basis = common_basis(seqs);
  GroupRingElement fu = to_group_ring(u, basis);
  GroupRingElement fv = to_group_ring(v, basis);
  GroupRingElement g = fu.is_zero() ? fv.unit_normalized() : laurent_gcd(fu, fv);
  auto cofactor = laurent_divide(fv, g);
  if (!cofactor) throw Error("internal: gcd does not divide its argument");

  ClearanceResult out;
  GroupRingElement reduced = cofactor->unit_normalized();
  if (!reduced.is_polynomial_up_to_unit()) {
    out.witness = reduced;
    return out;
  }
  // reduced is free of T after normalization: it is the monic P.
  UniPoly p = x_part(reduced).monic();
  GroupRingElement fp = embed(p, basis);
  auto q = laurent_divide(fu * fp, fv);
  auto w = laurent_divide(fv, fp);
  if (!q || !w) throw Error("internal: clearing polynomial does not clear");
  QuotientCertificate cert;
  cert.clearing_poly = p;
  LinearRecurrence quotient = from_group_ring(*q);
  cert.min_denominator = coefficient_denominator_lcm(quotient);
  cert.quotient = std::move(quotient);
  cert.v_over_p = from_group_ring(*w);
  out.certificate = std::move(cert);
  return out;
}

CrossResult cross_quotient(const LinearRecurrence& u_in_m, const LinearRecurrence& v_in_n) {
  require_nonzero(v_in_n);
  const LinearRecurrence* seqs[] = {&u_in_m, &v_in_n};
  (void)common_basis(seqs);  // torsion check on the joint roots

  CrossResult out;
  if (v_in_n.terms().size() != 1) {
    out.refusal = CrossRefusal::multiple_roots;
    return out;
  }
  const auto& only = v_in_n.terms().front();
  const Rational c = only.coeff.leading();
  const Rational beta = only.root;
  QuotientCertificate cert;
  cert.clearing_poly = only.coeff.monic();
  // P(n) U(m) / (c P(n) beta^n) = U(m) (1/beta)^n / c.
  std::vector<MultiTerm> terms;
  for (const auto& t : u_in_m.terms())
    terms.push_back({t.root, Rational(1) / beta, lift_to_bivariate(t.coeff * (Rational(1) / c), 0)});
  MultiRecurrence quotient(std::move(terms));
  cert.min_denominator = coefficient_denominator_lcm(quotient);
  cert.quotient = std::move(quotient);
  cert.v_over_p = from_closed_form({{beta, UniPoly(c)}});
  out.certificate = std::move(cert);
  return out;
}

SIntegerSpec auto_s_set(const LinearRecurrence& u, const LinearRecurrence& v, const UniPoly& p) {
  std::set<Integer> primes;
  for (const auto* s : {&u, &v})
    for (const auto& t : s->terms()) {
      add_primes(t.root, primes);
      for (const auto& c : t.coeff.coefficients()) add_primes(c, primes);
    }
  for (const auto& c : p.coefficients()) add_primes(c, primes);
  return SIntegerSpec(std::move(primes));
}

ConverseReport converse_check(const LinearRecurrence& u, const LinearRecurrence& v,
                              const QuotientCertificate& cert, unsigned long max_index) {
  ConverseReport report;
  report.s = auto_s_set(u, v, cert.clearing_poly);
  const bool two_param = std::holds_alternative<MultiRecurrence>(cert.quotient);
  for (unsigned long n = 0; n <= max_index; ++n) {
    Rational vn = evaluate(v, n);
    if (vn == 0) continue;
    const unsigned long m_lo = two_param ? 0 : n;
    const unsigned long m_hi = two_param ? max_index : n;
    for (unsigned long m = m_lo; m <= m_hi; ++m) {
      ++report.tested;
      Rational value = Rational(cert.min_denominator) * evaluate(u, m) / vn;
      if (s_membership(value, report.s) == SMembership::neither) report.failures.emplace_back(m, n);
    }
  }
  return report;
}

}  // namespace recurquot
