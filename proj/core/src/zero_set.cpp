#include "recurquot/zero_set.hpp"

#include <algorithm>

#include "recurquot/errors.hpp"

namespace recurquot {

namespace {

Rational abs_coefficient_sum(const UniPoly& p, long below_degree) {
  Rational s = 0;
  for (long k = 0; k < below_degree && k <= p.degree(); ++k) s += abs(p.coefficients()[static_cast<std::size_t>(k)]);
  return s;
}

bool unique_dominant_root(const LinearRecurrence& u) {
  const auto& t = u.terms();
  return t.size() == 1 || abs(t[0].root) > abs(t[1].root);
}

struct Section {
  long q;
  long r;
  LinearRecurrence seq;
};

}  // namespace

std::optional<unsigned long> dominance_threshold(const LinearRecurrence& u, unsigned long max_m) {
  if (u.is_zero()) return std::nullopt;
  if (!unique_dominant_root(u)) return std::nullopt;
  const auto& terms = u.terms();
  const UniPoly& lead_poly = terms[0].coeff;
  const long d = lead_poly.degree();
  const Rational top = abs(terms[0].root);
  const Rational lead = abs(lead_poly.leading());
  const Rational low = abs_coefficient_sum(lead_poly, d);

  struct Tail {
    Rational weight;  // 2 S_j / l
    long exponent;    // e_j - d
    Rational ratio;   // |beta_j| / A
  };
  std::vector<Tail> tails;
  for (std::size_t j = 1; j < terms.size(); ++j)
    tails.push_back({2 * abs_coefficient_sum(terms[j].coeff, terms[j].coeff.degree() + 1) / lead,
                     terms[j].coeff.degree() - d, abs(terms[j].root) / top});

  Rational start_q = 2 * low / lead;
  mpz_class start;
  mpz_cdiv_q(start.get_mpz_t(), start_q.get_num_mpz_t(), start_q.get_den_mpz_t());
  unsigned long m0 = std::max<unsigned long>(1, start.fits_ulong_p() ? start.get_ui() : max_m + 1);

  for (unsigned long m = m0; m <= max_m; ++m) {
    const Rational rm(m);
    bool decreasing = true;
    Rational f = 0;
    for (const auto& t : tails) {
      if (t.exponent > 0 && pow(Rational(m + 1), t.exponent) * t.ratio > pow(rm, t.exponent)) {
        decreasing = false;
        break;
      }
      f += t.weight * pow(rm, t.exponent) * pow(t.ratio, static_cast<long>(m));
    }
    if (decreasing && f < 1) return m;
  }
  return std::nullopt;
}

ZeroSet zero_set(const LinearRecurrence& u, unsigned long search_bound) {
  ZeroSet out;
  if (u.is_zero()) {
    out.progressions.push_back({1, 0});
    out.certificate = ZeroSetCertificate::complete;
    out.threshold = 0;
    return out;
  }

  // Rational roots can only be torsion-related through -1, so the sections
  // modulo 2 are non-degenerate; a unique dominant root needs no split.
  std::vector<Section> sections;
  if (unique_dominant_root(u))
    sections.push_back({1, 0, u});
  else
    for (long r = 0; r < 2; ++r) sections.push_back({2, r, decimate(u, 2, r)});

  bool complete = true;
  unsigned long threshold = 0;
  for (const auto& s : sections) {
    if (s.seq.is_zero()) {
      out.progressions.push_back({s.q, s.r});
      continue;
    }
    if (search_bound < static_cast<unsigned long>(s.r)) {
      complete = false;
      continue;
    }
    unsigned long max_m = (search_bound - static_cast<unsigned long>(s.r)) / static_cast<unsigned long>(s.q);
    auto m0 = dominance_threshold(s.seq, max_m);
    if (!m0) {
      complete = false;
      continue;
    }
    threshold = std::max(threshold, static_cast<unsigned long>(s.q) * *m0 + static_cast<unsigned long>(s.r));
  }

  for (unsigned long n = 0; n <= search_bound; ++n) {
    bool covered = std::any_of(out.progressions.begin(), out.progressions.end(), [n](const Progression& p) {
      return static_cast<long>(n % static_cast<unsigned long>(p.modulus)) == p.residue;
    });
    if (!covered && evaluate(u, n) == 0) out.sporadic.push_back(n);
  }
  out.certificate = complete ? ZeroSetCertificate::complete : ZeroSetCertificate::bounded_only;
  if (complete) out.threshold = threshold;
  return out;
}

}  // namespace recurquot
