#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace recurquot;
using testing_support::build;
using testing_support::poly;
using testing_support::sum_of_powers;

namespace {

const LinearRecurrence& as_linear(const QuotientCertificate& c) { return std::get<LinearRecurrence>(c.quotient); }

// Both defining identities, pointwise, wherever V and P are non-zero.
void check_certificate(const LinearRecurrence& u, const LinearRecurrence& v, const QuotientCertificate& c) {
  for (unsigned long n = 0; n <= 50; ++n) {
    Rational vn = v(n), pn = c.clearing_poly.evaluate(Rational(static_cast<long>(n)));
    if (vn == 0 || pn == 0) continue;
    if (const auto* lin = std::get_if<LinearRecurrence>(&c.quotient)) {
      CHECK((*lin)(n) == pn * u(n) / vn);
    } else {
      for (unsigned long m = 0; m <= 12; ++m)
        CHECK(std::get<MultiRecurrence>(c.quotient)(m, n) == pn * u(m) / vn);
    }
    CHECK(c.v_over_p(n) == vn / pn);
  }
}

}  // namespace

TEST_CASE("hadamard_quotient examples") {
  auto q = hadamard_quotient(sum_of_powers({{4, 1}, {1, -1}}), sum_of_powers({{2, 1}, {1, -1}}));
  REQUIRE(q.quotient.has_value());
  CHECK(q.quotient->to_string() == "2^n + 1");

  CHECK_FALSE(hadamard_quotient(sum_of_powers({{3, 1}, {1, -1}}), sum_of_powers({{2, 1}, {1, -1}})).quotient);

  auto r = hadamard_quotient(build({{3, {0, 0, 1}}}), build({{3, {0, 1}}}));
  REQUIRE(r.quotient.has_value());
  CHECK(r.quotient->to_string() == "n");

  CHECK_THROWS_AS(hadamard_quotient(sum_of_powers({{2, 1}}), LinearRecurrence()), DivisorZero);
  CHECK_THROWS_AS(hadamard_quotient(sum_of_powers({{2, 1}, {-2, 1}}), sum_of_powers({{2, 1}})), TorsionGroup);
}

TEST_CASE("polynomial_clearance examples") {
  auto u = sum_of_powers({{5, 1}}), v = build({{1, {0, 1, 1}}});
  auto a = polynomial_clearance(u, v);
  REQUIRE(a.certificate.has_value());
  CHECK(a.certificate->clearing_poly == poly("X^2 + X"));
  CHECK(as_linear(*a.certificate).to_string() == "5^n");
  CHECK(a.certificate->v_over_p.to_string() == "1");
  check_certificate(u, v, *a.certificate);

  auto u2 = build({{2, {1, 1}}}), v2 = build({{2, {0, 1}}});
  auto b = polynomial_clearance(u2, v2);
  REQUIRE(b.certificate.has_value());
  CHECK(b.certificate->clearing_poly == poly("X"));
  CHECK(as_linear(*b.certificate).to_string() == "n + 1");
  CHECK(b.certificate->v_over_p.to_string() == "2^n");
  check_certificate(u2, v2, *b.certificate);

  auto c = polynomial_clearance(sum_of_powers({{2, 1}}), sum_of_powers({{2, 1}, {1, -1}}));
  CHECK_FALSE(c.certificate.has_value());
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->to_string() == "T - 1");
}

TEST_CASE("clearance is invariant under scaling U") {
  oracle::Rng rng(61);
  auto u = sum_of_powers({{5, 1}}), v = build({{1, {0, 1, 1}}});
  auto base = polynomial_clearance(u, v);
  for (int i = 0; i < 20; ++i) {
    Rational c = rng.nonzero_rational(20, 20);
    auto scaled = polynomial_clearance(u * c, v);
    REQUIRE(scaled.certificate.has_value());
    CHECK(scaled.certificate->clearing_poly == base.certificate->clearing_poly);
    check_certificate(u * c, v, *scaled.certificate);
  }
}

TEST_CASE("cross_quotient examples") {
  auto a = cross_quotient(sum_of_powers({{3, 1}}), build({{2, {0, 1}}}));
  REQUIRE(a.certificate.has_value());
  CHECK(a.certificate->clearing_poly == poly("X"));
  CHECK(std::get<MultiRecurrence>(a.certificate->quotient).to_string() == "3^m*(1/2)^n");
  CHECK(a.certificate->v_over_p.to_string() == "2^n");
  check_certificate(sum_of_powers({{3, 1}}), build({{2, {0, 1}}}), *a.certificate);

  auto b = cross_quotient(sum_of_powers({{3, 1}, {1, -1}}), sum_of_powers({{2, 1}, {1, -1}}));
  CHECK_FALSE(b.certificate.has_value());
  CHECK(b.refusal == CrossRefusal::multiple_roots);

  auto c = cross_quotient(build({{5, {0, 1}}}), build({{1, {0, 0, 1}}}));
  REQUIRE(c.certificate.has_value());
  CHECK(c.certificate->clearing_poly == poly("X^2"));
  CHECK(std::get<MultiRecurrence>(c.certificate->quotient).to_string() == "m*5^m");
  CHECK(c.certificate->v_over_p.to_string() == "1");
}

TEST_CASE("converse check reports what it finds") {
  auto u = sum_of_powers({{4, 1}, {1, -1}}), v = sum_of_powers({{2, 1}, {1, -1}});
  auto cert = polynomial_clearance(u, v);
  REQUIRE(cert.certificate.has_value());
  auto rep = converse_check(u, v, *cert.certificate, 50);
  CHECK(rep.passed());
  CHECK(rep.tested == 50);  // V(0) = 0 is skipped

  // 5^n / (n (n + 1)) has denominators outside any fixed S.
  auto u5 = sum_of_powers({{5, 1}}), vp = build({{1, {0, 1, 1}}});
  auto c5 = polynomial_clearance(u5, vp);
  REQUIRE(c5.certificate.has_value());
  auto r5 = converse_check(u5, vp, *c5.certificate, 50);
  CHECK(r5.s.primes() == std::set<Integer>{5});
  CHECK_FALSE(r5.passed());
  CHECK(r5.failures.front() == std::pair<unsigned long, unsigned long>{1, 1});
}

TEST_CASE("hadamard_quotient agrees with the order-bounded oracle") {
  oracle::Rng rng(62);
  const std::vector<Rational> pool{1, 2, 3, 4, 6, Rational(1, 2), Rational(3, 2), 9};
  int divisible = 0, refused = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto qt = testing_support::random_terms(rng, pool, 2, 1);
    auto vt = testing_support::random_terms(rng, pool, 2, 1);
    auto q = build(qt), v = build(vt);
    if (q.is_zero() || v.is_zero()) continue;
    const bool product = trial % 2 == 0;
    auto u = product ? q * v : build(testing_support::random_terms(rng, pool, 3, 1));
    const std::size_t k = std::max<std::size_t>(testing_support::quotient_order_bound(u, v), 1);
    const unsigned long count = std::max<unsigned long>(4 * k, 16);
    std::vector<Rational> samples;
    bool v_vanishes = false;
    for (unsigned long n = 0; n < count; ++n) {
      Rational vn = oracle::eval(vt, n);
      if (vn == 0) v_vanishes = true;
      samples.push_back(vn == 0 ? Rational(0) : Rational(u(n) / vn));
    }
    if (v_vanishes) continue;
    auto rel = oracle::order_bounded_relation(samples, k);
    auto res = hadamard_quotient(u, v);
    CAPTURE(u.to_string());
    CAPTURE(v.to_string());
    CAPTURE(k);
    CHECK(res.quotient.has_value() == rel.has_value());
    if (res.quotient) {
      ++divisible;
      for (unsigned long n = 0; n < count; ++n) CHECK((*res.quotient)(n) == samples[n]);
      if (product) CHECK(*res.quotient == q);
    } else {
      ++refused;
    }
  }
  CHECK(divisible > 20);
  CHECK(refused > 20);
}
