#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace recurquot;
using testing_support::build;
using testing_support::poly;
using testing_support::sum_of_powers;

namespace {

std::vector<Rational> rs(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

const std::vector<Rational> kRootPool{2, -2, 3, -3, 1, -1, Rational(1, 2), Rational(3, 2), Rational(-2, 3), 4, 5};

}  // namespace

TEST_CASE("from_closed_form examples") {
  auto a = from_closed_form({{2, poly("1")}, {2, poly("X")}});
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms()[0].coeff == poly("X + 1"));
  CHECK(from_closed_form({{2, poly("1")}, {1, poly("-1")}}).to_string() == "2^n - 1");
  CHECK(from_closed_form({{3, poly("X")}, {3, poly("-X")}}).is_zero());
  CHECK_THROWS_AS(from_closed_form({{0, poly("1")}}), ZeroRoot);
}

TEST_CASE("from_relation examples") {
  CHECK(from_relation(rs({-2, 3}), rs({0, 1})).to_string() == "2^n - 1");
  CHECK(from_relation(rs({5}), rs({1})).to_string() == "5^n");
  CHECK_THROWS_AS(from_relation(rs({1, 1}), rs({0, 1})), IrrationalRoots);
  // (z - 2)^2: repeated root gives a polynomial coefficient.
  CHECK(from_relation(rs({-4, 4}), rs({0, 2})).to_string() == "n*2^n");
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(sum_of_powers({{2, 1}, {1, -1}}), 10) == 1023);
  CHECK(evaluate(build({{1, {0, 1, 1}}}), 4) == 20);
  CHECK(evaluate(sum_of_powers({{3, 1}, {1, -1}}), 6) == 728);
}

TEST_CASE("ring_op examples") {
  auto a = sum_of_powers({{2, 1}, {1, -1}}), b = sum_of_powers({{2, 1}, {1, 1}});
  CHECK(ring_op(a, b, RingOp::hadamard_mul).to_string() == "4^n - 1");
  CHECK(ring_op(a, sum_of_powers({{1, 1}}), RingOp::add).to_string() == "2^n");
  auto n2n = build({{2, {0, 1}}});
  CHECK(ring_op(n2n, n2n, RingOp::hadamard_mul).to_string() == "n^2*4^n");
}

TEST_CASE("decimate examples") {
  auto u = sum_of_powers({{2, 1}, {-2, 1}});
  CHECK(decimate(u, 2, 0).to_string() == "2*4^n");
  CHECK(decimate(u, 2, 1).is_zero());
  CHECK(decimate(sum_of_powers({{2, 1}, {1, -1}}), 3, 1).to_string() == "2*8^n - 1");
}

TEST_CASE("dominant_split examples") {
  auto v = sum_of_powers({{2, 1}, {1, -1}});
  auto a = dominant_split(v, Place::archimedean());
  CHECK(a.dominant.to_string() == "2^n");
  CHECK(a.rest.to_string() == "1");
  CHECK(a.ratio_delta == Rational(1, 2));

  auto b = dominant_split(v, Place::finite(2));
  CHECK(b.dominant.to_string() == "-1");
  CHECK(b.rest.to_string() == "-2^n");
  CHECK(b.ratio_delta == Rational(1, 2));

  auto c = dominant_split(sum_of_powers({{6, 1}, {3, 1}, {1, 1}}), Place::archimedean());
  CHECK(c.dominant.to_string() == "6^n");
  CHECK(c.rest.to_string() == "-3^n - 1");
  CHECK(c.ratio_delta == Rational(1, 2));
  CHECK(c.dominant - c.rest == sum_of_powers({{6, 1}, {3, 1}, {1, 1}}));

  CHECK_THROWS_AS(dominant_split(LinearRecurrence(), Place::archimedean()), ZeroRecurrence);
}

TEST_CASE("multi_evaluate examples") {
  MultiRecurrence a({{3, Rational(1, 2), MPoly::constant(2, 1)}});
  CHECK(multi_evaluate(a, 2, 3) == Rational(9, 8));
  CHECK(multi_evaluate(a, 0, 0) == 1);
  MultiRecurrence b({{1, 1, MPoly::monomial({1, 1}, 1)}});
  CHECK(multi_evaluate(b, 3, 4) == 12);
  CHECK(a.to_string() == "3^m*(1/2)^n");
  CHECK(b.to_string() == "m*n");
}

TEST_CASE("rendering of closed forms") {
  CHECK(build({{2, {1, 1}}}).to_string() == "(n + 1)*2^n");
  CHECK(sum_of_powers({{Rational(3, 2), 1}}).to_string() == "(3/2)^n");
  CHECK(sum_of_powers({{2, 1}, {-2, 1}}).to_string() == "2^n + (-2)^n");
  CHECK(LinearRecurrence().to_string() == "0");
}

TEST_CASE("closed forms agree with the brute-force evaluator and their relations") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    auto terms = testing_support::random_terms(rng, kRootPool, 4, 2);
    auto u = build(terms);
    for (unsigned long n = 0; n <= 30; ++n) CHECK(u(n) == oracle::eval(terms, n));

    // Relation from samples, then reconstruct and compare.
    std::size_t k = u.order();
    std::vector<Rational> samples;
    for (unsigned long n = 0; n < 4 * k + 4; ++n) samples.push_back(u(n));
    auto rel = oracle::order_bounded_relation(samples, k);
    REQUIRE(rel.has_value());
    if (rel->empty()) {
      CHECK(u.is_zero());
      continue;
    }
    std::vector<Rational> c(rel->rbegin(), rel->rend());
    std::vector<Rational> init(samples.begin(), samples.begin() + static_cast<long>(c.size()));
    if (c[0] == 0) continue;  // sample relation of lower order with zero tail
    auto w = from_relation(c, init);
    CHECK(w == u);
    // the defining relation holds for 0 <= n <= 3k
    for (unsigned long n = 0; n + c.size() <= 3 * c.size(); ++n) {
      Rational rhs = 0;
      for (std::size_t i = 0; i < c.size(); ++i) rhs += c[i] * w(n + i);
      CHECK(w(n + c.size()) == rhs);
    }
  }
}

TEST_CASE("ring operations commute with evaluation") {
  oracle::Rng rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = build(testing_support::random_terms(rng, kRootPool, 3, 2));
    auto b = build(testing_support::random_terms(rng, kRootPool, 3, 2));
    auto s = ring_op(a, b, RingOp::add), p = ring_op(a, b, RingOp::hadamard_mul);
    for (unsigned long n = 0; n <= 50; ++n) {
      CHECK(s(n) == a(n) + b(n));
      CHECK(p(n) == a(n) * b(n));
    }
  }
}

TEST_CASE("decimation coherence and non-degeneracy of q = 2 sections") {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = build(testing_support::random_terms(rng, kRootPool, 4, 2));
    for (long q = 1; q <= 4; ++q)
      for (long r = 0; r < q; ++r) {
        auto s = decimate(u, q, r);
        for (unsigned long n = 0; n <= 50; ++n)
          CHECK(s(n) == u(static_cast<unsigned long>(q) * n + static_cast<unsigned long>(r)));
      }
    for (long r = 0; r < 2; ++r) {
      auto roots = decimate(u, 2, r).roots();
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j) CHECK(roots[i] != -roots[j]);
    }
  }
}
