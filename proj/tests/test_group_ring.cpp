#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace recurquot;
using testing_support::build;
using testing_support::sum_of_powers;

namespace {

std::shared_ptr<const MultiplicativeBasis> basis_of(std::vector<Rational> roots) {
  return std::make_shared<const MultiplicativeBasis>(compute_basis(roots));
}

}  // namespace

TEST_CASE("to_group_ring examples") {
  auto b2 = basis_of({2});
  auto f = to_group_ring(sum_of_powers({{4, 1}, {1, -1}}), b2);
  CHECK(f.to_string() == "T^2 - 1");
  CHECK(f == parse_group_ring("T^2 - 1", b2));

  auto empty = basis_of({1});
  auto g = to_group_ring(build({{1, {0, 1, 1}}}), empty);
  CHECK(g.to_string() == "X^2 + X");

  auto b32 = std::make_shared<const MultiplicativeBasis>(basis_from_generators(std::vector<Rational>{Rational(3, 2)}));
  CHECK(to_group_ring(sum_of_powers({{Rational(3, 2), 5}}), b32).to_string() == "5*T");

  CHECK(to_group_ring(sum_of_powers({{Rational(2, 3), 5}}), b32).to_string() == "5*T^-1");
  // The canonical basis of <3/2> is {2/3}.
  CHECK(basis_of({Rational(3, 2)}).get()->generators() == std::vector<Rational>{Rational(2, 3)});
  CHECK_THROWS_AS(to_group_ring(sum_of_powers({{3, 1}}), b2), RootNotInGroup);
}

TEST_CASE("from_group_ring examples") {
  auto b2 = basis_of({2});
  CHECK(from_group_ring(parse_group_ring("T^2 - 1", b2)).to_string() == "4^n - 1");
  auto empty = basis_of({1});
  CHECK(from_group_ring(parse_group_ring("X^2 + X", empty)).to_string() == "n^2 + n");
  auto b23 = basis_of({2, 3});
  CHECK(from_group_ring(parse_group_ring("3*X*T1*T2", b23)).to_string() == "3*n*6^n");
}

TEST_CASE("laurent gcd and division examples") {
  auto b2 = basis_of({2});
  auto g = laurent_gcd(parse_group_ring("T^2 - 1", b2), parse_group_ring("T - 1", b2));
  CHECK(g == parse_group_ring("T - 1", b2));
  CHECK(laurent_gcd(parse_group_ring("(X + 1)*T", b2), parse_group_ring("X*T", b2)) ==
        GroupRingElement::one(b2));

  auto b23 = basis_of({2, 3});
  auto t1 = parse_group_ring("T1 - 1", b23), t2 = parse_group_ring("T2 - 1", b23);
  CHECK(laurent_gcd(t2, t1) == GroupRingElement::one(b23));
  CHECK_FALSE(laurent_divide(t2, t1).has_value());

  auto q = laurent_divide(parse_group_ring("T^2 - 1", b2), parse_group_ring("T - 1", b2));
  REQUIRE(q.has_value());
  CHECK(*q == parse_group_ring("T + 1", b2));

  auto f = parse_group_ring("(X^2 - 3)*T^-2 + X*T", b2);
  CHECK(laurent_divide(f, f) == GroupRingElement::one(b2));

  CHECK_THROWS_AS(laurent_gcd(t1, parse_group_ring("T - 1", b2)), BasisMismatch);
  CHECK_THROWS_AS(laurent_gcd(GroupRingElement::zero(b2), GroupRingElement::zero(b2)), BothZero);
  CHECK_THROWS_AS(laurent_divide(f, GroupRingElement::zero(b2)), DivisorZero);
}

TEST_CASE("units and normal forms") {
  auto b2 = basis_of({2});
  CHECK(parse_group_ring("3*T^-4", b2).is_unit());
  CHECK_FALSE(parse_group_ring("X*T", b2).is_unit());
  CHECK(parse_group_ring("(X + 1)*T^3", b2).is_polynomial_up_to_unit());
  CHECK_FALSE(parse_group_ring("T - 1", b2).is_polynomial_up_to_unit());
  CHECK(parse_group_ring("2*T^-1 + 4*T", b2).unit_normalized() == parse_group_ring("T^2 + 1/2", b2));
}

TEST_CASE("group ring properties on random elements") {
  oracle::Rng rng(31);
  const std::vector<Rational> pool{2, 3, Rational(1, 2), 6, Rational(3, 2), 4, 9, 1};
  auto basis = basis_of({2, 3});
  for (int trial = 0; trial < 150; ++trial) {
    auto fu = build(testing_support::random_terms(rng, pool, 3, 1));
    auto gu = build(testing_support::random_terms(rng, pool, 3, 1));
    auto hu = build(testing_support::random_terms(rng, pool, 2, 1));
    auto f = to_group_ring(fu, basis), g = to_group_ring(gu, basis), h = to_group_ring(hu, basis);

    // Evaluation is a ring homomorphism.
    for (unsigned long n = 0; n <= 30; ++n) {
      CHECK((f * g).evaluate(n) == f.evaluate(n) * g.evaluate(n));
      CHECK((f + g).evaluate(n) == fu(n) + gu(n));
    }
    CHECK(from_group_ring(f) == fu);

    if (f.is_zero() && g.is_zero()) continue;
    auto d = laurent_gcd(f, g);
    CHECK(laurent_divide(f, d).has_value());
    CHECK(laurent_divide(g, d).has_value());
    if (h.is_zero()) continue;
    CHECK(laurent_gcd(f * h, g * h) == (d * h).unit_normalized());
  }
}
