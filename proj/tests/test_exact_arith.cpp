#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace recurquot;
using testing_support::poly;

namespace {

oracle::Poly to_oracle(const UniPoly& p) { return p.coefficients(); }

UniPoly random_poly(oracle::Rng& rng, long max_degree) {
  std::vector<Rational> c;
  long deg = rng.range(0, max_degree);
  for (long i = 0; i <= deg; ++i) c.push_back(rng.rational(9, 4));
  return UniPoly(c);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+7") == 7);
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1 /2"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("powers and valuations") {
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(-2), 3) == -8);
  CHECK(pow(Integer(3), 5ul) == 243);
  CHECK(valuation(Integer(96), Integer(2)) == 5);
  CHECK(valuation(Rational(5, 24), Integer(2)) == -3);
  CHECK(valuation(Rational(5, 24), Integer(7)) == 0);
  CHECK(lcm_of_denominators(std::vector<Rational>{Rational(1, 4), Rational(5, 6), 3}) == 12);
}

TEST_CASE("factor_rational examples") {
  auto f = factor_rational(Rational(12, 35));
  CHECK(f.sign == 1);
  CHECK(f.exponents == std::map<Integer, long>{{2, 2}, {3, 1}, {5, -1}, {7, -1}});
  auto g = factor_rational(-8);
  CHECK(g.sign == -1);
  CHECK(g.exponents == std::map<Integer, long>{{2, 3}});
  CHECK(factor_rational(1).exponents.empty());
  CHECK_THROWS_AS(factor_rational(0), ZeroInput);
}

TEST_CASE("factorization agrees with trial division and round-trips") {
  oracle::Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    Rational x(rng.range(-999'999, 999'999), rng.range(1, 999'999));
    x.canonicalize();
    if (x == 0) continue;
    auto f = factor_rational(x);
    CHECK(f.rebuild() == x);
    auto num = oracle::trial_factor(x.get_num());
    auto got = factor_integer(x.get_num());
    CHECK(std::map<Integer, unsigned>(got.begin(), got.end()) == num);
  }
}

TEST_CASE("Pollard rho splits a product of two large primes") {
  Integer p("1000000007"), q("998244353");
  auto f = factor_integer(p * q * 12);
  CHECK(f == std::map<Integer, unsigned>{{2, 2}, {3, 1}, {q, 1}, {p, 1}});
  CHECK(euler_phi(Integer(36)) == 12);
  CHECK(euler_phi(Integer(8191)) == 8190);
}

TEST_CASE("factorization limit is reported, not ignored") {
  FactorLimits tight;
  tight.trial_bound = 100;
  tight.rho_iterations = 3;
  Integer p("1000000007"), q("998244353");
  CHECK_THROWS_AS(factor_integer(p * q, tight), FactorizationLimit);
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(poly("X^2 - 1"), poly("X^2 - 2*X + 1")) == poly("X - 1"));
  CHECK(poly_gcd(poly("X^3"), UniPoly()) == poly("X^3"));
  CHECK(poly_gcd(poly("2*X + 2"), poly("3*X^2 - 3")) == poly("X + 1"));
  CHECK_THROWS_AS(poly_gcd(UniPoly(), UniPoly()), BothZero);
}

TEST_CASE("poly_affine_compose examples") {
  CHECK(poly_affine_compose(poly("X^2"), 2, 1) == poly("4*X^2 + 4*X + 1"));
  CHECK(poly_affine_compose(poly("X + 1"), 1, 0) == poly("X + 1"));
  CHECK(poly_affine_compose(poly("X^2 - X"), 3, 2) == poly("9*X^2 + 9*X + 2"));
}

TEST_CASE("rational roots with multiplicity") {
  auto roots = rational_roots(poly("2*X^3 - 3*X^2 + 1"));  // (X - 1)^2 (2X + 1)
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<Rational, unsigned>{Rational(-1, 2), 1});
  CHECK(roots[1] == std::pair<Rational, unsigned>{Rational(1), 2});
  CHECK(rational_roots(poly("X^2 + 1")).empty());
}

TEST_CASE("rendering") {
  CHECK(poly("2*X^2 - 1/3").to_string() == "2*X^2 - 1/3");
  CHECK(poly("-X + 1").to_string() == "-X + 1");
  CHECK(UniPoly().to_string() == "0");
}

TEST_CASE("ring laws on random polynomials") {
  oracle::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    UniPoly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    Rational x = rng.rational(5, 3);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    Rational r = rng.rational(50, 50), s = rng.rational(50, 50), t = rng.rational(50, 50);
    CHECK((r * s) * t == r * (s * t));
    CHECK(r * (s + t) == r * s + r * t);
  }
}

TEST_CASE("gcd properties against hand Euclid") {
  oracle::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    UniPoly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 2);
    if (a.is_zero() && b.is_zero()) continue;
    UniPoly g = poly_gcd(a, b);
    CHECK(g.coefficients() == oracle::euclid_gcd(to_oracle(a), to_oracle(b)));
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
    if (c.is_zero()) continue;
    CHECK(poly_gcd(a * c, b * c) == (g * c).monic());
  }
}

TEST_CASE("Hermite form invariants") {
  oracle::Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = static_cast<std::size_t>(rng.range(1, 5)), cols = static_cast<std::size_t>(rng.range(1, 4));
    IntMatrix a(rows, IntVector(cols));
    for (auto& row : a)
      for (auto& x : row) x = rng.range(-6, 6);
    auto h = hermite_form(a, cols);
    // transform * a == form
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Integer s = 0;
        for (std::size_t k = 0; k < rows; ++k) s += h.transform[i][k] * a[k][j];
        CHECK(s == h.form[i][j]);
      }
    for (std::size_t i = 0; i < h.rank; ++i) {
      CHECK(h.form[i][h.pivots[i]] > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.form[k][h.pivots[i]] >= 0);
        CHECK(h.form[k][h.pivots[i]] < h.form[i][h.pivots[i]]);
      }
    }
    for (std::size_t i = h.rank; i < rows; ++i)
      for (const auto& x : h.form[i]) CHECK(x == 0);
    // Each input row lies in the row lattice of the form.
    for (const auto& row : a) {
      IntVector coeffs;
      CHECK(solve_in_lattice(h, row, coeffs));
    }
    // Product of Smith invariants equals the gcd of maximal minors; check the
    // rank agrees at least.
    CHECK(smith_invariants(a, cols).size() == h.rank);
  }
}

TEST_CASE("Smith invariants") {
  IntMatrix a{{2, 0}, {1, 1}, {0, 2}};
  CHECK(smith_invariants(a, 2) == std::vector<Integer>{1, 2});
  IntMatrix b{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(smith_invariants(b, 3) == std::vector<Integer>{2, 6, 12});
  IntVector c;
  auto h = hermite_form(IntMatrix{{2, 0}, {0, 2}}, 2);
  CHECK_FALSE(solve_in_lattice(h, IntVector{1, 0}, c));
}
