#pragma once

#include <string>
#include <utility>
#include <vector>

#include "recurquot/rational.hpp"

namespace recurquot {

/// Dense univariate polynomial over Q. Coefficients are indexed by degree and
/// the highest stored coefficient is never zero; the zero polynomial stores
/// nothing.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  UniPoly(long constant) : UniPoly(Rational(constant)) {}  // NOLINT

  static UniPoly x();
  static UniPoly monomial(const Rational& c, unsigned degree);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Rational evaluate(const Rational& at) const;
  UniPoly monic() const;
  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Renders highest degree first, e.g. "2*X^2 - 1/3".
  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; divisor must be non-zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd. Throws BothZero when a = b = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// u(qX + r), expanded. Requires q >= 1.
UniPoly poly_affine_compose(const UniPoly& u, long q, long r);

/// Distinct rational roots with multiplicities, ascending by value.
std::vector<std::pair<Rational, unsigned>> rational_roots(const UniPoly& f);

}  // namespace recurquot
