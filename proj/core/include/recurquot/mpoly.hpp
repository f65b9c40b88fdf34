#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recurquot/rational.hpp"

namespace recurquot {

/// Exponent vector, one slot per variable. Negative entries are allowed
/// (Laurent monomials); the gcd and division routines expect non-negative ones.
using Exponents = std::vector<long>;

/// Sparse multivariate polynomial over Q with a fixed number of variables.
/// Terms are ordered lexicographically by exponent vector, so variable 0 is
/// the most significant and the last term is the leading one.
class MPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  MPoly(std::size_t nvars, Terms terms);

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly monomial(const Exponents& e, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const noexcept { return terms_.size(); }

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  long degree_in(std::size_t var) const;
  /// Per-variable minimum exponent over all terms (zeros for the zero poly).
  Exponents min_exponents() const;
  /// Coefficient of var^d, returned with var's exponent set to zero.
  MPoly coefficient_in(std::size_t var, long d) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const { return *this * Rational(-1); }

  /// Multiplies by the monomial with exponents `shift`.
  MPoly shifted(const Exponents& shift) const;

  friend bool operator==(const MPoly&, const MPoly&) = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t nvars_;
  Terms terms_;
};

/// Exact quotient a / b in Q[x...] (non-negative exponents), or nullopt if b
/// does not divide a. b must be non-zero.
std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);

/// Greatest common divisor in Q[x...], normalized to leading coefficient 1.
/// Recursive content / primitive-remainder-sequence algorithm with variable 0
/// outermost. Throws BothZero if both inputs are zero.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

}  // namespace recurquot
