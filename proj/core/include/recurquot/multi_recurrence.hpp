#pragma once

#include <string>
#include <vector>

#include "recurquot/mpoly.hpp"
#include "recurquot/recurrence.hpp"

namespace recurquot {

struct MultiTerm {
  Rational base_m;
  Rational base_n;
  /// Polynomial in (M, N): variable 0 is M, variable 1 is N.
  MPoly coeff{2};

  friend bool operator==(const MultiTerm&, const MultiTerm&) = default;
};

/// Two-parameter polynomial-exponential function
/// (m, n) -> sum c_i(m, n) a_i^m b_i^n with distinct base pairs.
class MultiRecurrence {
 public:
  MultiRecurrence() = default;
  /// Merges equal base pairs and drops zero coefficients. Throws ZeroRoot.
  explicit MultiRecurrence(std::vector<MultiTerm> terms);

  /// u(m) * v(n), the product of two one-parameter sequences.
  static MultiRecurrence product(const LinearRecurrence& in_m, const LinearRecurrence& in_n);

  const std::vector<MultiTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational operator()(unsigned long m, unsigned long n) const;

  friend bool operator==(const MultiRecurrence&, const MultiRecurrence&) = default;

  /// e.g. "3^m*(1/2)^n", "m*n".
  std::string to_string() const;

 private:
  std::vector<MultiTerm> terms_;
};

Rational multi_evaluate(const MultiRecurrence& u, unsigned long m, unsigned long n);

/// Embeds a polynomial in one variable into the (M, N) coefficient ring.
MPoly lift_to_bivariate(const UniPoly& p, std::size_t var);

}  // namespace recurquot
