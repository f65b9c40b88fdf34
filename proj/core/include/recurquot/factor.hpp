#pragma once

#include <map>

#include "recurquot/rational.hpp"

namespace recurquot {

/// Caps on integer factorization. Trial division runs over all primes up to
/// `trial_bound`; any cofactor left over is split with Pollard's rho, giving
/// up with FactorizationLimit after `rho_iterations` steps per split.
struct FactorLimits {
  unsigned long trial_bound = 1'000'000;
  unsigned long rho_iterations = 4'000'000;

  /// Defaults, with `rho_iterations` taken from RECURQUOT_FACTOR_LIMIT when set.
  static FactorLimits from_environment();
};

/// Process-wide defaults used when no limits are passed (read once).
const FactorLimits& default_factor_limits();

/// sign * prod p^e. `exponents` never holds a zero exponent.
struct FactoredRational {
  int sign = 1;
  std::map<Integer, long> exponents;

  Rational rebuild() const;
  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;
};

/// Prime factorization of |n| for n != 0 (n = +-1 gives the empty map).
std::map<Integer, unsigned> factor_integer(const Integer& n,
                                           const FactorLimits& limits = default_factor_limits());

FactoredRational factor_rational(const Rational& x,
                                 const FactorLimits& limits = default_factor_limits());

/// Euler's totient of n >= 1.
Integer euler_phi(const Integer& n, const FactorLimits& limits = default_factor_limits());

}  // namespace recurquot
