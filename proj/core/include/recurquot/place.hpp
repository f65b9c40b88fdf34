#pragma once

#include <string>

#include "recurquot/rational.hpp"

namespace recurquot {

/// A place of Q: the archimedean absolute value or the p-adic one for a
/// prime p.
class Place {
 public:
  static Place archimedean() { return Place(); }
  /// Throws InvalidArgument unless p is prime.
  static Place finite(const Integer& p);

  bool is_archimedean() const noexcept { return prime_ == 0; }
  const Integer& prime() const noexcept { return prime_; }

  friend bool operator==(const Place&, const Place&) = default;

  /// "inf" or the prime in decimal.
  std::string to_string() const;

 private:
  Place() = default;
  Integer prime_ = 0;
};

/// |x| at the place, normalized so the product formula holds: the usual
/// absolute value, or p^{-v_p(x)}. |0| = 0.
Rational place_abs(const Rational& x, const Place& place);

}  // namespace recurquot
