#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "recurquot/mpoly.hpp"
#include "recurquot/multiplicative_group.hpp"

namespace recurquot {

class LinearRecurrence;

/// An element of Q[X, T1^{+-1}, ..., Tt^{+-1}] over a fixed multiplicative
/// basis gamma_1..gamma_t. The term X^a T^b stands for the sequence
/// n -> n^a * prod gamma_i^{n b_i}. Variable 0 of the underlying MPoly is X.
///
/// Elements keep their exact Laurent exponents so the map to recurrences is
/// a bijection; canonical (unit-free) representatives are produced by
/// shift_normalized() and unit_normalized().
class GroupRingElement {
 public:
  GroupRingElement(std::shared_ptr<const MultiplicativeBasis> basis, MPoly poly);
  static GroupRingElement zero(std::shared_ptr<const MultiplicativeBasis> basis);
  static GroupRingElement one(std::shared_ptr<const MultiplicativeBasis> basis);

  const std::shared_ptr<const MultiplicativeBasis>& basis() const noexcept { return basis_; }
  const MPoly& poly() const noexcept { return poly_; }
  std::size_t rank() const noexcept { return poly_.nvars() - 1; }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  /// Units are exactly the non-zero single terms free of X.
  bool is_unit() const;
  /// True when every term has the same T-exponent, i.e. the element is a
  /// unit times something in Q[X].
  bool is_polynomial_up_to_unit() const;

  /// Multiplies by the T-monomial making each T_i's minimum exponent zero.
  GroupRingElement shift_normalized() const;
  /// shift_normalized() scaled so the lexicographic leading coefficient is 1:
  /// the canonical representative of the unit class.
  GroupRingElement unit_normalized() const;

  Rational evaluate(unsigned long n) const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator*(const Rational& c) const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.poly_ == b.poly_;
  }

  /// Terms grouped by T-monomial, e.g. "(X+1)*T1^2*T2^-1 + 3".
  std::string to_string() const;

 private:
  void require_same_basis(const GroupRingElement& o) const;

  std::shared_ptr<const MultiplicativeBasis> basis_;
  MPoly poly_;
};

GroupRingElement to_group_ring(const LinearRecurrence& u,
                               std::shared_ptr<const MultiplicativeBasis> basis);
LinearRecurrence from_group_ring(const GroupRingElement& f);

/// Canonical gcd (unit_normalized). Throws BasisMismatch or BothZero.
GroupRingElement laurent_gcd(const GroupRingElement& f, const GroupRingElement& g);

/// q with f = g * q, or nullopt when g does not divide f.
std::optional<GroupRingElement> laurent_divide(const GroupRingElement& f, const GroupRingElement& g);

}  // namespace recurquot
