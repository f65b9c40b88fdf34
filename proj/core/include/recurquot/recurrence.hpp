#pragma once

#include <span>
#include <string>
#include <vector>

#include "recurquot/place.hpp"
#include "recurquot/unipoly.hpp"

namespace recurquot {

struct RecurrenceTerm {
  Rational root;
  UniPoly coeff;

  friend bool operator==(const RecurrenceTerm&, const RecurrenceTerm&) = default;
};

/// Closed form n -> sum u_i(n) alpha_i^n with distinct non-zero rational
/// roots and non-zero polynomial coefficients. Terms are sorted by
/// decreasing |root|, a positive root before its negative; the zero sequence
/// has no terms.
class LinearRecurrence {
 public:
  LinearRecurrence() = default;

  const std::vector<RecurrenceTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<Rational> roots() const;
  /// Order of the minimal relation: sum of (deg u_i + 1).
  std::size_t order() const;

  Rational operator()(unsigned long n) const;

  LinearRecurrence operator+(const LinearRecurrence& o) const;
  LinearRecurrence operator-(const LinearRecurrence& o) const;
  /// Pointwise (Hadamard) product.
  LinearRecurrence operator*(const LinearRecurrence& o) const;
  LinearRecurrence operator*(const Rational& c) const;
  LinearRecurrence operator-() const { return *this * Rational(-1); }

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;

  /// e.g. "2^n - 1", "(n+1)*2^n", "n^2*(3/2)^n". `var` names the index.
  std::string to_string(const std::string& var = "n") const;

 private:
  friend LinearRecurrence from_closed_form(std::vector<RecurrenceTerm> terms);
  std::vector<RecurrenceTerm> terms_;
};

/// Merges equal roots, drops zero coefficients and sorts. Throws ZeroRoot.
LinearRecurrence from_closed_form(std::vector<RecurrenceTerm> terms);

/// Solves U(n+k) = c_{k-1} U(n+k-1) + ... + c_0 U(n) with the given initial
/// values. The companion polynomial must split over Q (else
/// IrrationalRoots); c_0 must be non-zero.
LinearRecurrence from_relation(std::span<const Rational> relation, std::span<const Rational> initial);

Rational evaluate(const LinearRecurrence& u, unsigned long n);

enum class RingOp { add, hadamard_mul };
LinearRecurrence ring_op(const LinearRecurrence& a, const LinearRecurrence& b, RingOp op);

/// The section n -> u(qn + r): roots alpha^q, coefficients alpha^r u(qX + r).
/// Requires q >= 1 and 0 <= r < q.
LinearRecurrence decimate(const LinearRecurrence& u, long q, long r);

/// V = V1 - W, where V1 keeps the terms whose roots have maximal absolute
/// value at the place and W collects the rest with a sign flip.
struct DominantSplit {
  Place place = Place::archimedean();
  LinearRecurrence dominant;
  LinearRecurrence rest;
  /// max |root of W| / max |root of V1|; zero when W is empty.
  Rational ratio_delta;
};

DominantSplit dominant_split(const LinearRecurrence& v, const Place& place);

}  // namespace recurquot
