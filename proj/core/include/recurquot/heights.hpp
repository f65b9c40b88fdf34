#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "recurquot/place.hpp"
#include "recurquot/unipoly.hpp"

namespace recurquot {

/// Exact real number of the form sum_p c_p log p with rational c_p. Heights,
/// Weil functions and decay ratios over Q all live in this group, so they
/// compare exactly; floating point only appears in to_double().
class LogSum {
 public:
  LogSum() = default;
  /// log x for a positive rational x.
  static LogSum log_of(const Rational& x);
  static LogSum log_prime(const Integer& p, const Rational& coefficient = Rational(1));

  const std::map<Integer, Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  LogSum& operator+=(const LogSum& o);
  LogSum& operator-=(const LogSum& o);
  friend LogSum operator+(LogSum a, const LogSum& b) { return a += b; }
  friend LogSum operator-(LogSum a, const LogSum& b) { return a -= b; }
  LogSum scaled(const Rational& c) const;

  friend bool operator==(const LogSum&, const LogSum&) = default;

  long double to_double() const;
  /// "log 3", "2*log 2 - log 3", "1/27*log 3", or "0".
  std::string to_string() const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_decimal(int significant_digits = 15) const;

 private:
  void add(const Integer& p, const Rational& c);
  std::map<Integer, Rational> coeffs_;
};

/// The places at which some entry has absolute value other than 1 (plus the
/// archimedean place, always first). Every other place contributes nothing to
/// heights, norms or the product formula.
std::vector<Place> contributing_places(std::span<const Rational> xs);

/// ||x||_place = max |x_i|_place.
Rational place_norm(std::span<const Rational> xs, const Place& place);

/// h(x) = sum over places of log max(1, |x|). Throws ZeroInput for x = 0.
LogSum weil_height(const Rational& x);
/// h(x) = sum over places of log ||x||. Throws ZeroInput for the zero vector.
LogSum weil_height(std::span<const Rational> xs);
/// Height of the coefficient vector.
LogSum weil_height(const UniPoly& f);

/// prod over places of |x|; exactly 1 for x != 0. Throws ZeroInput.
Rational product_formula_check(const Rational& x);

/// Linear form a_0 x_0 + ... + a_n x_n, not identically zero.
class HyperplaneForm {
 public:
  explicit HyperplaneForm(std::vector<Rational> coefficients);
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational operator()(std::span<const Rational> x) const;

 private:
  std::vector<Rational> coeffs_;
};

struct WeilValue {
  /// ||x|| ||L|| / |L(x)|.
  Rational ratio;
  LogSum value;
};

/// How ||L|| is measured at the archimedean place. With `max` the ratio is
/// >= 1 at every finite place but can drop to 1/(n+1) at infinity, e.g.
/// L = x0 + x1 at (1 : 1). With `sum` (||L|| = sum |a_i| at infinity, max
/// elsewhere) the triangle inequality gives ratio >= 1 everywhere.
enum class WeilNorm { max, sum };

/// lambda_{H,place}(x) = log(||x|| ||L|| / |L(x)|). Throws PointOnHyperplane
/// when L(x) = 0 and ZeroInput for the zero point.
WeilValue weil_function(const HyperplaneForm& form, std::span<const Rational> x, const Place& place,
                        WeilNorm norm = WeilNorm::max);

/// Finite set S of primes; S-integers have |x|_p <= 1 at every prime outside S.
class SIntegerSpec {
 public:
  SIntegerSpec() = default;
  /// Throws InvalidArgument for non-primes.
  explicit SIntegerSpec(std::set<Integer> primes);
  const std::set<Integer>& primes() const noexcept { return primes_; }
  bool contains(const Integer& p) const { return primes_.count(p) != 0; }

 private:
  std::set<Integer> primes_;
};

enum class SMembership { s_unit, s_integer, neither };

/// 0 is an S-integer but never an S-unit.
SMembership s_membership(const Rational& x, const SIntegerSpec& s);

/// Part of a positive integer coprime to S.
Integer strip_primes(Integer n, const SIntegerSpec& s);

}  // namespace recurquot
