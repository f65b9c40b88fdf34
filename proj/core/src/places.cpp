#include "recurquot/heights.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "recurquot/errors.hpp"
#include "recurquot/factor.hpp"

namespace recurquot {

Place Place::finite(const Integer& p) {
  if (!is_probable_prime(p)) throw InvalidArgument("place needs a prime, got " + recurquot::to_string(p));
  Place place;
  place.prime_ = p;
  return place;
}

std::string Place::to_string() const { return is_archimedean() ? "inf" : recurquot::to_string(prime_); }

Rational place_abs(const Rational& x, const Place& place) {
  if (x == 0) return 0;
  if (place.is_archimedean()) return abs(x);
  return pow(Rational(place.prime()), -valuation(x, place.prime()));
}

LogSum LogSum::log_of(const Rational& x) {
  if (x <= 0) throw InvalidArgument("log of a non-positive rational");
  LogSum s;
  for (const auto& [p, e] : factor_rational(x).exponents) s.add(p, Rational(e));
  return s;
}

LogSum LogSum::log_prime(const Integer& p, const Rational& coefficient) {
  LogSum s;
  s.add(p, coefficient);
  return s;
}

void LogSum::add(const Integer& p, const Rational& coefficient) {
  Rational c = coefficient;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

LogSum& LogSum::operator+=(const LogSum& o) {
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

LogSum& LogSum::operator-=(const LogSum& o) {
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

LogSum LogSum::scaled(const Rational& c) const {
  LogSum s;
  for (const auto& [p, v] : coeffs_) s.add(p, v * c);
  return s;
}

long double LogSum::to_double() const {
  long double total = 0;
  for (const auto& [p, c] : coeffs_) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, p.get_mpz_t());
    long double logp = std::log(static_cast<long double>(mant)) + exp2 * std::log(2.0L);
    total += static_cast<long double>(c.get_d()) * logp;
  }
  return total;
}

std::string LogSum::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    Rational mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (mag != 1) os << recurquot::to_string(mag) << "*";
    os << "log " << recurquot::to_string(p);
  }
  return os.str();
}

std::string LogSum::to_decimal(int significant_digits) const {
  std::ostringstream os;
  os << std::setprecision(significant_digits) << static_cast<double>(to_double());
  return os.str();
}

std::vector<Place> contributing_places(std::span<const Rational> xs) {
  std::set<Integer> primes;
  for (const auto& x : xs) {
    if (x == 0) continue;
    for (const auto& [p, e] : factor_rational(x).exponents) primes.insert(p);
  }
  std::vector<Place> places{Place::archimedean()};
  for (const auto& p : primes) places.push_back(Place::finite(p));
  return places;
}

Rational place_norm(std::span<const Rational> xs, const Place& place) {
  Rational m = 0;
  for (const auto& x : xs) m = std::max(m, place_abs(x, place));
  return m;
}

LogSum weil_height(const Rational& x) {
  if (x == 0) throw ZeroInput("height of zero");
  LogSum h;
  const Rational one = 1;
  for (const auto& place : contributing_places(std::span(&x, 1)))
    h += LogSum::log_of(std::max(one, place_abs(x, place)));
  return h;
}

LogSum weil_height(std::span<const Rational> xs) {
  if (std::all_of(xs.begin(), xs.end(), [](const Rational& x) { return x == 0; }))
    throw ZeroInput("height of the zero vector");
  LogSum h;
  for (const auto& place : contributing_places(xs)) h += LogSum::log_of(place_norm(xs, place));
  return h;
}

LogSum weil_height(const UniPoly& f) {
  if (f.is_zero()) throw ZeroInput("height of the zero polynomial");
  return weil_height(std::span<const Rational>(f.coefficients()));
}

Rational product_formula_check(const Rational& x) {
  if (x == 0) throw ZeroInput("product formula needs x != 0");
  Rational prod = 1;
  for (const auto& place : contributing_places(std::span(&x, 1))) prod *= place_abs(x, place);
  return prod;
}

HyperplaneForm::HyperplaneForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& a) { return a == 0; }))
    throw InvalidArgument("hyperplane form must not vanish identically");
}

Rational HyperplaneForm::operator()(std::span<const Rational> x) const {
  if (x.size() != coeffs_.size()) throw InvalidArgument("point and form dimensions differ");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += coeffs_[i] * x[i];
  return s;
}

WeilValue weil_function(const HyperplaneForm& form, std::span<const Rational> x, const Place& place,
                        WeilNorm norm) {
  if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; }))
    throw ZeroInput("the zero vector is not a projective point");
  Rational lx = form(x);
  if (lx == 0) throw PointOnHyperplane("point lies on the hyperplane");
  WeilValue w;
  Rational form_norm;
  if (norm == WeilNorm::sum && place.is_archimedean()) {
    for (const auto& a : form.coefficients()) form_norm += abs(a);
  } else {
    form_norm = place_norm(form.coefficients(), place);
  }
  w.ratio = place_norm(x, place) * form_norm / place_abs(lx, place);
  if (w.ratio < 1 && (norm == WeilNorm::sum || !place.is_archimedean()))
    throw Error("internal: Weil function ratio below 1");
  w.value = LogSum::log_of(w.ratio);
  return w;
}

SIntegerSpec::SIntegerSpec(std::set<Integer> primes) : primes_(std::move(primes)) {
  for (const auto& p : primes_)
    if (!is_probable_prime(p)) throw InvalidArgument(recurquot::to_string(p) + " is not prime");
}

SMembership s_membership(const Rational& x, const SIntegerSpec& s) {
  if (x == 0) return SMembership::s_integer;
  if (strip_primes(Integer(x.get_den()), s) != 1) return SMembership::neither;
  return strip_primes(abs(Integer(x.get_num())), s) == 1 ? SMembership::s_unit : SMembership::s_integer;
}

Integer strip_primes(Integer n, const SIntegerSpec& s) {
  for (const auto& p : s.primes()) mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return n;
}

}  // namespace recurquot
