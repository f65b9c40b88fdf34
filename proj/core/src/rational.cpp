#include "recurquot/rational.hpp"

#include <cctype>
#include <sstream>

#include "recurquot/errors.hpp"

namespace recurquot {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i != 0) out += ", ";
    out += expected[i];
  }
  return out;
}

std::string format_parse_error(std::size_t line, std::size_t column,
                               const std::vector<std::string>& expected,
                               const std::string& detail) {
  std::ostringstream os;
  os << "parse error at " << line << ":" << column << ": " << detail;
  if (!expected.empty()) os << " (expected " << join_expected(expected) << ")";
  return os.str();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& detail)
    : InputError(format_parse_error(line, column, expected, detail)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError(1, 1, {"rational literal"}, "malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError(1, slash + 2, {"non-zero denominator"}, "division by zero");
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& x) { return x.get_str(10); }
std::string to_string(const Integer& x) { return x.get_str(10); }

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (base == 0) throw DivisorZero("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  auto e = static_cast<unsigned long>(exponent);
  Rational out(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
  return out;  // coprime powers stay reduced
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

int sign(const Rational& x) { return sgn(x); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer lcm_of_denominators(std::span<const Rational> xs) {
  Integer l = 1;
  for (const auto& x : xs) l = lcm(l, x.get_den());
  return l;
}

long valuation(const Integer& x, const Integer& p) {
  if (x == 0) throw ZeroInput("valuation of zero");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& x, const Integer& p) {
  if (x == 0) throw ZeroInput("valuation of zero");
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

bool is_probable_prime(const Integer& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) throw InvalidArgument("integer " + to_string(x) + " out of range");
  return x.get_si();
}

}  // namespace recurquot
