#include "recurquot/unipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "recurquot/errors.hpp"
#include "recurquot/factor.hpp"

namespace recurquot {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UniPoly UniPoly::x() { return monomial(Rational(1), 1); }

UniPoly UniPoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> cs(degree + 1, Rational(0));
  cs[degree] = c;
  return UniPoly(std::move(cs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw ZeroInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

UniPoly UniPoly::operator-() const { return *this * Rational(-1); }

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rational mag = recurquot::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << recurquot::to_string(mag);
      continue;
    }
    if (mag != 1) os << recurquot::to_string(mag) << "*";
    os << var;
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisorZero("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const long db = b.degree();
  const long da = a.degree();
  if (da < db) return {UniPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational& lb = b.leading();
  for (long i = da; i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] / lb;
    quot[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd of two zero polynomials");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly poly_affine_compose(const UniPoly& u, long q, long r) {
  if (q < 1) throw InvalidArgument("affine composition requires q >= 1");
  UniPoly lin(std::vector<Rational>{Rational(r), Rational(q)});
  UniPoly acc;
  const auto& cs = u.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * lin + UniPoly(*it);
  return acc;
}

namespace {

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<std::pair<Rational, unsigned>> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw ZeroInput("roots of the zero polynomial");
  std::vector<std::pair<Rational, unsigned>> roots;
  UniPoly g = f;
  unsigned zero_mult = 0;
  while (!g.is_zero() && g.coeff(0) == 0) {
    g = divmod(g, UniPoly::x()).first;
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (g.degree() >= 1) {
    // Clear denominators so the rational root theorem applies.
    Integer l = lcm_of_denominators(g.coefficients());
    std::vector<Integer> ints;
    for (const auto& c : g.coefficients()) ints.emplace_back(Integer(Rational(c * l).get_num()));
    Integer a0 = abs(ints.front());
    Integer an = abs(ints.back());
    std::vector<Integer> ps = divisors(a0);
    std::vector<Integer> qs = divisors(an);
    std::map<Rational, bool> seen;
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        for (int s : {1, -1}) {
          Rational cand = make_rational(p * s, q);
          if (seen.count(cand)) continue;
          seen[cand] = true;
          unsigned mult = 0;
          UniPoly lin(std::vector<Rational>{-cand, Rational(1)});
          while (g.degree() >= 1 && g.evaluate(cand) == 0) {
            g = divmod(g, lin).first;
            ++mult;
          }
          if (mult > 0) roots.emplace_back(cand, mult);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace recurquot
