#include "recurquot/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "recurquot/errors.hpp"

namespace recurquot {

MPoly::MPoly(std::size_t nvars, Terms terms) : nvars_(nvars) {
  for (auto& [e, c] : terms) {
    if (e.size() != nvars) throw InvalidArgument("exponent vector length mismatch");
    if (c != 0) terms_.emplace(e, c);
  }
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::monomial(const Exponents& e, const Rational& c) {
  MPoly p(e.size());
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(e, Rational(1));
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
}

const Exponents& MPoly::leading_exponents() const {
  if (terms_.empty()) throw ZeroInput("leading term of zero");
  return terms_.rbegin()->first;
}

const Rational& MPoly::leading_coefficient() const {
  if (terms_.empty()) throw ZeroInput("leading term of zero");
  return terms_.rbegin()->second;
}

long MPoly::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Exponents MPoly::min_exponents() const {
  Exponents m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

MPoly MPoly::coefficient_in(std::size_t var, long d) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != d) continue;
    Exponents f = e;
    f[var] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw InvalidArgument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw InvalidArgument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw InvalidArgument("variable count mismatch");
  MPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MPoly MPoly::shifted(const Exponents& shift) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < nvars_; ++i) f[i] += shift[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool wrote = false;
    if (mag != 1) {
      os << recurquot::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << names[i];
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  return os.str();
}

std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw DivisorZero("polynomial division by zero");
  MPoly rest = a;
  MPoly quot(a.nvars());
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  Exponents diff(a.nvars());
  while (!rest.is_zero()) {
    const Exponents& lr = rest.leading_exponents();
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = lr[i] - lb[i];
      if (diff[i] < 0) return std::nullopt;
    }
    MPoly t = MPoly::monomial(diff, rest.leading_coefficient() / cb);
    rest -= t * b;
    quot += t;
  }
  return quot;
}

namespace {

MPoly gcd_from(const MPoly& a, const MPoly& b, std::size_t var);

// gcd of the coefficients of `a` seen as a polynomial in `var`.
MPoly content_in(const MPoly& a, std::size_t var) {
  MPoly g(a.nvars());
  for (long d = a.degree_in(var); d >= 0; --d) {
    MPoly c = a.coefficient_in(var, d);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_from(g, c, var + 1);
    if (g.is_constant()) return MPoly::constant(a.nvars(), Rational(1));
  }
  return g;
}

MPoly divide_or_fail(const MPoly& a, const MPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error("internal: inexact division in gcd");
  return *q;
}

MPoly primitive_part(const MPoly& a, std::size_t var) { return divide_or_fail(a, content_in(a, var)); }

// lc(b)^k * a mod b in var, without fractions in the lower variables.
MPoly pseudo_remainder(MPoly a, const MPoly& b, std::size_t var) {
  const long db = b.degree_in(var);
  const MPoly lb = b.coefficient_in(var, db);
  long da = a.degree_in(var);
  while (!a.is_zero() && da >= db) {
    MPoly la = a.coefficient_in(var, da);
    Exponents shift(a.nvars(), 0);
    shift[var] = da - db;
    a = lb * a - la * b.shifted(shift);
    da = a.degree_in(var);
  }
  return a;
}

MPoly normalized(const MPoly& a) { return a * (Rational(1) / a.leading_coefficient()); }

MPoly gcd_from(const MPoly& a, const MPoly& b, std::size_t var) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return MPoly::constant(n, Rational(1));
  while (var < n && a.degree_in(var) <= 0 && b.degree_in(var) <= 0) ++var;
  if (var == n) return MPoly::constant(n, Rational(1));

  MPoly ca = content_in(a, var);
  MPoly cb = content_in(b, var);
  MPoly c = gcd_from(ca, cb, var + 1);
  MPoly p = divide_or_fail(a, ca);
  MPoly q = divide_or_fail(b, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (!q.is_zero() && q.degree_in(var) > 0) {
    MPoly r = pseudo_remainder(p, q, var);
    p = std::move(q);
    q = r.is_zero() ? r : primitive_part(r, var);
  }
  // q is now zero (p is the gcd) or a non-zero constant in var (coprime).
  MPoly g = q.is_zero() ? primitive_part(p, var) : MPoly::constant(n, Rational(1));
  return normalized(c * g);
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd of two zero polynomials");
  return gcd_from(a, b, 0);
}

}  // namespace recurquot
