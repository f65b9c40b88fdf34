#include "recurquot/group_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "recurquot/errors.hpp"
#include "recurquot/recurrence.hpp"

namespace recurquot {

namespace {

std::vector<std::string> variable_names(std::size_t rank) {
  std::vector<std::string> names{"X"};
  for (std::size_t i = 1; i <= rank; ++i) names.push_back(rank == 1 ? "T" : "T" + std::to_string(i));
  return names;
}

// Exponent shift that zeroes the minimum T-exponents and leaves X alone.
Exponents t_shift(const MPoly& p) {
  Exponents m = p.min_exponents();
  for (auto& x : m) x = -x;
  if (!m.empty()) m[0] = 0;
  return m;
}

}  // namespace

GroupRingElement::GroupRingElement(std::shared_ptr<const MultiplicativeBasis> basis, MPoly poly)
    : basis_(std::move(basis)), poly_(std::move(poly)) {
  if (!basis_) throw InvalidArgument("group ring element needs a basis");
  if (poly_.nvars() != basis_->rank() + 1) throw InvalidArgument("polynomial does not match basis rank");
  for (const auto& [e, c] : poly_.terms())
    if (e[0] < 0) throw InvalidArgument("negative power of X");
}

GroupRingElement GroupRingElement::zero(std::shared_ptr<const MultiplicativeBasis> basis) {
  std::size_t n = basis->rank() + 1;
  return GroupRingElement(std::move(basis), MPoly(n));
}

GroupRingElement GroupRingElement::one(std::shared_ptr<const MultiplicativeBasis> basis) {
  std::size_t n = basis->rank() + 1;
  return GroupRingElement(std::move(basis), MPoly::constant(n, Rational(1)));
}

bool GroupRingElement::is_unit() const { return poly_.size() == 1 && poly_.leading_exponents()[0] == 0; }

bool GroupRingElement::is_polynomial_up_to_unit() const {
  if (poly_.is_zero()) return true;
  const Exponents& first = poly_.terms().begin()->first;
  for (const auto& [e, c] : poly_.terms())
    if (!std::equal(e.begin() + 1, e.end(), first.begin() + 1)) return false;
  return true;
}

GroupRingElement GroupRingElement::shift_normalized() const {
  if (poly_.is_zero()) return *this;
  return GroupRingElement(basis_, poly_.shifted(t_shift(poly_)));
}

GroupRingElement GroupRingElement::unit_normalized() const {
  if (poly_.is_zero()) return *this;
  GroupRingElement s = shift_normalized();
  return s * (Rational(1) / s.poly_.leading_coefficient());
}

Rational GroupRingElement::evaluate(unsigned long n) const {
  Rational acc = 0;
  const Rational at(static_cast<unsigned long>(n));
  for (const auto& [e, c] : poly_.terms()) {
    std::vector<long> tpart(e.begin() + 1, e.end());
    acc += c * pow(at, e[0]) * pow(basis_->element(tpart), static_cast<long>(n));
  }
  return acc;
}

void GroupRingElement::require_same_basis(const GroupRingElement& o) const {
  if (basis_ != o.basis_ && !(*basis_ == *o.basis_))
    throw BasisMismatch("group ring elements over different bases");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  require_same_basis(o);
  return GroupRingElement(basis_, poly_ + o.poly_);
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  require_same_basis(o);
  return GroupRingElement(basis_, poly_ - o.poly_);
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  require_same_basis(o);
  return GroupRingElement(basis_, poly_ * o.poly_);
}

GroupRingElement GroupRingElement::operator*(const Rational& c) const {
  return GroupRingElement(basis_, poly_ * c);
}

std::string GroupRingElement::to_string() const {
  if (poly_.is_zero()) return "0";
  const auto names = variable_names(rank());
  // T-monomial -> coefficient polynomial in X, highest T-monomial first.
  std::map<std::vector<long>, UniPoly, std::greater<>> groups;
  for (const auto& [e, c] : poly_.terms())
    groups[std::vector<long>(e.begin() + 1, e.end())] += UniPoly::monomial(c, static_cast<unsigned>(e[0]));

  std::ostringstream os;
  bool first = true;
  auto emit = [&](bool negative, const std::string& body) {
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + ")) << body;
    first = false;
  };
  for (const auto& [tpart, xpoly] : groups) {
    std::string tmono;
    for (std::size_t i = 0; i < tpart.size(); ++i) {
      if (tpart[i] == 0) continue;
      if (!tmono.empty()) tmono += "*";
      tmono += names[i + 1];
      if (tpart[i] != 1) tmono += "^" + std::to_string(tpart[i]);
    }
    std::size_t nonzero = 0;
    for (const auto& c : xpoly.coefficients()) nonzero += c != 0;
    if (tmono.empty() || nonzero == 1) {
      for (long d = xpoly.degree(); d >= 0; --d) {
        const Rational& c = xpoly.coefficients()[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        std::string body;
        Rational mag = abs(c);
        if (mag != 1 || (d == 0 && tmono.empty())) body = recurquot::to_string(mag);
        if (d > 0) {
          if (!body.empty()) body += "*";
          body += "X";
          if (d > 1) body += "^" + std::to_string(d);
        }
        if (!tmono.empty()) body += (body.empty() ? "" : "*") + tmono;
        emit(c < 0, body);
      }
    } else {
      emit(false, "(" + xpoly.to_string("X") + ")*" + tmono);
    }
  }
  return os.str();
}

GroupRingElement to_group_ring(const LinearRecurrence& u, std::shared_ptr<const MultiplicativeBasis> basis) {
  const std::size_t nvars = basis->rank() + 1;
  MPoly poly(nvars);
  for (const auto& t : u.terms()) {
    auto e = basis->express(t.root);
    if (!e) throw RootNotInGroup("root " + recurquot::to_string(t.root) + " is not in the group");
    Exponents ex(nvars, 0);
    std::copy(e->begin(), e->end(), ex.begin() + 1);
    for (std::size_t d = 0; d < t.coeff.coefficients().size(); ++d) {
      ex[0] = static_cast<long>(d);
      poly += MPoly::monomial(ex, t.coeff.coefficients()[d]);
    }
  }
  return GroupRingElement(std::move(basis), std::move(poly));
}

LinearRecurrence from_group_ring(const GroupRingElement& f) {
  std::map<std::vector<long>, UniPoly> groups;
  for (const auto& [e, c] : f.poly().terms())
    groups[std::vector<long>(e.begin() + 1, e.end())] += UniPoly::monomial(c, static_cast<unsigned>(e[0]));
  std::vector<RecurrenceTerm> terms;
  for (auto& [tpart, coeff] : groups) terms.push_back({f.basis()->element(tpart), std::move(coeff)});
  return from_closed_form(std::move(terms));
}

GroupRingElement laurent_gcd(const GroupRingElement& f, const GroupRingElement& g) {
  if (!(*f.basis() == *g.basis())) throw BasisMismatch("gcd over different bases");
  if (f.is_zero() && g.is_zero()) throw BothZero("gcd of two zero elements");
  MPoly a = f.shift_normalized().poly();
  MPoly b = g.shift_normalized().poly();
  return GroupRingElement(f.basis(), mpoly_gcd(a, b)).unit_normalized();
}

std::optional<GroupRingElement> laurent_divide(const GroupRingElement& f, const GroupRingElement& g) {
  if (!(*f.basis() == *g.basis())) throw BasisMismatch("division over different bases");
  if (g.is_zero()) throw DivisorZero("division by the zero element");
  if (f.is_zero()) return f;
  Exponents sf = t_shift(f.poly());
  Exponents sg = t_shift(g.poly());
  // T_i does not divide either shifted polynomial, so any Laurent quotient
  // is a polynomial quotient times T^(sg - sf).
  auto q = exact_divide(f.poly().shifted(sf), g.poly().shifted(sg));
  if (!q) return std::nullopt;
  Exponents back(sf.size());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = sg[i] - sf[i];
  return GroupRingElement(f.basis(), q->shifted(back));
}

}  // namespace recurquot
