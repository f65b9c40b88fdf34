#include "recurquot/multi_recurrence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "recurquot/errors.hpp"

namespace recurquot {

namespace {

std::string power(const Rational& base, const char* var) {
  std::string b = to_string(base);
  if (base < 0 || base.get_den() != 1) b = "(" + b + ")";
  return b + "^" + var;
}

}  // namespace

MultiRecurrence::MultiRecurrence(std::vector<MultiTerm> terms) {
  std::map<std::pair<Rational, Rational>, MPoly> merged;
  for (auto& t : terms) {
    if (t.base_m == 0 || t.base_n == 0) throw ZeroRoot("multi-recurrence bases must be non-zero");
    auto [it, inserted] = merged.try_emplace({t.base_m, t.base_n}, MPoly(2));
    it->second += t.coeff;
  }
  for (auto& [bases, coeff] : merged)
    if (!coeff.is_zero()) terms_.push_back({bases.first, bases.second, std::move(coeff)});
  std::sort(terms_.begin(), terms_.end(), [](const MultiTerm& a, const MultiTerm& b) {
    auto key = [](const MultiTerm& t) { return std::make_tuple(abs(t.base_m), t.base_m, abs(t.base_n), t.base_n); };
    return key(a) > key(b);
  });
}

MultiRecurrence MultiRecurrence::product(const LinearRecurrence& in_m, const LinearRecurrence& in_n) {
  std::vector<MultiTerm> terms;
  for (const auto& a : in_m.terms())
    for (const auto& b : in_n.terms())
      terms.push_back({a.root, b.root, lift_to_bivariate(a.coeff, 0) * lift_to_bivariate(b.coeff, 1)});
  return MultiRecurrence(std::move(terms));
}

Rational MultiRecurrence::operator()(unsigned long m, unsigned long n) const { return multi_evaluate(*this, m, n); }

std::string MultiRecurrence::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string pw;
    if (t.base_m != 1) pw = power(t.base_m, "m");
    if (t.base_n != 1) pw += (pw.empty() ? "" : "*") + power(t.base_n, "n");
    bool negative = false;
    std::string body;
    if (t.coeff.size() == 1) {
      negative = t.coeff.leading_coefficient() < 0;
      std::string c = (negative ? -t.coeff : t.coeff).to_string({"m", "n"});
      if (pw.empty())
        body = c;
      else
        body = c == "1" ? pw : c + "*" + pw;
    } else {
      std::string c = t.coeff.to_string({"m", "n"});
      body = pw.empty() ? c : "(" + c + ")*" + pw;
    }
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + ")) << body;
    first = false;
  }
  return os.str();
}

Rational multi_evaluate(const MultiRecurrence& u, unsigned long m, unsigned long n) {
  Rational acc = 0;
  const Rational rm(m), rn(n);
  for (const auto& t : u.terms()) {
    Rational c = 0;
    for (const auto& [e, a] : t.coeff.terms()) c += a * pow(rm, e[0]) * pow(rn, e[1]);
    acc += c * pow(t.base_m, static_cast<long>(m)) * pow(t.base_n, static_cast<long>(n));
  }
  return acc;
}

MPoly lift_to_bivariate(const UniPoly& p, std::size_t var) {
  MPoly out(2);
  for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
    Exponents e{0, 0};
    e[var] = static_cast<long>(d);
    out += MPoly::monomial(e, p.coefficients()[d]);
  }
  return out;
}

}  // namespace recurquot
