#include "recurquot/recurrence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "recurquot/errors.hpp"

namespace recurquot {

namespace {

// Decreasing absolute value; for equal magnitudes the positive root first.
bool root_before(const Rational& a, const Rational& b) {
  Rational aa = abs(a), ab = abs(b);
  if (aa != ab) return aa > ab;
  return a > b;
}

std::string render_root_power(const Rational& root, const std::string& var) {
  std::string base = to_string(root);
  if (root < 0 || root.get_den() != 1) base = "(" + base + ")";
  return base + "^" + var;
}

struct Piece {
  bool negative;
  std::string body;
};

std::string render_monomial(const Rational& mag, long degree, const std::string& var) {
  if (degree == 0) return to_string(mag);
  std::string out = mag == 1 ? "" : to_string(mag) + "*";
  out += var;
  if (degree > 1) out += "^" + std::to_string(degree);
  return out;
}

void render_term(const RecurrenceTerm& t, const std::string& var, std::vector<Piece>& out) {
  const auto& cs = t.coeff.coefficients();
  std::size_t nonzero = std::count_if(cs.begin(), cs.end(), [](const Rational& c) { return c != 0; });
  if (t.root == 1) {
    for (long d = t.coeff.degree(); d >= 0; --d) {
      const Rational& c = cs[static_cast<std::size_t>(d)];
      if (c != 0) out.push_back({c < 0, render_monomial(abs(c), d, var)});
    }
    return;
  }
  std::string power = render_root_power(t.root, var);
  if (nonzero == 1) {
    long d = t.coeff.degree();
    Rational c = t.coeff.leading();
    std::string body;
    if (d == 0)
      body = abs(c) == 1 ? power : to_string(abs(c)) + "*" + power;
    else
      body = render_monomial(abs(c), d, var) + "*" + power;
    out.push_back({c < 0, body});
    return;
  }
  out.push_back({false, "(" + t.coeff.to_string(var) + ")*" + power});
}

// Gaussian elimination over Q on a square system; returns false if singular.
bool solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

std::vector<Rational> LinearRecurrence::roots() const {
  std::vector<Rational> rs;
  for (const auto& t : terms_) rs.push_back(t.root);
  return rs;
}

std::size_t LinearRecurrence::order() const {
  std::size_t k = 0;
  for (const auto& t : terms_) k += static_cast<std::size_t>(t.coeff.degree() + 1);
  return k;
}

Rational LinearRecurrence::operator()(unsigned long n) const { return evaluate(*this, n); }

LinearRecurrence LinearRecurrence::operator+(const LinearRecurrence& o) const {
  std::vector<RecurrenceTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_closed_form(std::move(all));
}

LinearRecurrence LinearRecurrence::operator-(const LinearRecurrence& o) const { return *this + (-o); }

LinearRecurrence LinearRecurrence::operator*(const LinearRecurrence& o) const {
  std::vector<RecurrenceTerm> all;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) all.push_back({a.root * b.root, a.coeff * b.coeff});
  return from_closed_form(std::move(all));
}

LinearRecurrence LinearRecurrence::operator*(const Rational& c) const {
  std::vector<RecurrenceTerm> all = terms_;
  for (auto& t : all) t.coeff *= c;
  return from_closed_form(std::move(all));
}

std::string LinearRecurrence::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::vector<Piece> pieces;
  for (const auto& t : terms_) render_term(t, var, pieces);
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0)
      os << (pieces[i].negative ? "-" : "");
    else
      os << (pieces[i].negative ? " - " : " + ");
    os << pieces[i].body;
  }
  return os.str();
}

LinearRecurrence from_closed_form(std::vector<RecurrenceTerm> terms) {
  std::map<Rational, UniPoly> merged;
  for (auto& t : terms) {
    if (t.root == 0) throw ZeroRoot("recurrence roots must be non-zero");
    merged[t.root] += t.coeff;
  }
  LinearRecurrence u;
  for (auto& [root, coeff] : merged)
    if (!coeff.is_zero()) u.terms_.push_back({root, std::move(coeff)});
  std::sort(u.terms_.begin(), u.terms_.end(),
            [](const RecurrenceTerm& a, const RecurrenceTerm& b) { return root_before(a.root, b.root); });
  return u;
}

LinearRecurrence from_relation(std::span<const Rational> relation, std::span<const Rational> initial) {
  const std::size_t k = relation.size();
  if (k == 0) throw InvalidArgument("relation must have order k >= 1");
  if (initial.size() != k) throw InvalidArgument("need exactly k initial values");
  if (relation[0] == 0) throw InvalidArgument("relation needs c_0 != 0");

  std::vector<Rational> companion(k + 1);
  for (std::size_t j = 0; j < k; ++j) companion[j] = -relation[j];
  companion[k] = 1;
  auto roots = rational_roots(UniPoly(companion));
  std::size_t found = 0;
  for (const auto& [r, m] : roots) found += m;
  if (found < k) throw IrrationalRoots("companion polynomial has an irreducible factor of degree >= 2");

  // Unknowns: coefficient of n^j alpha^n for each root alpha, j < mult.
  std::vector<std::pair<Rational, unsigned>> unknowns;
  for (const auto& [r, m] : roots)
    for (unsigned j = 0; j < m; ++j) unknowns.emplace_back(r, j);
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
  for (std::size_t n = 0; n < k; ++n)
    for (std::size_t c = 0; c < k; ++c) {
      const auto& [root, j] = unknowns[c];
      a[n][c] = pow(Rational(static_cast<long>(n)), static_cast<long>(j)) * pow(root, static_cast<long>(n));
    }
  std::vector<Rational> x;
  if (!solve_square(a, std::vector<Rational>(initial.begin(), initial.end()), x))
    throw Error("internal: singular system for a split companion polynomial");

  std::vector<RecurrenceTerm> terms;
  for (std::size_t c = 0; c < k; ++c)
    terms.push_back({unknowns[c].first, UniPoly::monomial(x[c], unknowns[c].second)});
  LinearRecurrence u = from_closed_form(std::move(terms));

  std::vector<Rational> seq(initial.begin(), initial.end());
  for (std::size_t n = k; n <= 2 * k; ++n) {
    Rational next = 0;
    for (std::size_t j = 0; j < k; ++j) next += relation[j] * seq[n - k + j];
    seq.push_back(next);
  }
  for (std::size_t n = 0; n < seq.size(); ++n)
    if (evaluate(u, n) != seq[n]) throw Error("internal: closed form disagrees with the relation");
  return u;
}

Rational evaluate(const LinearRecurrence& u, unsigned long n) {
  Rational acc = 0;
  const Rational at(static_cast<unsigned long>(n));
  for (const auto& t : u.terms()) acc += t.coeff.evaluate(at) * pow(t.root, static_cast<long>(n));
  return acc;
}

LinearRecurrence ring_op(const LinearRecurrence& a, const LinearRecurrence& b, RingOp op) {
  return op == RingOp::add ? a + b : a * b;
}

LinearRecurrence decimate(const LinearRecurrence& u, long q, long r) {
  if (q < 1 || r < 0 || r >= q) throw InvalidArgument("decimation needs q >= 1 and 0 <= r < q");
  std::vector<RecurrenceTerm> terms;
  for (const auto& t : u.terms())
    terms.push_back({pow(t.root, q), poly_affine_compose(t.coeff, q, r) * pow(t.root, r)});
  return from_closed_form(std::move(terms));
}

DominantSplit dominant_split(const LinearRecurrence& v, const Place& place) {
  if (v.is_zero()) throw ZeroRecurrence("dominant split of the zero recurrence");
  Rational top = 0;
  for (const auto& t : v.terms()) top = std::max(top, place_abs(t.root, place));
  std::vector<RecurrenceTerm> dom, rest;
  Rational rest_top = 0;
  for (const auto& t : v.terms()) {
    Rational a = place_abs(t.root, place);
    if (a == top) {
      dom.push_back(t);
    } else {
      rest.push_back({t.root, -t.coeff});
      rest_top = std::max(rest_top, a);
    }
  }
  DominantSplit s;
  s.place = place;
  s.dominant = from_closed_form(std::move(dom));
  s.rest = from_closed_form(std::move(rest));
  s.ratio_delta = rest_top / top;
  return s;
}

}  // namespace recurquot
