#include "recurquot/parse.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "recurquot/errors.hpp"

namespace recurquot {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

std::string describe(Tok t) {
  switch (t) {
    case Tok::number: return "number";
    case Tok::ident: return "variable";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t{Tok::end, "", line_, col_};
      if (pos_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::number;
        t.text = digits();
        // "a / b" is one rational literal.
        std::size_t save_pos = pos_, save_line = line_, save_col = col_;
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == '/') {
          advance();
          skip_space();
          if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError(line_, col_, {"number"}, "denominator expected after '/'");
          std::size_t dl = line_, dc = col_;
          std::string den = digits();
          if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; }))
            throw ParseError(dl, dc, {"non-zero denominator"}, "division by zero");
          t.text += "/" + den;
        } else {
          pos_ = save_pos;
          line_ = save_line;
          col_ = save_col;
        }
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        t.kind = Tok::ident;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
          t.text += s_[pos_];
          advance();
        }
      } else {
        switch (c) {
          case '+': t.kind = Tok::plus; break;
          case '-': t.kind = Tok::minus; break;
          case '*': t.kind = Tok::star; break;
          case '^': t.kind = Tok::caret; break;
          case '(': t.kind = Tok::lparen; break;
          case ')': t.kind = Tok::rparen; break;
          default:
            throw ParseError(line_, col_, {"number", "variable", "operator", "'('", "')'"},
                             std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
        advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }
  std::string digits() {
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      out += s_[pos_];
      advance();
    }
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, bool laurent)
      : toks_(Lexer(text).run()), vars_(vars), laurent_(laurent) {}

  MPoly parse() {
    MPoly p = expr();
    if (peek().kind != Tok::end) fail({"'+'", "'-'", "'*'", "end of input"});
    return p;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected), "unexpected " + describe(t.kind) +
                                                               (t.text.empty() ? "" : " '" + t.text + "'"));
  }

  MPoly expr() {
    MPoly acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = take().kind == Tok::minus;
      MPoly rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = unary();
    while (peek().kind == Tok::star) {
      take();
      acc = acc * unary();
    }
    return acc;
  }

  MPoly unary() {
    if (peek().kind == Tok::minus) {
      take();
      return -unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (peek().kind != Tok::caret) return base;
    take();
    bool negative = false;
    if (peek().kind == Tok::minus) {
      if (!laurent_) fail({"non-negative integer exponent"});
      take();
      negative = true;
    }
    if (peek().kind != Tok::number || peek().text.find('/') != std::string::npos) fail({"integer exponent"});
    const Token& et = take();
    Integer e(et.text, 10);
    if (e > 10000) throw ParseError(et.line, et.column, {"exponent <= 10000"}, "exponent too large");
    long k = e.get_si();
    if (negative) {
      if (base.size() != 1)
        throw ParseError(et.line, et.column, {"monomial base"}, "negative power of a non-monomial");
      Exponents ex = base.leading_exponents();
      for (auto& x : ex) x = -x * k;
      return MPoly::monomial(ex, pow(base.leading_coefficient(), -k));
    }
    MPoly out = MPoly::constant(vars_.size(), Rational(1));
    for (long j = 0; j < k; ++j) out = out * base;
    return out;
  }

  MPoly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number:
        take();
        return MPoly::constant(vars_.size(), parse_rational(t.text));
      case Tok::ident: {
        auto it = std::find(vars_.begin(), vars_.end(), t.text);
        if (it == vars_.end()) {
          std::vector<std::string> expected;
          for (const auto& v : vars_) expected.push_back(v);
          throw ParseError(t.line, t.column, expected, "unknown variable '" + t.text + "'");
        }
        take();
        return MPoly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
      }
      case Tok::lparen: {
        take();
        MPoly inner = expr();
        if (peek().kind != Tok::rparen) fail({"')'"});
        take();
        return inner;
      }
      default:
        fail({"number", "variable", "'('", "'-'"});
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  const std::vector<std::string>& vars_;
  bool laurent_;
};

using nlohmann::json;

std::string rational_field(const json& j, const std::string& where) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    try {
      parse_rational(s);
    } catch (const ParseError&) {
      throw SchemaError(where + ": '" + s + "' is not a rational literal");
    }
    return s;
  }
  if (j.is_number_integer()) return j.dump();
  throw SchemaError(where + ": expected a rational literal string");
}

std::vector<std::string> rational_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_field(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables, bool laurent) {
  return Parser(text, variables, laurent).parse();
}

UniPoly parse_unipoly(std::string_view text, const std::string& var) {
  std::vector<std::string> vars{var};
  if (var != "X") vars.push_back("X");
  MPoly p = parse_polynomial(text, vars);
  UniPoly out;
  for (const auto& [e, c] : p.terms()) {
    long d = e[0] + (vars.size() > 1 ? e[1] : 0);
    out += UniPoly::monomial(c, static_cast<unsigned>(d));
  }
  return out;
}

GroupRingElement parse_group_ring(std::string_view text, std::shared_ptr<const MultiplicativeBasis> basis) {
  const std::size_t t = basis->rank();
  std::vector<std::string> vars{"X"};
  for (std::size_t i = 1; i <= t; ++i) vars.push_back("T" + std::to_string(i));
  if (t == 1) vars.push_back("T");
  MPoly p = parse_polynomial(text, vars, true);
  if (t == 1) {
    MPoly folded(2);
    for (const auto& [e, c] : p.terms()) folded += MPoly::monomial({e[0], e[1] + e[2]}, c);
    p = folded;
  }
  for (const auto& [e, c] : p.terms())
    if (e[0] < 0) throw ParseError(1, 1, {"non-negative power of X"}, "X is not invertible");
  return GroupRingElement(std::move(basis), std::move(p));
}

RecurrenceSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, col, {"valid JSON"}, e.what());
  }
  if (!doc.is_object()) throw SchemaError("spec must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "var" && key != "closed_form" && key != "relation")
      throw SchemaError("unknown key '" + key + "'");

  RecurrenceSpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw SchemaError("name must be a string");
    spec.name = doc["name"].get<std::string>();
  }
  if (doc.contains("var")) {
    if (!doc["var"].is_string()) throw SchemaError("var must be a string");
    spec.var = doc["var"].get<std::string>();
    if (spec.var != "X" && spec.var != "M" && spec.var != "N") throw SchemaError("var must be X, M or N");
  }
  const bool has_cf = doc.contains("closed_form");
  const bool has_rel = doc.contains("relation");
  if (has_cf == has_rel) throw SchemaError("exactly one of closed_form and relation is required");

  if (has_cf) {
    const json& cf = doc["closed_form"];
    if (!cf.is_array()) throw SchemaError("closed_form must be an array");
    std::vector<ClosedFormEntry> entries;
    for (std::size_t i = 0; i < cf.size(); ++i) {
      const std::string where = "closed_form[" + std::to_string(i) + "]";
      const json& item = cf[i];
      if (!item.is_object() || !item.contains("root")) throw SchemaError(where + ": needs a root");
      for (const auto& [key, value] : item.items())
        if (key != "root" && key != "coeff") throw SchemaError(where + ": unknown key '" + key + "'");
      ClosedFormEntry e;
      e.root = rational_field(item["root"], where + ".root");
      if (parse_rational(e.root) == 0) throw SchemaError(where + ".root: roots must be non-zero");
      if (item.contains("coeff")) {
        if (item["coeff"].is_string())
          e.coeff = item["coeff"].get<std::string>();
        else if (item["coeff"].is_number_integer())
          e.coeff = item["coeff"].dump();
        else
          throw SchemaError(where + ".coeff: expected a polynomial string");
      } else {
        e.coeff = "1";
      }
      try {
        parse_unipoly(e.coeff, spec.var);
      } catch (const ParseError& err) {
        throw ParseError(err.line(), err.column(), err.expected(), where + ".coeff: " + err.what());
      }
      entries.push_back(std::move(e));
    }
    spec.body = std::move(entries);
  } else {
    const json& rel = doc["relation"];
    if (!rel.is_object() || !rel.contains("coeffs") || !rel.contains("initial"))
      throw SchemaError("relation needs coeffs and initial");
    RelationEntry r;
    r.coeffs = rational_list(rel["coeffs"], "relation.coeffs");
    r.initial = rational_list(rel["initial"], "relation.initial");
    if (r.coeffs.empty()) throw SchemaError("relation.coeffs must be non-empty");
    if (r.coeffs.size() != r.initial.size()) throw SchemaError("relation needs as many initial values as coeffs");
    if (parse_rational(r.coeffs.front()) == 0) throw SchemaError("relation.coeffs[0] must be non-zero");
    spec.body = std::move(r);
  }
  return spec;
}

LinearRecurrence build_recurrence(const RecurrenceSpec& spec) {
  if (const auto* entries = std::get_if<std::vector<ClosedFormEntry>>(&spec.body)) {
    std::vector<RecurrenceTerm> terms;
    for (const auto& e : *entries) terms.push_back({parse_rational(e.root), parse_unipoly(e.coeff, spec.var)});
    return from_closed_form(std::move(terms));
  }
  const auto& rel = std::get<RelationEntry>(spec.body);
  std::vector<Rational> cs, init;
  for (const auto& c : rel.coeffs) cs.push_back(parse_rational(c));
  for (const auto& c : rel.initial) init.push_back(parse_rational(c));
  return from_relation(cs, init);
}

RecurrenceSpec render_spec(const LinearRecurrence& u, const std::string& var, std::optional<std::string> name) {
  RecurrenceSpec spec;
  spec.name = std::move(name);
  spec.var = var;
  std::vector<ClosedFormEntry> entries;
  for (const auto& t : u.terms()) entries.push_back({to_string(t.root), t.coeff.to_string(var)});
  spec.body = std::move(entries);
  return spec;
}

std::string spec_to_json(const RecurrenceSpec& spec) {
  json doc = json::object();
  if (spec.name) doc["name"] = *spec.name;
  if (spec.var != "X") doc["var"] = spec.var;
  if (const auto* entries = std::get_if<std::vector<ClosedFormEntry>>(&spec.body)) {
    json arr = json::array();
    for (const auto& e : *entries) arr.push_back({{"coeff", e.coeff}, {"root", e.root}});
    doc["closed_form"] = arr;
  } else {
    const auto& r = std::get<RelationEntry>(spec.body);
    doc["relation"] = {{"coeffs", r.coeffs}, {"initial", r.initial}};
  }
  return doc.dump();
}

}  // namespace recurquot
