#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "recurquot/group_ring.hpp"
#include "recurquot/mpoly.hpp"
#include "recurquot/recurrence.hpp"
#include "recurquot/unipoly.hpp"

namespace recurquot {

/// Polynomial grammar, whitespace-insensitive:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' ['-'] INT)?
///   atom    := INT ['/' INT] | IDENT | '(' expr ')'
///
/// so '^' binds tighter than unary minus, which binds tighter than '*'.
/// Identifiers must appear in `variables`; negative exponents are accepted
/// only with `laurent` set and only on monomials.
MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables, bool laurent = false);

/// Univariate polynomial in `var`; "X" is always accepted as well.
UniPoly parse_unipoly(std::string_view text, const std::string& var = "X");

/// Group ring element over X, T1..Tt ("T" when t = 1).
GroupRingElement parse_group_ring(std::string_view text, std::shared_ptr<const MultiplicativeBasis> basis);

/// Input document:
///   {"name"?: str, "var"?: "X"|"M"|"N",
///    "closed_form": [{"root": "2", "coeff": "X + 1"}, ...]}
/// or
///   {"name"?: str, "var"?: ..., "relation": {"coeffs": [c0, ...], "initial": [...]}}
/// Rational literals are strings ("-1/3") or JSON integers.
struct ClosedFormEntry {
  std::string root;
  std::string coeff;
  friend bool operator==(const ClosedFormEntry&, const ClosedFormEntry&) = default;
};

struct RelationEntry {
  std::vector<std::string> coeffs;
  std::vector<std::string> initial;
  friend bool operator==(const RelationEntry&, const RelationEntry&) = default;
};

struct RecurrenceSpec {
  std::optional<std::string> name;
  std::string var = "X";
  std::variant<std::vector<ClosedFormEntry>, RelationEntry> body;
  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// Throws ParseError for malformed JSON or polynomial text and SchemaError
/// for well-formed documents of the wrong shape.
RecurrenceSpec parse_spec(std::string_view text);

LinearRecurrence build_recurrence(const RecurrenceSpec& spec);

/// Closed-form spec whose coefficients are rendered in `var`.
RecurrenceSpec render_spec(const LinearRecurrence& u, const std::string& var = "X",
                           std::optional<std::string> name = std::nullopt);
std::string spec_to_json(const RecurrenceSpec& spec);

}  // namespace recurquot
