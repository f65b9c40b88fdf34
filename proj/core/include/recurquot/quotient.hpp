#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "recurquot/group_ring.hpp"
#include "recurquot/heights.hpp"
#include "recurquot/multi_recurrence.hpp"
#include "recurquot/recurrence.hpp"

namespace recurquot {

/// Common basis for the roots of several recurrences. Throws TorsionGroup
/// when -1 lies in the generated group.
std::shared_ptr<const MultiplicativeBasis> common_basis(std::span<const LinearRecurrence* const> seqs);

struct HadamardQuotient {
  /// Set iff u / v is a linear recurrence.
  std::optional<LinearRecurrence> quotient;
};

/// Decides whether v divides u in the ring of recurrences and returns the
/// quotient. Throws DivisorZero or TorsionGroup.
HadamardQuotient hadamard_quotient(const LinearRecurrence& u, const LinearRecurrence& v);

/// Clearing data: P(n) U / V = quotient and V(n) / P(n) = v_over_p pointwise.
struct QuotientCertificate {
  UniPoly clearing_poly;
  std::variant<LinearRecurrence, MultiRecurrence> quotient;
  LinearRecurrence v_over_p;
  /// lcm of the denominators of the quotient's coefficients.
  Integer min_denominator = 1;
};

struct ClearanceResult {
  std::optional<QuotientCertificate> certificate;
  /// When refused: the canonical cofactor v / gcd(u, v), which is not a unit
  /// multiple of a polynomial in X.
  std::optional<GroupRingElement> witness;
};

/// Looks for P in Q[X] making P(n) U(n) / V(n) and V(n) / P(n) recurrences.
ClearanceResult polynomial_clearance(const LinearRecurrence& u, const LinearRecurrence& v);

enum class CrossRefusal { multiple_roots };

struct CrossResult {
  std::optional<QuotientCertificate> certificate;
  std::optional<CrossRefusal> refusal;
};

/// Two-parameter version: P(n) U(m) / V(n) as a multi-recurrence. This works
/// exactly when V has a single root beta, V = c P(n) beta^n.
CrossResult cross_quotient(const LinearRecurrence& u_in_m, const LinearRecurrence& v_in_n);

/// Converse check for a certificate: with S the primes of every root and
/// coefficient of U, V and P, tests whether min_denominator * U(m) / V(n) is
/// an S-integer at each index pair (m = n for one-parameter certificates).
struct ConverseReport {
  SIntegerSpec s;
  std::size_t tested = 0;
  /// (m, n) pairs where the value is not an S-integer.
  std::vector<std::pair<unsigned long, unsigned long>> failures;
  bool passed() const { return failures.empty(); }
};

SIntegerSpec auto_s_set(const LinearRecurrence& u, const LinearRecurrence& v, const UniPoly& p);

ConverseReport converse_check(const LinearRecurrence& u, const LinearRecurrence& v,
                              const QuotientCertificate& cert, unsigned long max_index);

}  // namespace recurquot
