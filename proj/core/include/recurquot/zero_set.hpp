#pragma once

#include <optional>
#include <vector>

#include "recurquot/recurrence.hpp"

namespace recurquot {

struct Progression {
  long modulus;
  long residue;
  friend bool operator==(const Progression&, const Progression&) = default;
};

enum class ZeroSetCertificate {
  /// No zeros exist beyond `threshold`, proven by a dominant-root bound.
  complete,
  /// Zeros were only searched up to the bound.
  bounded_only,
};

struct ZeroSet {
  std::vector<Progression> progressions;
  std::vector<unsigned long> sporadic;
  ZeroSetCertificate certificate = ZeroSetCertificate::bounded_only;
  /// Index from which the dominance bound excludes zeros, when proven.
  std::optional<unsigned long> threshold;
};

/// Smallest m0 >= 1 (and <= max_m) such that the leading term of u strictly
/// dominates the sum of all other terms in absolute value for every m >= m0.
/// nullopt without a unique root of maximal absolute value. The proof: with
/// A = |alpha_0|, d = deg u_0 and l = |lc(u_0)|, for m >= 2 L / l one has
/// |u_0(m)| >= l m^d / 2; each other term is bounded by S_j m^{e_j} |beta_j|^m,
/// and F(m) = sum_j (2 S_j / l) m^{e_j - d} (|beta_j| / A)^m is non-increasing
/// once every summand is, so F(m0) < 1 settles all m >= m0.
std::optional<unsigned long> dominance_threshold(const LinearRecurrence& u, unsigned long max_m);

/// Zeros of u on [0, search_bound]: whole progressions from vanishing
/// sections modulo 2, sporadic zeros elsewhere, and a completeness flag.
ZeroSet zero_set(const LinearRecurrence& u, unsigned long search_bound);

}  // namespace recurquot
