#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recurquot/heights.hpp"
#include "recurquot/recurrence.hpp"

namespace recurquot {

// ---- decay of |V(n)| at a place -------------------------------------------

struct DecaySample {
  unsigned long n;
  /// r(n) = -log^-|V(n)| / n, exact.
  LogSum ratio;
};

struct DecayReport {
  Place place = Place::archimedean();
  std::vector<DecaySample> samples;
  LogSum max_ratio;
  unsigned long argmax_n = 0;
  /// Indices with V(n) = 0, which carry no ratio.
  std::vector<unsigned long> skipped_zeros;
};

/// Computes r(n) for n in [n_lo, n_hi] (n_lo >= 1). Requires some root with
/// |beta|_place >= 1, else HypothesisViolated. Ties keep the smallest n.
DecayReport lemma_decay_check(const LinearRecurrence& v, const Place& place, unsigned long n_lo,
                              unsigned long n_hi);

// ---- integrality search ---------------------------------------------------

/// How the multiplier d in d*U(m)/V(n) is chosen: a fixed value, or the least
/// clearing denominator provided it is at most n^B.
struct DPolicy {
  enum class Kind { fixed, poly_bound };
  Kind kind = Kind::fixed;
  unsigned long value = 1;

  static DPolicy fixed(unsigned long d) { return {Kind::fixed, d}; }
  static DPolicy poly_bound(unsigned long b) { return {Kind::poly_bound, b}; }
  /// Parses "fixed:k" or "poly:B".
  static DPolicy parse(const std::string& text);
};

struct SearchOptions {
  unsigned long m_max = 1;
  unsigned long n_max = 1;
  DPolicy policy;
  /// When set, hits are S-integers instead of integers.
  std::optional<SIntegerSpec> s_integers;
  /// Also test (phi(V(n)), n) for every n <= n_max with V(n) a non-zero integer.
  bool totient = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SearchHit {
  unsigned long m;
  unsigned long n;
  Integer d;
  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

/// Exhaustive over 1 <= m <= m_max, 1 <= n <= n_max (skipping V(n) = 0),
/// plus totient pairs. Every hit is re-verified by exact division; the list is
/// sorted by (n, m, d) and free of duplicates.
std::vector<SearchHit> integrality_search(const LinearRecurrence& u, const LinearRecurrence& v,
                                          const SearchOptions& options);

// ---- mod-p obstruction ----------------------------------------------------

struct ObstructionResult {
  bool certified = false;
  /// Integers making c*U and c*V integral at p (coprime to p).
  Integer clearing_u = 1;
  Integer clearing_v = 1;
  unsigned long period_u = 0;
  unsigned long period_v = 0;
  /// n in the progression with p not dividing V(n), if any.
  std::optional<unsigned long> witness_n;
  /// m with p dividing U(m), if any.
  std::optional<unsigned long> witness_m;
};

/// Certified iff p | V(n) for all n >= 1 with n = r (mod q) and p does not
/// divide U(m) for any m >= 1; then d*U(m)/V(n) is never an integer on the
/// progression for d coprime to p. Throws BadPrime if p divides a root
/// denominator or a coefficient denominator.
ObstructionResult obstruction_scan(const LinearRecurrence& u, const LinearRecurrence& v, long q, long r,
                                   const Integer& p);

}  // namespace recurquot
