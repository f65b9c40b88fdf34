#pragma once

#include <optional>
#include <span>
#include <vector>

#include "recurquot/factor.hpp"
#include "recurquot/lattice.hpp"

namespace recurquot {

/// Coordinates of a set of rationals in Q^x = {+-1} x (free abelian group on
/// the primes): one sign bit and one exponent row per input, all over the
/// same ascending prime list.
struct ExponentTable {
  std::vector<Integer> primes;
  std::vector<int> sign_bits;  // 1 for negative inputs
  IntMatrix exponents;
};

ExponentTable exponent_table(std::span<const Rational> xs,
                             const FactorLimits& limits = default_factor_limits());

/// Integer relations z with prod x_i^{z_i} = +-1. `negative[k]` records
/// whether relation k evaluates to -1. Basis rows are in Hermite normal form.
struct RelationLattice {
  IntMatrix basis;
  std::vector<bool> negative;
};

RelationLattice relation_lattice(std::span<const Rational> roots,
                                 const FactorLimits& limits = default_factor_limits());

/// Either the group is torsion-free or `witness` satisfies prod x^z = -1.
struct TorsionStatus {
  bool torsion_free = true;
  std::vector<Integer> witness;
};

TorsionStatus torsion_status(std::span<const Rational> roots,
                             const FactorLimits& limits = default_factor_limits());

/// A basis of the group generated by a set of non-zero rationals, assumed
/// torsion-free. Generators correspond to the Hermite-normal-form rows of the
/// exponent lattice, so the basis does not depend on input order.
class MultiplicativeBasis {
 public:
  MultiplicativeBasis() = default;

  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<Rational>& generators() const noexcept { return generators_; }
  const std::vector<Integer>& primes() const noexcept { return primes_; }
  /// Generator exponent rows over primes().
  const IntMatrix& generator_exponents() const noexcept { return generator_rows_; }
  const std::vector<Rational>& roots() const noexcept { return roots_; }
  /// expressions()[i] gives roots()[i] = prod generators^e.
  const std::vector<std::vector<long>>& expressions() const noexcept { return expressions_; }

  /// Exponents of x in the generators, or nullopt if x is not in the group.
  std::optional<std::vector<long>> express(const Rational& x) const;
  Rational element(std::span<const long> exponents) const;

  friend bool operator==(const MultiplicativeBasis& a, const MultiplicativeBasis& b) {
    return a.generators_ == b.generators_;
  }

 private:
  friend MultiplicativeBasis compute_basis(std::span<const Rational>, const FactorLimits&);
  friend MultiplicativeBasis basis_from_generators(std::span<const Rational>, std::span<const Rational>,
                                                   const FactorLimits&);

  std::vector<Rational> generators_;
  std::vector<Integer> primes_;
  IntMatrix generator_rows_;
  // HNF of the generator rows. When set, `to_generators_` rewrites HNF
  // coordinates as generator exponents.
  HermiteDecomposition hnf_;
  IntMatrix to_generators_;
  std::vector<Rational> roots_;
  std::vector<std::vector<long>> expressions_;
};

/// A basis with caller-chosen generators, e.g. {3/2} rather than the
/// canonical {2/3}. Throws InvalidArgument unless the generators are
/// multiplicatively independent, and RootNotInGroup if some root is not a
/// product of them.
MultiplicativeBasis basis_from_generators(std::span<const Rational> generators, std::span<const Rational> roots = {},
                                          const FactorLimits& limits = default_factor_limits());

/// Throws TorsionGroup if -1 lies in the generated group.
MultiplicativeBasis compute_basis(std::span<const Rational> roots,
                                  const FactorLimits& limits = default_factor_limits());

}  // namespace recurquot
