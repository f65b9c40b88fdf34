#include "recurquot/multiplicative_group.hpp"

#include <algorithm>
#include <set>

#include "recurquot/errors.hpp"

namespace recurquot {

namespace {

bool sign_parity(const IntVector& z, const std::vector<int>& sign_bits) {
  Integer odd = 0;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (sign_bits[i]) odd += z[i];
  return mpz_odd_p(odd.get_mpz_t()) != 0;
}

void require_nonzero(std::span<const Rational> xs) {
  for (const auto& x : xs)
    if (x == 0) throw ZeroInput("multiplicative computations need non-zero roots");
}

}  // namespace

ExponentTable exponent_table(std::span<const Rational> xs, const FactorLimits& limits) {
  require_nonzero(xs);
  std::vector<FactoredRational> factored;
  std::set<Integer> primes;
  for (const auto& x : xs) {
    factored.push_back(factor_rational(x, limits));
    for (const auto& [p, e] : factored.back().exponents) primes.insert(p);
  }
  ExponentTable t;
  t.primes.assign(primes.begin(), primes.end());
  for (const auto& f : factored) {
    t.sign_bits.push_back(f.sign < 0 ? 1 : 0);
    IntVector row;
    for (const auto& p : t.primes) {
      auto it = f.exponents.find(p);
      row.emplace_back(it == f.exponents.end() ? 0L : it->second);
    }
    t.exponents.push_back(std::move(row));
  }
  return t;
}

RelationLattice relation_lattice(std::span<const Rational> roots, const FactorLimits& limits) {
  ExponentTable table = exponent_table(roots, limits);
  HermiteDecomposition hnf = hermite_form(table.exponents, table.primes.size());
  IntMatrix kernel(hnf.transform.begin() + static_cast<std::ptrdiff_t>(hnf.rank), hnf.transform.end());
  RelationLattice out;
  if (kernel.empty()) return out;
  HermiteDecomposition canon = hermite_form(kernel, roots.size());
  for (std::size_t k = 0; k < canon.rank; ++k) {
    out.basis.push_back(canon.form[k]);
    out.negative.push_back(sign_parity(canon.form[k], table.sign_bits));
  }
  return out;
}

TorsionStatus torsion_status(std::span<const Rational> roots, const FactorLimits& limits) {
  ExponentTable table = exponent_table(roots, limits);
  RelationLattice lattice = relation_lattice(roots, limits);
  TorsionStatus status;
  for (std::size_t k = 0; k < lattice.basis.size(); ++k) {
    if (!lattice.negative[k]) continue;
    status.torsion_free = false;
    status.witness = lattice.basis[k];
    // Orient so the first negative root carrying an odd exponent gets a
    // positive one.
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!table.sign_bits[i] || mpz_even_p(status.witness[i].get_mpz_t())) continue;
      if (status.witness[i] < 0)
        for (auto& z : status.witness) z = -z;
      break;
    }
    break;
  }
  return status;
}

MultiplicativeBasis compute_basis(std::span<const Rational> roots, const FactorLimits& limits) {
  TorsionStatus status = torsion_status(roots, limits);
  if (!status.torsion_free) throw TorsionGroup("the roots generate a group containing -1");
  ExponentTable table = exponent_table(roots, limits);

  MultiplicativeBasis b;
  b.primes_ = table.primes;
  b.roots_.assign(roots.begin(), roots.end());
  HermiteDecomposition hnf = hermite_form(table.exponents, table.primes.size());
  hnf.form.resize(hnf.rank);
  // Each generator is a Z-combination of the roots; its sign follows from
  // the transform because the group has no torsion.
  for (std::size_t k = 0; k < hnf.rank; ++k) {
    Rational g = sign_parity(hnf.transform[k], table.sign_bits) ? -1 : 1;
    for (std::size_t j = 0; j < table.primes.size(); ++j)
      g *= pow(Rational(table.primes[j]), to_long(hnf.form[k][j]));
    b.generators_.push_back(g);
  }
  hnf.transform.clear();
  b.generator_rows_ = hnf.form;
  b.hnf_ = std::move(hnf);
  for (const auto& r : roots) {
    auto e = b.express(r);
    if (!e) throw Error("internal: root not expressible in its own basis");
    b.expressions_.push_back(std::move(*e));
  }
  return b;
}

MultiplicativeBasis basis_from_generators(std::span<const Rational> generators, std::span<const Rational> roots,
                                          const FactorLimits& limits) {
  if (!relation_lattice(generators, limits).basis.empty())
    throw InvalidArgument("generators are not multiplicatively independent");
  std::vector<Rational> all(generators.begin(), generators.end());
  all.insert(all.end(), roots.begin(), roots.end());
  ExponentTable table = exponent_table(all, limits);

  MultiplicativeBasis b;
  b.primes_ = table.primes;
  b.generators_.assign(generators.begin(), generators.end());
  b.roots_.assign(roots.begin(), roots.end());
  b.generator_rows_.assign(table.exponents.begin(), table.exponents.begin() + static_cast<long>(generators.size()));
  HermiteDecomposition hnf = hermite_form(b.generator_rows_, table.primes.size());
  hnf.form.resize(hnf.rank);
  b.to_generators_.assign(hnf.transform.begin(), hnf.transform.begin() + static_cast<long>(hnf.rank));
  hnf.transform.clear();
  b.hnf_ = std::move(hnf);
  for (const auto& r : roots) {
    auto e = b.express(r);
    if (!e) throw RootNotInGroup(to_string(r) + " is not a product of the given generators");
    b.expressions_.push_back(std::move(*e));
  }
  return b;
}

std::optional<std::vector<long>> MultiplicativeBasis::express(const Rational& x) const {
  if (x == 0) return std::nullopt;
  FactoredRational f = factor_rational(x);
  IntVector target(primes_.size(), Integer(0));
  for (const auto& [p, e] : f.exponents) {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return std::nullopt;
    target[static_cast<std::size_t>(it - primes_.begin())] = e;
  }
  IntVector coeffs;
  if (!solve_in_lattice(hnf_, target, coeffs)) return std::nullopt;
  if (!to_generators_.empty()) {
    IntVector g(generators_.size(), Integer(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      for (std::size_t j = 0; j < g.size(); ++j) g[j] += coeffs[k] * to_generators_[k][j];
    coeffs = std::move(g);
  }
  std::vector<long> out;
  for (const auto& c : coeffs) out.push_back(to_long(c));
  if (element(out) != x) return std::nullopt;  // sign mismatch
  return out;
}

Rational MultiplicativeBasis::element(std::span<const long> exponents) const {
  Rational out = 1;
  for (std::size_t i = 0; i < exponents.size() && i < generators_.size(); ++i)
    if (exponents[i] != 0) out *= pow(generators_[i], exponents[i]);
  return out;
}

}  // namespace recurquot
