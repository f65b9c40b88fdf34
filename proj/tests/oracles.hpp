// Reference implementations used only by the tests. They share no code with
// the library beyond the GMP number types, so agreement is evidence.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

// A closed form sum c_i(n) a_i^n with c_i given by ascending coefficients.
struct Term {
  Q root;
  std::vector<Q> coeff;
};

inline Q qpow(const Q& b, unsigned long e) {
  Q r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

inline Q poly_at(const std::vector<Q>& c, const Q& x) {
  Q r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

inline Q eval(const std::vector<Term>& terms, unsigned long n) {
  Q s = 0;
  for (const auto& t : terms) s += poly_at(t.coeff, Q(n)) * qpow(t.root, n);
  return s;
}

// Berlekamp-Massey over Q: the shortest relation
// s[n] = c[0] s[n-1] + ... + c[L-1] s[n-L] generating the whole sample.
inline std::vector<Q> berlekamp_massey(const std::vector<Q>& s) {
  std::vector<Q> c{1}, b{1};
  std::size_t L = 0, m = 1;
  Q bd = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    Q d = s[n];
    for (std::size_t i = 1; i <= L && i < c.size(); ++i) d += c[i] * s[n - i];
    if (d == 0) {
      ++m;
      continue;
    }
    std::vector<Q> t = c;
    Q coef = d / bd;
    if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
    if (2 * L <= n) {
      L = n + 1 - L;
      b = t;
      bd = d;
      m = 1;
    } else {
      ++m;
    }
  }
  c.resize(L + 1, 0);
  std::vector<Q> rel(L);
  for (std::size_t i = 0; i < L; ++i) rel[i] = -c[i + 1];
  return rel;
}

// Decides from 4k samples whether the sequence satisfies a relation of
// order <= k; returns it if so.
inline std::optional<std::vector<Q>> order_bounded_relation(const std::vector<Q>& samples, std::size_t k) {
  auto rel = berlekamp_massey(samples);
  if (rel.size() > k || 2 * rel.size() >= samples.size()) return std::nullopt;
  for (std::size_t n = rel.size(); n < samples.size(); ++n) {
    Q x = 0;
    for (std::size_t i = 0; i < rel.size(); ++i) x += rel[i] * samples[n - 1 - i];
    if (x != samples[n]) return std::nullopt;
  }
  return rel;
}

inline std::map<Z, unsigned> trial_factor(Z n) {
  std::map<Z, unsigned> f;
  if (n < 0) n = -n;
  for (Z p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

inline long vp(Z n, const Z& p) {
  long v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Dense polynomials, ascending, for a hand-rolled Euclid.
using Poly = std::vector<Q>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly rem(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Q f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

inline Poly euclid_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Q l = a.back();
    for (auto& c : a) c /= l;
  }
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Q rational(long max_num, long max_den) {
    long d = range(1, max_den);
    Q x(range(-max_num, max_num), d);
    x.canonicalize();
    return x;
  }
  Q nonzero_rational(long max_num, long max_den) {
    Q x;
    do x = rational(max_num, max_den);
    while (x == 0);
    return x;
  }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(range(0, static_cast<long>(xs.size()) - 1))];
  }
};

}  // namespace oracle
