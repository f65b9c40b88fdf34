#include "recurquot/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <string>
#include <vector>

#include "recurquot/errors.hpp"

namespace recurquot {

namespace {

const std::vector<unsigned long>& primes_up_to(unsigned long bound) {
  static std::mutex mu;
  static std::vector<unsigned long> primes;
  static unsigned long sieved = 0;
  std::lock_guard lock(mu);
  if (bound > sieved) {
    std::vector<bool> composite(bound + 1, false);
    primes.clear();
    for (unsigned long i = 2; i <= bound; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
    }
    sieved = bound;
  }
  return primes;
}

// Brent's variant of Pollard rho. Returns a non-trivial factor or 0.
Integer rho_split(const Integer& n, unsigned long budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  unsigned long spent = 0;
  for (unsigned long c = 1; spent < budget; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && spent < budget) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          Integer d = x - y;
          q = q * abs(d);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        spent += lim;
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time from the last saved point.
      do {
        step(ys);
        g = gcd(Integer(abs(Integer(x - ys))), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out, const FactorLimits& limits) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer f = rho_split(n, limits.rho_iterations);
  if (f == 0)
    throw FactorizationLimit("could not split " + to_string(n) + " within " +
                             std::to_string(limits.rho_iterations) + " rho iterations");
  split_into(f, out, limits);
  split_into(Integer(n / f), out, limits);
}

}  // namespace

FactorLimits FactorLimits::from_environment() {
  FactorLimits limits;
  if (const char* env = std::getenv("RECURQUOT_FACTOR_LIMIT")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') limits.rho_iterations = v;
  }
  return limits;
}

const FactorLimits& default_factor_limits() {
  static const FactorLimits limits = FactorLimits::from_environment();
  return limits;
}

Rational FactoredRational::rebuild() const {
  Rational out = sign;
  for (const auto& [p, e] : exponents) out *= pow(Rational(p), e);
  return out;
}

std::map<Integer, unsigned> factor_integer(const Integer& n, const FactorLimits& limits) {
  if (n == 0) throw ZeroInput("cannot factor zero");
  std::map<Integer, unsigned> out;
  Integer m = abs(n);
  for (unsigned long p : primes_up_to(limits.trial_bound)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++out[Integer(p)];
    }
  }
  split_into(m, out, limits);
  return out;
}

FactoredRational factor_rational(const Rational& x, const FactorLimits& limits) {
  if (x == 0) throw ZeroInput("cannot factor zero");
  FactoredRational f;
  f.sign = x < 0 ? -1 : 1;
  for (const auto& [p, e] : factor_integer(Integer(x.get_num()), limits)) f.exponents[p] += e;
  for (const auto& [p, e] : factor_integer(Integer(x.get_den()), limits)) f.exponents[p] -= e;
  return f;
}

Integer euler_phi(const Integer& n, const FactorLimits& limits) {
  if (n < 1) throw InvalidArgument("totient requires n >= 1");
  Integer phi = 1;
  for (const auto& [p, e] : factor_integer(n, limits)) phi *= (p - 1) * pow(p, e - 1);
  return phi;
}

}  // namespace recurquot
