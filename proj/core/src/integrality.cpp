#include "recurquot/integrality.hpp"

#include <algorithm>
#include <mutex>
#include <thread>
#include <tuple>

#include "recurquot/errors.hpp"
#include "recurquot/factor.hpp"

namespace recurquot {

// ---- decay ------------------------------------------------------------------

namespace {

// r(n) = log(base) / n with base >= 1; exact comparison of two such values.
struct RatioKey {
  Rational base;
  unsigned long n;
};

bool ratio_less(const RatioKey& a, const RatioKey& b) {
  // log(a)/na < log(b)/nb  <=>  a^nb < b^na
  return pow(a.base, static_cast<long>(b.n)) < pow(b.base, static_cast<long>(a.n));
}

}  // namespace

DecayReport lemma_decay_check(const LinearRecurrence& v, const Place& place, unsigned long n_lo,
                              unsigned long n_hi) {
  if (v.is_zero()) throw ZeroRecurrence("decay check of the zero recurrence");
  if (n_lo < 1 || n_hi < n_lo) throw InvalidArgument("decay range must satisfy 1 <= n_lo <= n_hi");
  bool hypothesis = std::any_of(v.terms().begin(), v.terms().end(),
                                [&](const RecurrenceTerm& t) { return place_abs(t.root, place) >= 1; });
  if (!hypothesis) throw HypothesisViolated("every root has absolute value < 1 at " + place.to_string());

  DecayReport report;
  report.place = place;
  std::optional<RatioKey> best;
  for (unsigned long n = n_lo; n <= n_hi; ++n) {
    Rational value = evaluate(v, n);
    if (value == 0) {
      report.skipped_zeros.push_back(n);
      continue;
    }
    // -log^-|V(n)| = log max(1, 1/|V(n)|).
    Rational inv = Rational(1) / place_abs(value, place);
    RatioKey key{std::max(Rational(1), inv), n};
    LogSum ratio;
    if (place.is_archimedean()) {
      ratio = LogSum::log_of(key.base).scaled(Rational(1, n));
    } else {
      long val = std::max(0L, valuation(value, place.prime()));
      ratio = LogSum::log_prime(place.prime(), make_rational(val, static_cast<long>(n)));
    }
    report.samples.push_back({n, ratio});
    if (!best || ratio_less(*best, key)) {
      best = key;
      report.max_ratio = ratio;
      report.argmax_n = n;
    }
  }
  return report;
}

// ---- search -----------------------------------------------------------------

DPolicy DPolicy::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("d-policy must be fixed:k or poly:B");
  std::string kind = text.substr(0, colon);
  std::string num = text.substr(colon + 1);
  if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InvalidArgument("d-policy needs a non-negative integer");
  unsigned long value = std::stoul(num);
  if (kind == "fixed") {
    if (value == 0) throw InvalidArgument("fixed d must be positive");
    return fixed(value);
  }
  if (kind == "poly") return poly_bound(value);
  throw InvalidArgument("unknown d-policy '" + kind + "'");
}

namespace {

bool acceptable(const Rational& x, const SearchOptions& o) {
  if (o.s_integers) return s_membership(x, *o.s_integers) != SMembership::neither;
  return x.get_den() == 1;
}

std::optional<Integer> test_pair(const Rational& um, const Rational& vn, unsigned long n, const SearchOptions& o) {
  Rational ratio = um / vn;
  if (o.policy.kind == DPolicy::Kind::fixed) {
    Integer d(o.policy.value);
    if (!acceptable(ratio * Rational(d), o)) return std::nullopt;
    return d;
  }
  Integer d = ratio.get_den();
  if (o.s_integers) d = strip_primes(d, *o.s_integers);
  if (d > pow(Integer(n), o.policy.value)) return std::nullopt;
  if (!acceptable(ratio * Rational(d), o)) throw Error("internal: clearing denominator failed");
  return d;
}

bool hit_less(const SearchHit& a, const SearchHit& b) {
  return std::tie(a.n, a.m, a.d) < std::tie(b.n, b.m, b.d);
}

}  // namespace

std::vector<SearchHit> integrality_search(const LinearRecurrence& u, const LinearRecurrence& v,
                                          const SearchOptions& options) {
  if (options.m_max < 1 || options.n_max < 1) throw InvalidArgument("search bounds must be >= 1");
  if (v.is_zero()) throw DivisorZero("search with V = 0");

  std::vector<Rational> u_values(options.m_max + 1);
  for (unsigned long m = 1; m <= options.m_max; ++m) u_values[m] = evaluate(u, m);

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<unsigned long>(threads, options.n_max));
  std::vector<std::vector<SearchHit>> partial(threads);
  std::mutex error_mu;
  std::exception_ptr error;

  auto worker = [&](unsigned id) {
    try {
      for (unsigned long n = 1 + id; n <= options.n_max; n += threads) {
        Rational vn = evaluate(v, n);
        if (vn == 0) continue;
        for (unsigned long m = 1; m <= options.m_max; ++m)
          if (auto d = test_pair(u_values[m], vn, n, options)) partial[id].push_back({m, n, *d});
        if (options.totient && vn.get_den() == 1) {
          Integer m = euler_phi(abs(Integer(vn.get_num())));
          if (m.fits_ulong_p() && m.get_ui() > options.m_max) {
            unsigned long mm = m.get_ui();
            if (auto d = test_pair(evaluate(u, mm), vn, n, options)) partial[id].push_back({mm, n, *d});
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }
  if (error) std::rethrow_exception(error);

  std::vector<SearchHit> hits;
  for (auto& p : partial) hits.insert(hits.end(), p.begin(), p.end());
  std::sort(hits.begin(), hits.end(), hit_less);
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

  for (const auto& h : hits) {
    Rational check = Rational(h.d) * evaluate(u, h.m) / evaluate(v, h.n);
    if (!acceptable(check, options)) throw Error("internal: search hit failed re-verification");
  }
  return hits;
}

// ---- obstruction ------------------------------------------------------------

namespace {

struct ModTerm {
  Integer root;                // alpha mod p
  std::vector<Integer> coeff;  // c * u_i(X) coefficients mod p
};

Integer mod(const Integer& a, const Integer& p) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

std::vector<ModTerm> reduce_mod(const LinearRecurrence& u, const Integer& p, Integer& clearing, bool& constant) {
  std::vector<Rational> all;
  for (const auto& t : u.terms()) {
    if (mpz_divisible_p(t.root.get_den_mpz_t(), p.get_mpz_t()))
      throw BadPrime(to_string(p) + " divides the denominator of root " + to_string(t.root));
    all.insert(all.end(), t.coeff.coefficients().begin(), t.coeff.coefficients().end());
  }
  clearing = lcm_of_denominators(all);
  if (mpz_divisible_p(clearing.get_mpz_t(), p.get_mpz_t()))
    throw BadPrime(to_string(p) + " divides a coefficient denominator");
  constant = true;
  std::vector<ModTerm> out;
  for (const auto& t : u.terms()) {
    ModTerm m;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(t.root.get_den()).get_mpz_t(), p.get_mpz_t());
    m.root = mod(Integer(t.root.get_num()) * inv, p);
    for (const auto& c : t.coeff.coefficients()) m.coeff.push_back(mod(Integer(Rational(c * clearing).get_num()), p));
    if (t.coeff.degree() > 0) constant = false;
    out.push_back(std::move(m));
  }
  return out;
}

Integer eval_mod(const std::vector<ModTerm>& terms, unsigned long n, const Integer& p) {
  Integer acc = 0;
  const Integer at = mod(Integer(n), p);
  for (const auto& t : terms) {
    Integer c = 0;
    for (auto it = t.coeff.rbegin(); it != t.coeff.rend(); ++it) c = mod(c * at + *it, p);
    Integer pw;
    mpz_powm_ui(pw.get_mpz_t(), t.root.get_mpz_t(), n, p.get_mpz_t());
    acc = mod(acc + c * pw, p);
  }
  return acc;
}

}  // namespace

ObstructionResult obstruction_scan(const LinearRecurrence& u, const LinearRecurrence& v, long q, long r,
                                   const Integer& p) {
  if (q < 1 || r < 0 || r >= q) throw InvalidArgument("progression needs q >= 1 and 0 <= r < q");
  if (!is_probable_prime(p)) throw InvalidArgument(to_string(p) + " is not prime");
  if (!p.fits_ulong_p() || p > 1'000'000) throw InvalidArgument("obstruction prime too large to scan");

  ObstructionResult res;
  bool u_const = true, v_const = true;
  auto u_mod = reduce_mod(u, p, res.clearing_u, u_const);
  auto v_mod = reduce_mod(v, p, res.clearing_v, v_const);
  const unsigned long pp = p.get_ui();
  // For m >= 1 the reductions are purely periodic: unit roots have order
  // dividing p - 1, roots divisible by p vanish, coefficients repeat mod p.
  res.period_u = u_const ? pp - 1 : pp * (pp - 1);
  res.period_v = v_const ? pp - 1 : pp * (pp - 1);

  const unsigned long uq = static_cast<unsigned long>(q), ur = static_cast<unsigned long>(r);
  unsigned long n = ur == 0 ? uq : ur;
  for (unsigned long k = 0; k < res.period_v; ++k, n += uq) {
    if (eval_mod(v_mod, n, p) != 0) {
      res.witness_n = n;
      break;
    }
  }
  for (unsigned long m = 1; m <= res.period_u; ++m) {
    if (eval_mod(u_mod, m, p) == 0) {
      res.witness_m = m;
      break;
    }
  }
  res.certified = !res.witness_n && !res.witness_m;
  return res;
}

}  // namespace recurquot
