#include <benchmark/benchmark.h>

#include "recurquot/recurquot.hpp"

using namespace recurquot;

namespace {

LinearRecurrence minus_one(long a) {
  return from_closed_form({{Rational(a), UniPoly(1)}, {Rational(1), UniPoly(-1)}});
}

void BM_FactorSemiprime(benchmark::State& state) {
  Integer n = Integer("1000000007") * Integer("998244353");
  for (auto _ : state) benchmark::DoNotOptimize(factor_integer(n));
}
BENCHMARK(BM_FactorSemiprime);

void BM_HadamardQuotient(benchmark::State& state) {
  // (a^k - 1) / (a - 1) with a = 2^range
  long k = state.range(0);
  Integer a = 2;
  auto u = from_closed_form({{Rational(pow(a, static_cast<unsigned long>(k))), UniPoly(1)}, {1, UniPoly(-1)}});
  auto v = minus_one(2);
  for (auto _ : state) benchmark::DoNotOptimize(hadamard_quotient(u, v));
}
BENCHMARK(BM_HadamardQuotient)->Arg(4)->Arg(16)->Arg(64);

void BM_LaurentGcd(benchmark::State& state) {
  auto basis = std::make_shared<const MultiplicativeBasis>(compute_basis(std::vector<Rational>{2, 3, 5}));
  auto f = parse_group_ring("(T1 - 1)*(T2^2 + X*T3 - 1)*(T1*T2 + 1)", basis);
  auto g = parse_group_ring("(T1 - 1)*(T3 - X)*(T2 + 2)", basis);
  for (auto _ : state) benchmark::DoNotOptimize(laurent_gcd(f, g));
}
BENCHMARK(BM_LaurentGcd);

void BM_ZeroSet(benchmark::State& state) {
  auto u = from_closed_form({{Rational(2), UniPoly(1)}, {Rational(1), UniPoly(std::vector<Rational>{0, -2})}});
  for (auto _ : state) benchmark::DoNotOptimize(zero_set(u, static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_ZeroSet)->Arg(100)->Arg(1000);

void BM_IntegralitySearch(benchmark::State& state) {
  SearchOptions o;
  o.m_max = static_cast<unsigned long>(state.range(0));
  o.n_max = 20;
  for (auto _ : state) benchmark::DoNotOptimize(integrality_search(minus_one(3), minus_one(2), o));
}
BENCHMARK(BM_IntegralitySearch)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
