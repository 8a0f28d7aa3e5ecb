#include <benchmark/benchmark.h>

#include <random>

#include "qqsa/algebra.hpp"

using namespace qqsa;

namespace {

Algebra algebra(const std::string& type) {
  const auto d = CartanDatum::of_type(type);
  auto q = ParamMatrix::symbolic(d);
  Evaluator ev(q.names());
  return Algebra(std::make_shared<const Structure>(d, std::move(q), std::move(ev)));
}

// Sum of `terms` random words of the given length, fixed seed.
Element sample(const Algebra& A, std::size_t length, std::size_t terms, std::uint64_t seed) {
  const auto letters = A.structure().letters();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Element x;
  for (std::size_t t = 0; t < terms; ++t) {
    Word w;
    for (std::size_t k = 0; k < length; ++k) w.letters.push_back(letters[pick(rng)]);
    x.add(w, Coeff(static_cast<long>(t + 1)));
  }
  return x;
}

void run(benchmark::State& state, Exec exec) {
  const Algebra A = algebra("A2");
  const auto len = static_cast<std::size_t>(state.range(0));
  const Element x = sample(A, len, 4, 1);
  const Element y = sample(A, len, 4, 2);
  std::size_t size = 0;
  for (auto _ : state) {
    const Element z = A.product(x, y, exec);
    size = z.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["terms"] = static_cast<double>(size);
}

void BM_ProductSerial(benchmark::State& state) { run(state, Exec::serial); }
void BM_ProductParallel(benchmark::State& state) { run(state, Exec::parallel); }

}  // namespace

BENCHMARK(BM_ProductSerial)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductParallel)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
