#include <benchmark/benchmark.h>

#include <random>

#include "braidcalc/b3.hpp"
#include "braidcalc/certifier.hpp"

namespace {

using namespace braidcalc;

void BM_SweepSerial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(m, m, m));
}

void BM_SweepParallel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(m, m, m));
}

std::vector<BraidWord> random_words(std::size_t count, std::size_t length) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<BraidWord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Letter> letters;
    for (std::size_t j = 0; j < length; ++j) {
      const int k = pick(rng);
      letters.emplace_back(1 + k % 2, k < 2 ? Sign::Positive : Sign::Negative);
    }
    out.emplace_back(3, std::move(letters));
  }
  return out;
}

void BM_NormalFormsSerial(benchmark::State& state) {
  const auto words = random_words(static_cast<std::size_t>(state.range(0)), 40);
  for (auto _ : state) benchmark::DoNotOptimize(b3::normal_forms_serial(words));
}

void BM_NormalFormsParallel(benchmark::State& state) {
  const auto words = random_words(static_cast<std::size_t>(state.range(0)), 40);
  for (auto _ : state) benchmark::DoNotOptimize(b3::normal_forms(words));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalFormsSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalFormsParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
