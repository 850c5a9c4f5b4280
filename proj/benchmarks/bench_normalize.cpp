#include <benchmark/benchmark.h>

#include <vector>

#include "garnorm/instances.hpp"
#include "garnorm/plactic.hpp"

using namespace garnorm;

namespace {

std::vector<Word> random_words(std::size_t letters, std::size_t len, std::size_t count) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_word(17, letters, len, i));
  return out;
}

}  // namespace

// arg 0: braid strands, arg 1: word length
static void BM_BraidNormalForm(benchmark::State& state) {
  const Instance I = load_instance("braid:" + std::to_string(state.range(0)));
  const auto words = random_words(I.nz.alphabet().size(), state.range(1), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(I.nz, words[i++ % words.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BraidNormalForm)->ArgsProduct({{3, 4, 5}, {8, 32, 128}});

static void BM_RightSchedule(benchmark::State& state) {
  const Instance I = load_instance("braid:4");
  const auto words = random_words(I.nz.alphabet().size(), state.range(0), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize_right(I.nz, words[i++ % words.size()]));
  }
}
BENCHMARK(BM_RightSchedule)->Arg(8)->Arg(32)->Arg(128);

static void BM_ExhaustiveRoute(benchmark::State& state) {
  const Instance I = load_instance("prop436");
  const auto words = random_words(I.nz.alphabet().size(), state.range(0), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(I.nz, words[i++ % words.size()]));
  }
}
BENCHMARK(BM_ExhaustiveRoute)->Arg(4)->Arg(8);

static void BM_Tableau(benchmark::State& state) {
  const Normaliser nz = plactic_normaliser(static_cast<int>(state.range(0)));
  const auto words = random_words(nz.alphabet().size(), 16, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tableau_of(nz, words[i++ % words.size()]));
  }
}
BENCHMARK(BM_Tableau)->Arg(3)->Arg(6);
BENCHMARK_MAIN();
