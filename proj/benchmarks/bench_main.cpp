#include <benchmark/benchmark.h>

#include "powercl/bounds.hpp"
#include "powercl/clusters.hpp"
#include "powercl/constructors.hpp"
#include "powercl/fairpart.hpp"
#include "powercl/oracle.hpp"
#include "powercl/random.hpp"
#include "powercl/small_maps.hpp"
#include "powercl/text.hpp"

using namespace powercl;

namespace {

const SpecPtr k3Inf = make_spec({Order::finite(3), Order::infinite()});

Word random_word(Rng& rng, std::size_t len) {
  std::vector<Syllable> s;
  for (std::size_t i = 0; i < len; ++i) {
    auto f = static_cast<std::uint32_t>(i % 2);
    s.push_back({f, f == 0 ? rng.uniform(1, 2) : rng.uniform(-3, 3)});
  }
  return normalize(s, k3Inf);
}

void BM_Mul(benchmark::State& state) {
  Rng rng(1);
  auto a = random_word(rng, static_cast<std::size_t>(state.range(0)));
  auto b = inv(random_word(rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Mul)->Range(8, 4096);

void BM_AreConjugate(benchmark::State& state) {
  Rng rng(2);
  auto a = random_word(rng, static_cast<std::size_t>(state.range(0)));
  auto h = random_word(rng, 16);
  auto b = conj(a, h);
  for (auto _ : state) benchmark::DoNotOptimize(are_conjugate(a, b));
}
BENCHMARK(BM_AreConjugate)->Range(8, 1024);

void BM_CullerPower(benchmark::State& state) {
  auto a = Word::letter(k3Inf, 0, 1), b = Word::letter(k3Inf, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(culler_power(a, b, state.range(0)));
}
BENCHMARK(BM_CullerPower)->DenseRange(10, 40, 10);

void BM_FairPartition(benchmark::State& state) {
  Rng rng(3);
  std::vector<std::int64_t> items(static_cast<std::size_t>(state.range(0)));
  for (auto& x : items) x = rng.uniform(1, 100);
  for (auto _ : state) benchmark::DoNotOptimize(fp_exact(items));
}
BENCHMARK(BM_FairPartition)->Arg(8)->Arg(12)->Arg(32)->Arg(128);

void BM_EnumerateAndCheck(benchmark::State& state) {
  EnumerationLimits limits;
  limits.max_edges = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t ok = 0;
    enumerate_small_diagrams(limits, [&](const HowieDiagram&, const Motion& m) {
      auto report = detect_collisions(m);
      ok += all_required_hold(verify_lemmas(m, report, cluster_partition(m, report)));
    });
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_EnumerateAndCheck)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_BoundedSearch(benchmark::State& state) {
  auto spec = make_spec({Order::finite(3), Order::finite(3)});
  auto target = pow(parse_word("0^1 1^1", spec), 3);
  for (auto _ : state) benchmark::DoNotOptimize(bounded_cl_search(target, 1, 4));
}
BENCHMARK(BM_BoundedSearch)->Unit(benchmark::kMillisecond);

void BM_Fuzz(benchmark::State& state) {
  FuzzLimits limits;
  limits.spec = k3Inf;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fuzz_certificates(7, 100, limits, [](const Certificate&, FuzzMode) {}));
  }
}
BENCHMARK(BM_Fuzz)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
