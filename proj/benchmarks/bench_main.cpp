#include <nilorb/checker.hpp>
#include <nilorb/invgen.hpp>
#include <nilorb/orbitlab.hpp>
#include <nilorb/rootcomb.hpp>
#include <nilorb/sampling.hpp>

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

using namespace nilorb;

namespace {

// Block types of growing size with n = 2k + 4 and three blocks.
ParabolicType three_blocks(int k) { return ParabolicType({2, k + 2, 2 + k % 2}); }

void BM_ComputeBase(benchmark::State& state) {
  std::vector<int> sizes(static_cast<std::size_t>(state.range(0)), 1);
  for (std::size_t i = 0; i < sizes.size(); i += 2) sizes[i] = 2;
  const ParabolicType type(sizes);
  for (auto _ : state) benchmark::DoNotOptimize(admissible_pairs(compute_base(type)));
}
BENCHMARK(BM_ComputeBase)->Arg(4)->Arg(8)->Arg(16);

void BM_BuildGenerators(benchmark::State& state) {
  const ParabolicType type = three_blocks(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_generators(type));
}
BENCHMARK(BM_BuildGenerators)->DenseRange(1, 4);

void BM_InvarianceCheck(benchmark::State& state) {
  const GeneratorSet gens = build_generators(ParabolicType::parse("2,4,2"));
  for (auto _ : state) benchmark::DoNotOptimize(is_n_invariant(gens.type, gens.extras[0].poly));
}
BENCHMARK(BM_InvarianceCheck);

void BM_IndependenceRank(benchmark::State& state) {
  const GeneratorSet gens = build_generators(ParabolicType::parse("2,1,3,2"));
  for (auto _ : state) benchmark::DoNotOptimize(independence_rank(gens.type, gens.primary(), 1));
}
BENCHMARK(BM_IndependenceRank);

void BM_VerifyType(benchmark::State& state) {
  const ParabolicType type = ParabolicType::parse("2,4,2");
  for (auto _ : state) benchmark::DoNotOptimize(verify_type(type, 1));
}
BENCHMARK(BM_VerifyType)->Unit(benchmark::kMillisecond);

void BM_OrbitDim(benchmark::State& state) {
  const ParabolicType type = three_blocks(static_cast<int>(state.range(0)));
  Sampler sampler(3);
  const MatrixPoint x = sampler.point(type);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_dim(type, x));
}
BENCHMARK(BM_OrbitDim)->DenseRange(1, 4);

void BM_Reduce(benchmark::State& state) {
  const GeneratorSet gens = build_generators(three_blocks(static_cast<int>(state.range(0))));
  Sampler sampler(5);
  const MatrixPoint x = sampler.u0_point(gens);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_canonical(gens, x));
}
BENCHMARK(BM_Reduce)->DenseRange(1, 4);

}  // namespace
BENCHMARK_MAIN();
