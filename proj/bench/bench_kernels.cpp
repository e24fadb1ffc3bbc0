#include <benchmark/benchmark.h>

#include <random>

#include "prepcode/construct.hpp"
#include "prepcode/kernels.hpp"

using namespace prepcode;

namespace {

std::vector<std::uint64_t> words(std::size_t count) {
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> out(count);
  for (auto& w : out) w = rng() & BinaryWord::mask(24);
  return out;
}

template <auto Fn>
void min_distance(benchmark::State& state) {
  const auto w = words(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(w));
}

template <auto Fn>
void adjacency(benchmark::State& state) {
  const auto w = words(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(w, 10));
}

template <auto Fn>
void mismatch(benchmark::State& state) {
  const auto a = words(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, a));
}

template <auto Fn>
void xy_pairs(benchmark::State& state) {
  const auto f = gf2m::FieldTable::standard(3);
  std::vector<std::uint32_t> sums(256), cube_sums(256), cubes(8);
  for (unsigned e = 0; e < 8; ++e) cubes[e] = f.cube(e);
  for (unsigned m = 0; m < 256; ++m) {
    for (unsigned e = 0; e < 8; ++e) {
      if ((m >> e) & 1) {
        sums[m] ^= e;
        cube_sums[m] ^= cubes[e];
      }
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(Fn(8, sums, cube_sums, cubes));
}

}  // namespace

BENCHMARK(min_distance<kernels::serial::min_pairwise_distance>)->Arg(1024)->Arg(4096);
BENCHMARK(min_distance<kernels::omp::min_pairwise_distance>)->Arg(1024)->Arg(4096);
BENCHMARK(adjacency<kernels::serial::distance_adjacency>)->Arg(1024)->Arg(4096);
BENCHMARK(adjacency<kernels::omp::distance_adjacency>)->Arg(1024)->Arg(4096);
BENCHMARK(mismatch<kernels::serial::first_distance_mismatch>)->Arg(1024)->Arg(4096);
BENCHMARK(mismatch<kernels::omp::first_distance_mismatch>)->Arg(1024)->Arg(4096);
BENCHMARK(xy_pairs<kernels::serial::enumerate_xy_pairs>);
BENCHMARK(xy_pairs<kernels::omp::enumerate_xy_pairs>);

BENCHMARK_MAIN();
