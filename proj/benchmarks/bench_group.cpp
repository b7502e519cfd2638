#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hexarep/espgroup.hpp"
#include "hexarep/reps.hpp"

using namespace hexarep;

static void BM_Mul18(benchmark::State& state) {
  const auto desc = espgroup::central_product(reps::rep81_descriptor(),
                                              reps::delta_descriptor());
  std::mt19937_64 rng(1);
  std::vector<espgroup::GroupElement> elems;
  for (int i = 0; i < 256; ++i)
    elems.push_back({static_cast<std::uint32_t>(rng() & 0x3ffff),
                     static_cast<std::uint8_t>(rng() & 1)});
  size_t i = 0;
  for (auto _ : state) {
    const auto r = espgroup::mul(desc, elems[i & 255], elems[(i + 1) & 255]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_Mul18);

static void BM_Commutator18(benchmark::State& state) {
  const auto desc = espgroup::central_product(reps::rep81_descriptor(),
                                              reps::delta_descriptor());
  std::mt19937_64 rng(2);
  std::vector<espgroup::GroupElement> elems;
  for (int i = 0; i < 256; ++i)
    elems.push_back({static_cast<std::uint32_t>(rng() & 0x3ffff),
                     static_cast<std::uint8_t>(rng() & 1)});
  size_t i = 0;
  for (auto _ : state) {
    const auto r =
        espgroup::commutator(desc, elems[i & 255], elems[(i + 1) & 255]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_Commutator18);

static void BM_GeneratedOrderRep81(benchmark::State& state) {
  const auto r = reps::build_rep_81();
  for (auto _ : state) {
    const auto out = espgroup::generated_order(
        r.rep.desc, std::span<const espgroup::GroupElement>(
                        r.rep.psi.data(), r.rep.psi.size()));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_GeneratedOrderRep81);

static void BM_GroupSign18(benchmark::State& state) {
  const auto desc = espgroup::central_product(reps::rep81_descriptor(),
                                              reps::delta_descriptor());
  for (auto _ : state) {
    benchmark::DoNotOptimize(espgroup::group_sign(desc));
  }
}
BENCHMARK(BM_GroupSign18);
