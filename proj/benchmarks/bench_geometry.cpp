#include <benchmark/benchmark.h>

#include "hexarep/gmodels.hpp"
#include "hexarep/reps.hpp"
#include "hexarep/stheta.hpp"
#include "hexarep/triples.hpp"

using namespace hexarep;

namespace {

const stheta::SThetaGeometry& canonical_stheta() {
  static const auto g = [] {
    const auto duad = gmodels::build_duad_q52();
    const auto spread = gmodels::canonical_spread(duad);
    const auto sls = triples::spread_linear_space(duad, spread);
    const auto coords = triples::coordinatize_ag23(sls, 0);
    return stheta::build_stheta(duad, spread,
                                triples::delta_triple(sls, coords));
  }();
  return g;
}

}  // namespace

static void BM_BuildDuad(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gmodels::build_duad_q52());
}
BENCHMARK(BM_BuildDuad);

static void BM_BuildStheta(benchmark::State& state) {
  const auto duad = gmodels::build_duad_q52();
  const auto spread = gmodels::canonical_spread(duad);
  const auto sls = triples::spread_linear_space(duad, spread);
  const auto coords = triples::coordinatize_ag23(sls, 0);
  const auto triple = triples::delta_triple(sls, coords);
  for (auto _ : state)
    benchmark::DoNotOptimize(stheta::build_stheta(duad, spread, triple));
}
BENCHMARK(BM_BuildStheta);

static void BM_NearPolygonCheck243(benchmark::State& state) {
  const auto& g = canonical_stheta();
  for (auto _ : state)
    benchmark::DoNotOptimize(fgeom::verify_near_polygon(g.space));
}
BENCHMARK(BM_NearPolygonCheck243);

static void BM_ConvexClosureQuad(benchmark::State& state) {
  const auto& g = canonical_stheta();
  int q = -1;
  for (int p = 1; p < 243 && q < 0; ++p)
    if (g.space.distance_u8(0, p) == 2) q = p;
  const std::array<int, 2> seed{0, q};
  for (auto _ : state)
    benchmark::DoNotOptimize(fgeom::convex_closure(g.space, seed));
}
BENCHMARK(BM_ConvexClosureQuad);

static void BM_HexagonStructure(benchmark::State& state) {
  const auto& g = canonical_stheta();
  for (auto _ : state)
    benchmark::DoNotOptimize(stheta::verify_hexagon_structure(g));
}
BENCHMARK(BM_HexagonStructure);

static void BM_VerifyRep243(benchmark::State& state) {
  const auto rep = reps::build_rep_243(canonical_stheta());
  for (auto _ : state)
    benchmark::DoNotOptimize(reps::verify_representation(rep));
}
BENCHMARK(BM_VerifyRep243);
