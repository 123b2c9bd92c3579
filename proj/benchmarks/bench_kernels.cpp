#include "gwpairs/algebra/series.hpp"
#include "gwpairs/assembly/assembly.hpp"
#include "gwpairs/cap/cap_series.hpp"
#include "gwpairs/symfunc/characters.hpp"
#include "gwpairs/symfunc/schur.hpp"

#include <benchmark/benchmark.h>

using namespace gwpairs;

namespace {

void BM_CharsumRhs(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(charsum_rhs(Partition{2}, e));
}
BENCHMARK(BM_CharsumRhs)->DenseRange(1, 5);

void BM_ExpandQToU(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const QRatFunc q = QRatFunc::q();
  const QRatFunc f = (QRatFunc(1) - q) / (QRatFunc(1) + q);
  for (auto _ : state) benchmark::DoNotOptimize(expand_q_to_u(f, order));
}
BENCHMARK(BM_ExpandQToU)->Arg(6)->Arg(12)->Arg(20);

void BM_CapTubeSum(benchmark::State& state) {
  const Partition gamma = Partition::ones(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cap_tube_sum_pt(gamma));
}
BENCHMARK(BM_CapTubeSum)->DenseRange(2, 6, 2);

void BM_SkewPlusMatrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skew_plus_matrix(d, 3));
}
BENCHMARK(BM_SkewPlusMatrix)->DenseRange(1, 3);

void BM_EnumerateMarkings(benchmark::State& state) {
  const SymRatFunc s1 = SymRatFunc::s1();
  const SymRatFunc s2 = SymRatFunc::s2();
  const SymRatFunc s3 = SymRatFunc::s3();
  ToricGraph g;
  for (int v = 0; v < 3; ++v) g.add_vertex("v" + std::to_string(v), {s1, s2, s3});
  g.add_edge({0, 0}, {1, 0}, "C");
  g.add_edge({1, 1}, {2, 1}, "C");
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_markings(g, {{"C", d}}));
}
BENCHMARK(BM_EnumerateMarkings)->DenseRange(2, 6, 2);

}  // namespace
BENCHMARK_MAIN();
