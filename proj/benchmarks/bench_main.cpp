#include <benchmark/benchmark.h>

#include "hstrata/harness.hpp"
#include "hstrata/torus.hpp"

using namespace hstrata;

namespace {

HiggsField make_tuple(uint64_t seed, int r_max) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.r_max = r_max;
  cfg.d_max = 3;
  cfg.height = 4;
  return gen_commuting_tuple(cfg, TupleMode::Diagonalizable).theta;
}

void BM_CharPolyBerkowitz(benchmark::State& state) {
  const HiggsField theta = make_tuple(7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto s = char_poly(theta);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CharPolyBerkowitz)->Arg(3)->Arg(5);

void BM_CharPolyFaddeev(benchmark::State& state) {
  const HiggsField theta = make_tuple(7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto s = char_poly_faddeev(theta);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CharPolyFaddeev)->Arg(3)->Arg(5);

void BM_TotalSplitRoundTrip(benchmark::State& state) {
  const FieldSpec f = FieldSpec::rationals();
  SplitMix64 rng(11);
  RootMultiset roots(f, 3);
  for (int k = 0; k < static_cast<int>(state.range(0)); ++k) {
    std::vector<Scalar> c;
    for (int j = 0; j < 3; ++j) c.emplace_back(f, rng.range(-9, 9));
    roots.add(LinearForm(f, std::move(c)));
  }
  const HitchinPoint s = roots.product();
  uint64_t seed = 0;
  for (auto _ : state) {
    auto res = total_split(s, SplitConfig{seed++});
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_TotalSplitRoundTrip)->Arg(3)->Arg(5);

void BM_BruteSplit(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime_field(3);
  const GradedPoly x1 = GradedPoly::variable(f, 2, 0);
  const GradedPoly x2 = GradedPoly::variable(f, 2, 1);
  const HitchinPoint s(f, 2, {GradedPoly(f, 2), -(x1 * x2)});
  for (auto _ : state) {
    auto res = brute_split(s);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_BruteSplit);

void BM_FixedLocus(benchmark::State& state) {
  IntMat a{{-1, 0}, {0, -1}};
  RatVec b{mpq_class(1, 2), mpq_class(0)};
  const AffineTorusMap g(a, b);
  for (auto _ : state) {
    auto rep = fixed_locus(g);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_FixedLocus);

void BM_GroupClosure(benchmark::State& state) {
  const FieldSpec f = FieldSpec::rationals();
  Matrix rz(f, 3, 3), rx(f, 3, 3);
  rz.at(0, 1) = -Scalar::one(f);
  rz.at(1, 0) = Scalar::one(f);
  rz.at(2, 2) = Scalar::one(f);
  rx.at(0, 0) = Scalar::one(f);
  rx.at(1, 2) = -Scalar::one(f);
  rx.at(2, 1) = Scalar::one(f);
  for (auto _ : state) {
    auto g = GroupRep::close(f, 3, {rz, rx});
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GroupClosure);

}  // namespace

BENCHMARK_MAIN();
