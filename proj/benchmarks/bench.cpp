// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include <benchmark/benchmark.h>

#include <memory>

#include "parsolv/parabolic.hpp"

using namespace parsolv;

namespace {

std::shared_ptr<const Realization> split_of(char series, int rank) {
  static std::map<std::pair<char, int>, std::shared_ptr<const Realization>> cache;
  auto key = std::make_pair(series, rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache
             .emplace(key, std::make_shared<const Realization>(build_realization(
                               generate_positive_roots(cartan_matrix(series, rank)),
                               RealForm::Split)))
             .first;
  return it->second;
}

void BM_positive_roots_e8(benchmark::State& state) {
  CartanMatrix cm = cartan_matrix('E', 8);
  for (auto _ : state) {
    RootSystemData rsd = generate_positive_roots(cm);
    benchmark::DoNotOptimize(rsd.positive_roots.size());
  }
}
BENCHMARK(BM_positive_roots_e8);

void BM_build_realization_b4(benchmark::State& state) {
  RootSystemData rsd = generate_positive_roots(cartan_matrix('B', 4));
  for (auto _ : state) {
    Realization r = build_realization(rsd, RealForm::Split);
    benchmark::DoNotOptimize(r.dim);
  }
}
BENCHMARK(BM_build_realization_b4)->Unit(benchmark::kMillisecond);

void BM_ricci_besse_exact(benchmark::State& state) {
  auto real = split_of('B', static_cast<int>(state.range(0)));
  auto s = attached_solvmanifold(real, make_subset(real->rank(), {})).algebra;
  for (auto _ : state) {
    RicciTensor<Rational> ric = ricci_besse(s);
    benchmark::DoNotOptimize(ric.matrix(0, 0));
  }
  state.SetLabel("dim s = " + std::to_string(s.dim));
}
BENCHMARK(BM_ricci_besse_exact)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ricci_besse_float(benchmark::State& state) {
  auto real = split_of('B', static_cast<int>(state.range(0)));
  MetricLieAlgebra<double> s =
      to_double(attached_solvmanifold(real, make_subset(real->rank(), {})).algebra);
  for (auto _ : state) {
    RicciTensor<double> ric = ricci_besse(s);
    benchmark::DoNotOptimize(ric.matrix(0, 0));
  }
}
BENCHMARK(BM_ricci_besse_float)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_full_verification_a3(benchmark::State& state) {
  auto real = split_of('A', 3);
  for (auto _ : state) {
    AttachedSolvmanifold s = attached_solvmanifold(real, make_subset(3, {0}));
    RicciTensor<Rational> ric = ricci_besse(s.algebra);
    EinsteinReport<Rational> ein = einstein_check(ric, s.algebra.gram);
    benchmark::DoNotOptimize(ein.is_einstein);
  }
}
BENCHMARK(BM_full_verification_a3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
