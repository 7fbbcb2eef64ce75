// Copyright 2026 The fanocalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "fanocalc/catalog.hpp"
#include "fanocalc/groups/verdict.hpp"
#include "fanocalc/report.hpp"
#include "fanocalc/scenario.hpp"

namespace {

using fanocalc::Rational;

const fanocalc::catalog::Catalog& shipped() {
  static const fanocalc::catalog::Catalog cat = fanocalc::catalog::load_catalog(FANOCALC_BENCH_CATALOG);
  return cat;
}

void BM_LoadCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fanocalc::catalog::load_catalog(FANOCALC_BENCH_CATALOG));
}
BENCHMARK(BM_LoadCatalog);

void BM_IntegratePoly(benchmark::State& state) {
  fanocalc::Poly1 p = fanocalc::Poly1{3, -1}.pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fanocalc::integrate_poly(p, 0, fanocalc::make_rational(7, 3)));
}
BENCHMARK(BM_IntegratePoly)->RangeMultiplier(2)->Range(2, 64);

void BM_CyclotomicProduct(benchmark::State& state) {
  fanocalc::Cyclotomic a = fanocalc::Cyclotomic::zeta(12) + fanocalc::Cyclotomic(fanocalc::make_rational(3, 7));
  fanocalc::Cyclotomic b = fanocalc::Cyclotomic::zeta(12, 5) - 2;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicProduct);

void BM_Zariski(benchmark::State& state) {
  const auto& lat = shipped().payload<fanocalc::surface::SurfaceLattice>("lat-F2");
  fanocalc::surface::SurfClass c({Rational(7), Rational(5)});
  for (auto _ : state) benchmark::DoNotOptimize(fanocalc::surface::zariski(lat, c));
}
BENCHMARK(BM_Zariski);

void BM_SInvariant(benchmark::State& state) {
  const auto& fam = shipped().payload<fanocalc::catalog::FamilyPayload>("fam-2.16/S");
  const auto& model = shipped().payload<fanocalc::catalog::ModelPayload>(fam.model).model;
  for (auto _ : state) benchmark::DoNotOptimize(fanocalc::threefold::s_invariant(model, fam.spec));
}
BENCHMARK(BM_SInvariant);

void BM_FlagEstimate(benchmark::State& state) {
  const auto& f = shipped().payload<fanocalc::catalog::FlagPayload>("fam-2.16/flag-P1xP1");
  const auto& model = shipped().payload<fanocalc::catalog::ModelPayload>(f.model).model;
  auto data = fanocalc::catalog::restriction_data(shipped(), f);
  for (auto _ : state) benchmark::DoNotOptimize(fanocalc::flags::s_w_flag(model, data, f.flag));
}
BENCHMARK(BM_FlagEstimate);

void BM_FixedLocus(benchmark::State& state) {
  const auto& ex = shipped().payload<fanocalc::catalog::GroupPayload>("ex-3.13").example;
  for (auto _ : state) benchmark::DoNotOptimize(fanocalc::groups::fixed_locus(ex.action));
}
BENCHMARK(BM_FixedLocus);

void BM_ConditionA(benchmark::State& state) {
  const auto& ex = shipped().payload<fanocalc::catalog::GroupPayload>("ex-2.24").example;
  for (auto _ : state) benchmark::DoNotOptimize(fanocalc::groups::condition_a_verdict(ex));
}
BENCHMARK(BM_ConditionA);

void BM_RunAll(benchmark::State& state) {
  fanocalc::catalog::RunOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fanocalc::catalog::machine_report(fanocalc::catalog::run_all(shipped(), opts)));
}
BENCHMARK(BM_RunAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
