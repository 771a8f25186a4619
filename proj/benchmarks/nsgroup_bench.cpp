// Copyright 2026 The nsgroup Authors
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

#include "nsgroup/nsgroup.hpp"

namespace nsgroup {
namespace {

void BM_NormalSubgroupsA5xA5(benchmark::State& state) {
  const FiniteGroup a5 = alternating(5);
  const ProductGroup p = direct_product(a5, a5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_normal_subgroups(p.group));
  }
}
BENCHMARK(BM_NormalSubgroupsA5xA5)->Unit(benchmark::kMillisecond);

void BM_NormalSubgroupsSymmetric(benchmark::State& state) {
  const FiniteGroup g = symmetric(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_normal_subgroups(g));
  }
}
BENCHMARK(BM_NormalSubgroupsSymmetric)->DenseRange(3, 5);

void BM_FindIsomorphismS4ModV(benchmark::State& state) {
  const FiniteGroup s4 = symmetric(4);
  const FiniteGroup q = quotient(s4, all_normal_subgroups(s4)[1]).group;
  const FiniteGroup s3 = symmetric(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_isomorphism(q, s3));
  }
}
BENCHMARK(BM_FindIsomorphismS4ModV);

void BM_FindIsomorphismProducts(benchmark::State& state) {
  const FiniteGroup a = direct_product(symmetric(4), cyclic(3)).group;
  const FiniteGroup b = direct_product(cyclic(3), symmetric(4)).group;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_isomorphism(a, b));
  }
}
BENCHMARK(BM_FindIsomorphismProducts)->Unit(benchmark::kMicrosecond);

void BM_ClassifyS4xS4(benchmark::State& state) {
  const FiniteGroup s4 = symmetric(4);
  const ProductGroup p = direct_product(s4, s4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_normal_subgroups(p));
  }
}
BENCHMARK(BM_ClassifyS4xS4)->Unit(benchmark::kMillisecond);

void BM_NsCriteria(benchmark::State& state) {
  const FiniteGroup d6 = dihedral(6);
  const FiniteGroup s4 = symmetric(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(satisfies_ns_gcd(d6, s4));
    benchmark::DoNotOptimize(satisfies_ns_direct(d6, s4));
  }
}
BENCHMARK(BM_NsCriteria)->Unit(benchmark::kMicrosecond);

void BM_CompositionFactorsS4xA4(benchmark::State& state) {
  const FiniteGroup g = direct_product(symmetric(4), alternating(4)).group;
  for (auto _ : state) {
    benchmark::DoNotOptimize(composition_factors(g));
  }
}
BENCHMARK(BM_CompositionFactorsS4xA4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace nsgroup

BENCHMARK_MAIN();
