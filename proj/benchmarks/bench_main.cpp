// Copyright 2026 The svineq Authors
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

#include "svineq/campaign.hpp"
#include "svineq/ensemble.hpp"
#include "svineq/spectra.hpp"

using namespace svineq;

static void BM_SingularValues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Ensemble e{EnsembleKind::GinibreComplex, n, 1};
  const ComplexMatrix x = sample(e, 0);
  for (auto _ : state) benchmark::DoNotOptimize(singular_values(x));
}
BENCHMARK(BM_SingularValues)->Arg(4)->Arg(16)->Arg(64);

static void BM_EnumeratePairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int m = 1; m <= n; ++m)
      benchmark::DoNotOptimize(enumerate_tf_pairs(n, m));
}
BENCHMARK(BM_EnumeratePairs)->Arg(4)->Arg(6);

static void BM_TraceTheorem3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Ensemble e{EnsembleKind::GinibreComplex, n, 2};
  const ComplexMatrix a = sample(e, 0), b = sample(e, 1);
  std::vector<int> idx;
  for (int k = 1; k <= n; ++k) idx.push_back(k);
  const IndexPartition p(IndexSeq(n, idx), 1,
                         std::vector<PartFlag>(static_cast<size_t>(n),
                                               PartFlag::C));
  for (auto _ : state) benchmark::DoNotOptimize(trace_theorem3(a, b, p));
}
BENCHMARK(BM_TraceTheorem3)->Arg(3)->Arg(6)->Arg(12);

static void BM_ExhaustiveOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Ensemble e{EnsembleKind::GinibreComplex, n, 3};
  std::vector<std::pair<ComplexMatrix, ComplexMatrix>> one;
  one.emplace_back(sample(e, 0), sample(e, 1));
  const std::vector<ConcaveFn> fam = {ConcaveFn::hook(1.0)};
  for (auto _ : state)
    benchmark::DoNotOptimize(exhaustive_oracle(n, one, fam));
}
BENCHMARK(BM_ExhaustiveOracle)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
