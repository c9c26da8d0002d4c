// Copyright 2026 The Topicshift Authors.
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

// Serial reference vs OpenMP kernels on synthetic documents.
//
//   topicshift_bench --benchmark_filter=Cooccurrence

#include <algorithm>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "topicshift/kernels.h"

namespace k = topicshift::kernels;

namespace {

// Zipf-like term ids so a few terms co-occur often.
std::vector<k::IdList> Documents(int n, int vocabulary, int length) {
  std::mt19937_64 rng(42);
  std::vector<double> weights(vocabulary);
  for (int i = 0; i < vocabulary; ++i) weights[i] = 1.0 / (i + 1);
  std::discrete_distribution<int32_t> term(weights.begin(), weights.end());
  std::vector<k::IdList> docs(n);
  for (auto &doc : docs) {
    for (int j = 0; j < length; ++j) doc.push_back(term(rng));
    std::sort(doc.begin(), doc.end());
    doc.erase(std::unique(doc.begin(), doc.end()), doc.end());
  }
  return docs;
}

std::vector<k::SparseRow> Rows(const std::vector<k::IdList> &docs) {
  std::vector<k::SparseRow> rows;
  for (const auto &doc : docs) {
    k::SparseRow row;
    for (int32_t id : doc) row.push_back({id, 1.0});
    rows.push_back(row);
  }
  return rows;
}

void BM_CooccurrenceReference(benchmark::State &state) {
  auto docs = Documents(static_cast<int>(state.range(0)), 2000, 12);
  for (auto _ : state) benchmark::DoNotOptimize(k::reference::CooccurrenceCounts(docs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CooccurrenceParallel(benchmark::State &state) {
  auto docs = Documents(static_cast<int>(state.range(0)), 2000, 12);
  for (auto _ : state) benchmark::DoNotOptimize(k::CooccurrenceCounts(docs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SecondOrderReference(benchmark::State &state) {
  auto rows = Rows(Documents(static_cast<int>(state.range(0)), 500, 20));
  for (auto _ : state) benchmark::DoNotOptimize(k::reference::SecondOrderRows(rows));
}

void BM_SecondOrderParallel(benchmark::State &state) {
  auto rows = Rows(Documents(static_cast<int>(state.range(0)), 500, 20));
  for (auto _ : state) benchmark::DoNotOptimize(k::SecondOrderRows(rows));
}

void BM_IntersectionsReference(benchmark::State &state) {
  auto sets = Documents(static_cast<int>(state.range(0)), 5000, 100);
  for (auto _ : state) benchmark::DoNotOptimize(k::reference::PairwiseIntersections(sets));
}

void BM_IntersectionsParallel(benchmark::State &state) {
  auto sets = Documents(static_cast<int>(state.range(0)), 5000, 100);
  for (auto _ : state) benchmark::DoNotOptimize(k::PairwiseIntersections(sets));
}

}  // namespace

BENCHMARK(BM_CooccurrenceReference)->Arg(1000)->Arg(10000);
BENCHMARK(BM_CooccurrenceParallel)->Arg(1000)->Arg(10000);
BENCHMARK(BM_SecondOrderReference)->Arg(500);
BENCHMARK(BM_SecondOrderParallel)->Arg(500);
BENCHMARK(BM_IntersectionsReference)->Arg(7)->Arg(200);
BENCHMARK(BM_IntersectionsParallel)->Arg(7)->Arg(200);

BENCHMARK_MAIN();
