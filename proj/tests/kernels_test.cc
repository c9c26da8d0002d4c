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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "topicshift/kernels.h"

namespace k = topicshift::kernels;

namespace {

std::vector<k::IdList> RandomLists(std::mt19937 &rng, int n, int ids, int max_len) {
  std::vector<k::IdList> lists(n);
  for (auto &l : lists) {
    for (int j = rng() % (max_len + 1); j > 0; --j) l.push_back(rng() % ids);
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return lists;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("parallel kernels equal the serial reference for any thread count") {
  std::mt19937 rng(1);
  auto docs = RandomLists(rng, 3000, 200, 12);
  auto right = RandomLists(rng, 3000, 50, 5);
  std::vector<k::SparseRow> rows(200);
  for (const auto &pair : k::reference::CooccurrenceCounts(docs)) {
    rows[pair.a].push_back({pair.b, static_cast<double>(pair.count)});
    rows[pair.b].push_back({pair.a, static_cast<double>(pair.count)});
  }
  for (auto &r : rows) {
    std::sort(r.begin(), r.end(), [](auto &x, auto &y) { return x.id < y.id; });
  }
  std::vector<std::vector<double>> dense(12, std::vector<double>(40));
  for (auto &r : dense) {
    for (double &v : r) v = rng() % 7;
  }
  for (int threads : {1, 2, 4, 7}) {
    k::SetThreadCount(threads);
    CHECK(k::DocumentFrequencies(docs, 200) == k::reference::DocumentFrequencies(docs, 200));
    CHECK(k::CooccurrenceCounts(docs) == k::reference::CooccurrenceCounts(docs));
    CHECK(k::SecondOrderRows(rows) == k::reference::SecondOrderRows(rows));
    CHECK(k::PairwiseIntersections(docs) == k::reference::PairwiseIntersections(docs));
    CHECK(k::PairwiseDots(dense) == k::reference::PairwiseDots(dense));
    auto a = k::CountLinkage(docs, right, 200);
    auto b = k::reference::CountLinkage(docs, right, 200);
    CHECK(a.mentions == b.mentions);
    CHECK(a.weights == b.weights);
  }
  k::SetThreadCount(0);
  CHECK(k::ThreadCount() >= 1);
}

TEST_CASE("reference kernels on a tiny case") {
  std::vector<k::IdList> docs = {{0, 1}, {0, 1, 2}, {2}};
  CHECK(k::reference::DocumentFrequencies(docs, 4) == std::vector<int64_t>{2, 2, 2, 0});
  auto pairs = k::reference::CooccurrenceCounts(docs);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == k::PairCount{0, 1, 2});
  CHECK(pairs[1] == k::PairCount{0, 2, 1});
  auto inter = k::reference::PairwiseIntersections(docs);
  CHECK(inter == std::vector<int64_t>{2, 2, 0, 2, 3, 1, 0, 1, 1});
  // A = [[0,2],[2,0]]; A*A = diag(4, 4).
  std::vector<k::SparseRow> rows = {{{1, 2.0}}, {{0, 2.0}}};
  auto sq = k::reference::SecondOrderRows(rows);
  CHECK(sq[0] == k::SparseRow{{0, 4.0}});
  CHECK(sq[1] == k::SparseRow{{1, 4.0}});
}

}  // TEST_SUITE
