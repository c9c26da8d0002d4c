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

// Data-parallel counting kernels.
//
// Every kernel works on integer ids (documents as sorted, duplicate-free id
// lists) and has two implementations: the OpenMP version in `kernels` and a
// plain serial version in `kernels::reference`. Parallel versions reduce
// thread-local partial counts with a commutative merge and return results in
// a canonical order, so they are bit-identical to the reference for any
// thread count. Tests compare the two; bench/ times them.

#ifndef TOPICSHIFT_KERNELS_H_
#define TOPICSHIFT_KERNELS_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace topicshift {
namespace kernels {

using IdList = std::vector<int32_t>;  // sorted, unique

struct PairCount {
  int32_t a;  // a < b
  int32_t b;
  int64_t count;
  bool operator==(const PairCount &) const = default;
};

struct WeightedEntry {
  int32_t id;
  double value;
  bool operator==(const WeightedEntry &) const = default;
};

using SparseRow = std::vector<WeightedEntry>;  // sorted by id

// Caps OpenMP worker threads; n <= 0 restores the runtime default.
void SetThreadCount(int n);
int ThreadCount();

// Number of documents containing each id in [0, num_ids).
std::vector<int64_t> DocumentFrequencies(const std::vector<IdList> &docs,
                                         int32_t num_ids);

// Documents containing both a and b, for every co-occurring pair, sorted by
// (a, b).
std::vector<PairCount> CooccurrenceCounts(const std::vector<IdList> &docs);

// Row t of A*A for a symmetric sparse matrix A given by its rows.
std::vector<SparseRow> SecondOrderRows(const std::vector<SparseRow> &rows);

// |set_i ∩ set_j| for all i, j (row-major, n*n).
std::vector<int64_t> PairwiseIntersections(const std::vector<IdList> &sets);

// Dot products of dense rows (row-major, n*n). Used for weighted cosine.
std::vector<double> PairwiseDots(const std::vector<std::vector<double>> &rows);

struct LinkageCounts {
  std::vector<int64_t> mentions;  // per left id
  std::vector<PairCount> weights;  // (left, right) -> events; sorted
};

// For each event: every left id in left_sets[e] gains one mention, and every
// (left, right) with right in right_sets[e] gains one unit of weight.
LinkageCounts CountLinkage(const std::vector<IdList> &left_sets,
                           const std::vector<IdList> &right_sets,
                           int32_t num_left);

namespace reference {

std::vector<int64_t> DocumentFrequencies(const std::vector<IdList> &docs,
                                         int32_t num_ids);
std::vector<PairCount> CooccurrenceCounts(const std::vector<IdList> &docs);
std::vector<SparseRow> SecondOrderRows(const std::vector<SparseRow> &rows);
std::vector<int64_t> PairwiseIntersections(const std::vector<IdList> &sets);
std::vector<double> PairwiseDots(const std::vector<std::vector<double>> &rows);
LinkageCounts CountLinkage(const std::vector<IdList> &left_sets,
                           const std::vector<IdList> &right_sets,
                           int32_t num_left);

}  // namespace reference
}  // namespace kernels
}  // namespace topicshift

#endif  // TOPICSHIFT_KERNELS_H_
