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

#include "topicshift/kernels.h"

#include <omp.h>

#include <algorithm>
#include <unordered_map>

namespace topicshift {
namespace kernels {

namespace {

int default_threads = -1;

uint64_t PackPair(int32_t a, int32_t b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
         static_cast<uint32_t>(b);
}

std::vector<PairCount> SortedPairs(
    const std::unordered_map<uint64_t, int64_t> &counts) {
  std::vector<PairCount> out;
  out.reserve(counts.size());
  for (const auto &[key, count] : counts) {
    out.push_back({static_cast<int32_t>(key >> 32),
                   static_cast<int32_t>(key & 0xffffffffu), count});
  }
  std::sort(out.begin(), out.end(), [](const PairCount &x, const PairCount &y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  return out;
}

int64_t IntersectionSize(const IdList &x, const IdList &y) {
  int64_t n = 0;
  auto i = x.begin(), j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

double Dot(const std::vector<double> &x, const std::vector<double> &y) {
  double sum = 0.0;
  for (size_t k = 0; k < x.size() && k < y.size(); ++k) sum += x[k] * y[k];
  return sum;
}

// Row t of A*A. Visits neighbours in id order so every caller sums the same
// terms in the same sequence.
SparseRow SecondOrderRow(const std::vector<SparseRow> &rows, size_t t,
                         std::vector<double> &dense,
                         std::vector<int32_t> &touched) {
  for (const WeightedEntry &via : rows[t]) {
    for (const WeightedEntry &to : rows[via.id]) {
      if (dense[to.id] == 0.0) touched.push_back(to.id);
      dense[to.id] += via.value * to.value;
    }
  }
  std::sort(touched.begin(), touched.end());
  SparseRow row;
  row.reserve(touched.size());
  for (int32_t id : touched) {
    if (dense[id] != 0.0) row.push_back({id, dense[id]});
    dense[id] = 0.0;
  }
  touched.clear();
  return row;
}

}  // namespace

void SetThreadCount(int n) {
  if (default_threads < 0) default_threads = omp_get_max_threads();
  omp_set_num_threads(n > 0 ? n : default_threads);
}

int ThreadCount() { return omp_get_max_threads(); }

std::vector<int64_t> DocumentFrequencies(const std::vector<IdList> &docs,
                                         int32_t num_ids) {
  std::vector<int64_t> total(num_ids, 0);
  const int64_t n = static_cast<int64_t>(docs.size());
#pragma omp parallel
  {
    std::vector<int64_t> local(num_ids, 0);
#pragma omp for schedule(static) nowait
    for (int64_t d = 0; d < n; ++d) {
      for (int32_t id : docs[d]) ++local[id];
    }
#pragma omp critical
    for (int32_t id = 0; id < num_ids; ++id) total[id] += local[id];
  }
  return total;
}

std::vector<PairCount> CooccurrenceCounts(const std::vector<IdList> &docs) {
  std::unordered_map<uint64_t, int64_t> total;
  const int64_t n = static_cast<int64_t>(docs.size());
#pragma omp parallel
  {
    std::unordered_map<uint64_t, int64_t> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (int64_t d = 0; d < n; ++d) {
      const IdList &doc = docs[d];
      for (size_t i = 0; i < doc.size(); ++i) {
        for (size_t j = i + 1; j < doc.size(); ++j) {
          ++local[PackPair(doc[i], doc[j])];
        }
      }
    }
#pragma omp critical
    for (const auto &[key, count] : local) total[key] += count;
  }
  return SortedPairs(total);
}

std::vector<SparseRow> SecondOrderRows(const std::vector<SparseRow> &rows) {
  std::vector<SparseRow> out(rows.size());
  const int64_t n = static_cast<int64_t>(rows.size());
#pragma omp parallel
  {
    std::vector<double> dense(rows.size(), 0.0);
    std::vector<int32_t> touched;
#pragma omp for schedule(dynamic, 16)
    for (int64_t t = 0; t < n; ++t) {
      out[t] = SecondOrderRow(rows, t, dense, touched);
    }
  }
  return out;
}

std::vector<int64_t> PairwiseIntersections(const std::vector<IdList> &sets) {
  const int64_t n = static_cast<int64_t>(sets.size());
  std::vector<int64_t> out(n * n, 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int64_t i = 0; i < n; ++i) {
    for (int64_t j = i; j < n; ++j) {
      int64_t v = IntersectionSize(sets[i], sets[j]);
      out[i * n + j] = v;
      out[j * n + i] = v;
    }
  }
  return out;
}

std::vector<double> PairwiseDots(const std::vector<std::vector<double>> &rows) {
  const int64_t n = static_cast<int64_t>(rows.size());
  std::vector<double> out(n * n, 0.0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int64_t i = 0; i < n; ++i) {
    for (int64_t j = i; j < n; ++j) {
      double v = Dot(rows[i], rows[j]);
      out[i * n + j] = v;
      out[j * n + i] = v;
    }
  }
  return out;
}

LinkageCounts CountLinkage(const std::vector<IdList> &left_sets,
                           const std::vector<IdList> &right_sets,
                           int32_t num_left) {
  LinkageCounts result;
  result.mentions.assign(num_left, 0);
  std::unordered_map<uint64_t, int64_t> total;
  const int64_t n = static_cast<int64_t>(left_sets.size());
#pragma omp parallel
  {
    std::vector<int64_t> mentions(num_left, 0);
    std::unordered_map<uint64_t, int64_t> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (int64_t e = 0; e < n; ++e) {
      for (int32_t left : left_sets[e]) {
        ++mentions[left];
        for (int32_t right : right_sets[e]) ++local[PackPair(left, right)];
      }
    }
#pragma omp critical
    {
      for (int32_t k = 0; k < num_left; ++k) result.mentions[k] += mentions[k];
      for (const auto &[key, count] : local) total[key] += count;
    }
  }
  result.weights = SortedPairs(total);
  return result;
}

namespace reference {

std::vector<int64_t> DocumentFrequencies(const std::vector<IdList> &docs,
                                         int32_t num_ids) {
  std::vector<int64_t> total(num_ids, 0);
  for (const IdList &doc : docs) {
    for (int32_t id : doc) ++total[id];
  }
  return total;
}

std::vector<PairCount> CooccurrenceCounts(const std::vector<IdList> &docs) {
  std::unordered_map<uint64_t, int64_t> total;
  for (const IdList &doc : docs) {
    for (size_t i = 0; i < doc.size(); ++i) {
      for (size_t j = i + 1; j < doc.size(); ++j) {
        ++total[PackPair(doc[i], doc[j])];
      }
    }
  }
  return SortedPairs(total);
}

std::vector<SparseRow> SecondOrderRows(const std::vector<SparseRow> &rows) {
  std::vector<SparseRow> out;
  std::vector<double> dense(rows.size(), 0.0);
  std::vector<int32_t> touched;
  for (size_t t = 0; t < rows.size(); ++t) {
    out.push_back(SecondOrderRow(rows, t, dense, touched));
  }
  return out;
}

std::vector<int64_t> PairwiseIntersections(const std::vector<IdList> &sets) {
  const size_t n = sets.size();
  std::vector<int64_t> out(n * n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) out[i * n + j] = IntersectionSize(sets[i], sets[j]);
  }
  return out;
}

std::vector<double> PairwiseDots(const std::vector<std::vector<double>> &rows) {
  const size_t n = rows.size();
  std::vector<double> out(n * n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) out[i * n + j] = Dot(rows[i], rows[j]);
  }
  return out;
}

LinkageCounts CountLinkage(const std::vector<IdList> &left_sets,
                           const std::vector<IdList> &right_sets,
                           int32_t num_left) {
  LinkageCounts result;
  result.mentions.assign(num_left, 0);
  std::unordered_map<uint64_t, int64_t> total;
  for (size_t e = 0; e < left_sets.size(); ++e) {
    for (int32_t left : left_sets[e]) {
      ++result.mentions[left];
      for (int32_t right : right_sets[e]) ++total[PackPair(left, right)];
    }
  }
  result.weights = SortedPairs(total);
  return result;
}

}  // namespace reference
}  // namespace kernels
}  // namespace topicshift
