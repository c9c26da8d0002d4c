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

#include "topicshift/compare.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "topicshift/error.h"
#include "topicshift/kernels.h"

namespace topicshift {

namespace {

int64_t IntersectionSize(const TopicSet &a, const TopicSet &b) {
  int64_t n = 0;
  auto i = a.members.begin(), j = b.members.begin();
  while (i != a.members.end() && j != b.members.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

double BinaryCosine(int64_t common, int64_t size_a, int64_t size_b) {
  if (size_a == 0 || size_b == 0) return 0.0;
  return static_cast<double>(common) /
         std::sqrt(static_cast<double>(size_a) * static_cast<double>(size_b));
}

double DotCosine(double dot, double norm_a, double norm_b) {
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return dot / std::sqrt(norm_a * norm_b);
}

TopicType TypeOf(bool in_k, bool in_t, bool in_h) {
  if (in_k && in_t && in_h) return TopicType::kKTH;
  if (in_k && in_t) return TopicType::kKT;
  if (in_k && in_h) return TopicType::kKH;
  if (in_t && in_h) return TopicType::kTH;
  if (in_k) return TopicType::kK;
  if (in_t) return TopicType::kT;
  return TopicType::kH;
}

Direction Compare(const std::optional<int> &base, const std::optional<int> &other) {
  if (!base || !other) return Direction::kAbsent;
  if (*other < *base) return Direction::kUp;
  if (*other > *base) return Direction::kDown;
  return Direction::kUnchanged;
}

std::optional<int> Lookup(const std::map<std::string, int> &ranks,
                          const std::string &topic) {
  auto it = ranks.find(topic);
  if (it == ranks.end()) return std::nullopt;
  return it->second;
}

}  // namespace

double Cosine(const TopicSet &a, const TopicSet &b) {
  return BinaryCosine(IntersectionSize(a, b), a.size(), b.size());
}

double WeightedCosine(const TopicSet &a, const TopicSet &b) {
  double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  for (const auto &[label, f] : a.members) {
    norm_a += static_cast<double>(f) * f;
    auto it = b.members.find(label);
    if (it != b.members.end()) dot += static_cast<double>(f) * it->second;
  }
  for (const auto &[label, f] : b.members) norm_b += static_cast<double>(f) * f;
  return DotCosine(dot, norm_a, norm_b);
}

size_t SimilarityMatrix::IndexOf(std::string_view id) const {
  for (size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return i;
  }
  Fail(ErrorKind::kInvalidArgument, "no group " + std::string(id));
}

double SimilarityMatrix::Value(std::string_view a, std::string_view b) const {
  return values[IndexOf(a)][IndexOf(b)];
}

int64_t SimilarityMatrix::Intersection(std::string_view a,
                                       std::string_view b) const {
  return intersections[IndexOf(a)][IndexOf(b)];
}

SimilarityMatrix PairwiseMatrix(const std::vector<NamedTopicSet> &sets,
                                bool weighted) {
  if (sets.size() < 2) {
    Fail(ErrorKind::kInvalidArgument, "pairwise matrix needs at least two sets");
  }
  std::set<std::string> seen;
  for (const auto &[id, set] : sets) {
    if (!seen.insert(id).second) {
      Fail(ErrorKind::kInvalidArgument, "duplicate group id " + id);
    }
  }

  std::map<std::string, int32_t> vocabulary;
  for (const auto &[id, set] : sets) {
    for (const auto &[label, f] : set.members) vocabulary.emplace(label, 0);
  }
  int32_t next = 0;
  for (auto &[label, index] : vocabulary) index = next++;

  const size_t n = sets.size();
  std::vector<kernels::IdList> ids(n);
  std::vector<std::vector<double>> dense(
      weighted ? n : 0, std::vector<double>(vocabulary.size(), 0.0));
  for (size_t s = 0; s < n; ++s) {
    for (const auto &[label, f] : sets[s].second.members) {
      ids[s].push_back(vocabulary[label]);
      if (weighted) dense[s][vocabulary[label]] = static_cast<double>(f);
    }
  }
  std::vector<int64_t> common = kernels::PairwiseIntersections(ids);
  std::vector<double> dots;
  if (weighted) dots = kernels::PairwiseDots(dense);

  SimilarityMatrix matrix;
  matrix.values.assign(n, std::vector<double>(n, 0.0));
  matrix.intersections.assign(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    matrix.ids.push_back(sets[i].first);
    matrix.sizes.push_back(static_cast<int64_t>(sets[i].second.size()));
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      matrix.intersections[i][j] = common[i * n + j];
      matrix.values[i][j] =
          weighted ? DotCosine(dots[i * n + j], dots[i * n + i], dots[j * n + j])
                   : BinaryCosine(common[i * n + j], matrix.sizes[i],
                                  matrix.sizes[j]);
    }
  }
  return matrix;
}

std::string_view TopicTypeName(TopicType type) {
  switch (type) {
    case TopicType::kKTH:
      return "KTH";
    case TopicType::kK:
      return "K";
    case TopicType::kT:
      return "T";
    case TopicType::kH:
      return "H";
    case TopicType::kTH:
      return "TH";
    case TopicType::kKT:
      return "KT";
    case TopicType::kKH:
      return "KH";
  }
  return "";
}

std::map<std::string, TopicType> ClassifyTopics(const TopicSet &k,
                                                const TopicSet &t,
                                                const TopicSet &h) {
  std::map<std::string, TopicType> types;
  for (const TopicSet *set : {&k, &t, &h}) {
    for (const auto &[label, f] : set->members) {
      if (types.count(label)) continue;
      types.emplace(label, TypeOf(k.contains(label), t.contains(label),
                                  h.contains(label)));
    }
  }
  return types;
}

VennCounts VennPartition(const TopicSet &k, const TopicSet &t,
                         const TopicSet &h) {
  VennCounts counts;
  for (TopicType type : kAllTopicTypes) counts.regions[type] = 0;
  for (const auto &[label, type] : ClassifyTopics(k, t, h)) {
    ++counts.regions[type];
    ++counts.union_size;
  }
  return counts;
}

std::map<std::string, int> CompetitionRanks(const FrequencyTable &frequencies) {
  std::vector<std::pair<int64_t, std::string>> order;
  for (const auto &[label, f] : frequencies) order.emplace_back(f, label);
  std::sort(order.begin(), order.end(), [](const auto &x, const auto &y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  std::map<std::string, int> ranks;
  for (size_t i = 0; i < order.size(); ++i) {
    int rank = static_cast<int>(i) + 1;
    if (i > 0 && order[i].first == order[i - 1].first) {
      rank = ranks[order[i - 1].second];
    }
    ranks[order[i].second] = rank;
  }
  return ranks;
}

std::string_view DirectionName(Direction direction) {
  switch (direction) {
    case Direction::kUp:
      return "up";
    case Direction::kDown:
      return "down";
    case Direction::kUnchanged:
      return "unchanged";
    case Direction::kAbsent:
      return "absent";
  }
  return "";
}

std::vector<RankShift> RankingShift(const std::vector<std::string> &topics,
                                    const FrequencyTable &k_full,
                                    const FrequencyTable &t_full,
                                    const FrequencyTable &h_full) {
  const auto k_ranks = CompetitionRanks(k_full);
  const auto t_ranks = CompetitionRanks(t_full);
  const auto h_ranks = CompetitionRanks(h_full);
  std::vector<RankShift> shifts;
  for (const std::string &topic : topics) {
    RankShift shift;
    shift.topic = topic;
    shift.rank_k = Lookup(k_ranks, topic);
    shift.rank_t = Lookup(t_ranks, topic);
    shift.rank_h = Lookup(h_ranks, topic);
    shift.t_direction = Compare(shift.rank_k, shift.rank_t);
    shift.h_direction = Compare(shift.rank_k, shift.rank_h);
    shifts.push_back(std::move(shift));
  }
  return shifts;
}

std::vector<std::string> CommonTopics(const TopicSet &k, const TopicSet &t,
                                      const TopicSet &h) {
  std::vector<std::pair<std::string, int64_t>> common;
  for (const auto &[label, f] : RankedMembers(k)) {
    if (t.contains(label) && h.contains(label)) common.emplace_back(label, f);
  }
  std::vector<std::string> out;
  for (auto &[label, f] : common) out.push_back(label);
  return out;
}

}  // namespace topicshift
