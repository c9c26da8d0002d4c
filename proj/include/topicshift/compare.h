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

// Cross-group comparison of topic sets: cosine similarity, the three-set
// Venn partition, per-topic provenance types and rank shifts of the topics
// shared by all three groups.

#ifndef TOPICSHIFT_COMPARE_H_
#define TOPICSHIFT_COMPARE_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topicshift/topicsets.h"

namespace topicshift {

// |a ∩ b| / sqrt(|a| |b|) over membership indicators; 0 if either is empty.
double Cosine(const TopicSet &a, const TopicSet &b);

// Cosine of the frequency vectors. Not used by default.
double WeightedCosine(const TopicSet &a, const TopicSet &b);

struct SimilarityMatrix {
  std::vector<std::string> ids;
  std::vector<int64_t> sizes;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<int64_t>> intersections;

  size_t IndexOf(std::string_view id) const;  // throws kInvalidArgument
  double Value(std::string_view a, std::string_view b) const;
  int64_t Intersection(std::string_view a, std::string_view b) const;
};

using NamedTopicSet = std::pair<std::string, TopicSet>;

// All pairs at once. Throws kInvalidArgument for fewer than two sets or a
// repeated id.
SimilarityMatrix PairwiseMatrix(const std::vector<NamedTopicSet> &sets,
                                bool weighted = false);

enum class TopicType { kKTH, kK, kT, kH, kTH, kKT, kKH };

inline constexpr std::array<TopicType, 7> kAllTopicTypes = {
    TopicType::kKTH, TopicType::kK,  TopicType::kT,  TopicType::kH,
    TopicType::kTH,  TopicType::kKT, TopicType::kKH};

std::string_view TopicTypeName(TopicType type);

struct VennCounts {
  std::map<TopicType, int64_t> regions;  // all seven, zeros included
  int64_t union_size = 0;
};

VennCounts VennPartition(const TopicSet &k, const TopicSet &t, const TopicSet &h);

// Type of every label in k ∪ t ∪ h.
std::map<std::string, TopicType> ClassifyTopics(const TopicSet &k,
                                                const TopicSet &t,
                                                const TopicSet &h);

// Rank 1 is the most frequent; equal frequencies share the smallest rank
// and the next distinct frequency skips ahead (1, 2, 2, 4).
std::map<std::string, int> CompetitionRanks(const FrequencyTable &frequencies);

enum class Direction { kUp, kDown, kUnchanged, kAbsent };

std::string_view DirectionName(Direction direction);

struct RankShift {
  std::string topic;
  std::optional<int> rank_k;
  std::optional<int> rank_t;
  std::optional<int> rank_h;
  Direction t_direction = Direction::kAbsent;  // vs rank_k
  Direction h_direction = Direction::kAbsent;
};

// Ranks come from the full frequency tables, not the top-N sets. A smaller
// rank than in K is "up".
std::vector<RankShift> RankingShift(const std::vector<std::string> &topics,
                                    const FrequencyTable &k_full,
                                    const FrequencyTable &t_full,
                                    const FrequencyTable &h_full);

// Labels of type KTH ordered by K frequency (descending), then label.
std::vector<std::string> CommonTopics(const TopicSet &k, const TopicSet &t,
                                      const TopicSet &h);

}  // namespace topicshift

#endif  // TOPICSHIFT_COMPARE_H_
