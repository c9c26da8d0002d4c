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

// Label normalization and top-N topic sets.
//
// A topic set is the N most frequent canonical labels of one group: author
// keywords (K), hashtags (H), text terms over all platforms (T_all) or a
// single platform's share of T_all.

#ifndef TOPICSHIFT_TOPICSETS_H_
#define TOPICSHIFT_TOPICSETS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "topicshift/corpus.h"

namespace topicshift {

struct TopicLabel;
using LabelIndex = std::map<std::string, TopicLabel>;  // by canonical

// Canonical form: case-folded, NFC, hyphens as spaces, single spaces, final
// token singular, then whole-label abbreviation expansion. Expansions are
// stored in canonical form, so Normalize(Normalize(x)) == Normalize(x).
class LabelNormalizer {
 public:
  // Built-in abbreviations (ai, ml, iot, ...) and plural keep-list.
  LabelNormalizer();

  // Reads "abbreviation<TAB>expansion" lines; '#' starts a comment.
  void LoadAbbreviations(const std::string &path);
  void AddAbbreviation(std::string_view abbreviation, std::string_view expansion);

  // Final tokens that are never singularized.
  void AddKeepWord(std::string_view word);

  // Throws kInvalidArgument on empty or all-whitespace input.
  std::string Normalize(std::string_view raw) const;

  // Singular form of one lowercase token.
  std::string Singularize(const std::string &token) const;

 private:
  friend std::vector<std::vector<std::string>> NormalizeDocuments(
      const std::vector<std::vector<std::string>> &,
      const LabelNormalizer &, LabelIndex *);

  std::string Basic(std::string_view raw) const;

  std::unordered_map<std::string, std::string> abbreviations_;
  std::unordered_set<std::string> keep_;
};

// Normalize() with the default LabelNormalizer.
std::string NormalizeLabel(std::string_view raw);

// A canonical label and the raw spellings that mapped to it.
struct TopicLabel {
  std::string canonical;
  std::map<std::string, int64_t> variants;  // raw form -> occurrences

  // Most frequent variant, ties lexicographic; canonical if none.
  std::string Display() const;
};

using FrequencyTable = std::map<std::string, int64_t>;

// Normalizes every label of every document. Raw spellings are recorded in
// `index` when it is non-null. Labels that normalize to nothing are dropped.
std::vector<std::vector<std::string>> NormalizeDocuments(
    const std::vector<std::vector<std::string>> &documents,
    const LabelNormalizer &normalizer, LabelIndex *index);

enum class TopicGroup { kK, kH, kTAll, kTBlog, kTNews, kTPolicy, kTWikipedia };

std::string_view GroupName(TopicGroup group);
std::optional<TopicGroup> ParseGroup(std::string_view name);

// Per-platform term group; kTwitter has none and throws kInvalidArgument.
TopicGroup PlatformGroup(Platform platform);

struct TopicSet {
  TopicGroup group = TopicGroup::kK;
  FrequencyTable members;  // canonical label -> frequency (>= 1)
  int n_selected = 100;

  size_t size() const { return members.size(); }
  bool contains(const std::string &label) const {
    return members.count(label) > 0;
  }
  std::set<std::string> labels() const;
};

// Keeps the n most frequent labels with frequency >= 1; ties at the cutoff
// go to the lexicographically smaller label. Throws kInvalidArgument when
// n < 1.
TopicSet BuildTopicSet(TopicGroup group, const FrequencyTable &frequencies,
                       int n);

// Labels of `all` that occur on one platform, with that platform's
// frequencies.
TopicSet RestrictToPlatform(const TopicSet &all, TopicGroup group,
                            const FrequencyTable &platform_frequencies);

// Labels ordered by descending frequency, then label.
std::vector<std::pair<std::string, int64_t>> RankedMembers(const TopicSet &set);

struct ShareRow {
  std::string label;
  int64_t frequency = 0;
  int64_t doc_frequency = 0;
  double share_pct = 0.0;       // of all occurrences
  double share_docs_pct = 0.0;  // of all documents
};

// One row per member in RankedMembers order. Document frequencies default
// to the member frequency when a label is missing from `doc_frequencies`.
// Values are unrounded; emitters round to 2 decimals. Throws kDomain when
// either total is not positive.
std::vector<ShareRow> ShareStatistics(const TopicSet &set,
                                      const FrequencyTable &doc_frequencies,
                                      int64_t total_occurrences,
                                      int64_t total_documents);

}  // namespace topicshift

#endif  // TOPICSHIFT_TOPICSETS_H_
