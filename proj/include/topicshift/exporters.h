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

// Serialization of every module's results.
//
// Rounding is applied here and only here: shares use 2 decimals,
// similarities 4, strengths and coordinates 6. Key order and row order are
// fixed so identical inputs give identical bytes.

#ifndef TOPICSHIFT_EXPORTERS_H_
#define TOPICSHIFT_EXPORTERS_H_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "topicshift/compare.h"
#include "topicshift/corpus.h"
#include "topicshift/linkage.h"
#include "topicshift/netmap.h"
#include "topicshift/termext.h"
#include "topicshift/topicsets.h"

namespace topicshift {

using Json = nlohmann::ordered_json;

// Canonical label -> text shown to readers.
using DisplayFn = std::function<std::string(const std::string &)>;

Json CoverageJson(const CoverageReport &report);
std::string CoverageCsv(const CoverageReport &report);

struct GroupShares {
  TopicGroup group;
  std::vector<ShareRow> rows;
};

// Columns: group, canonical, frequency, share_pct, share_docs_pct.
std::string TopicSetCsv(const std::vector<GroupShares> &groups);

// Group x group grid of 4-decimal values, first column "group".
std::string SimilarityCsv(const SimilarityMatrix &matrix);
Json SimilarityJson(const SimilarityMatrix &matrix);

Json VennJson(const VennCounts &counts);
std::string ClassificationCsv(const std::map<std::string, TopicType> &types);

Json RankShiftJson(const std::vector<RankShift> &shifts);
std::string RankShiftCsv(const std::vector<RankShift> &shifts);

std::string CandidateTermsCsv(const std::vector<CandidateTerm> &terms);
std::string HashtagsCsv(const std::vector<Hashtag> &hashtags);

// `overlay` may be empty; otherwise it has one entry per node, in node order.
Json GraphJson(const TermGraph &graph, const std::vector<std::string> &sources,
               const std::vector<OverlayScore> &overlay, const DisplayFn &display);
std::string EdgeListCsv(const TermGraph &graph);

Json LinkageJson(const LinkageNetwork &network);
std::string LinkageDot(const LinkageNetwork &network, const std::string &name);

// Word-cloud weights: [{"label", "canonical", "weight"}] by descending weight.
Json WordCloudJson(const TopicSet &set, const DisplayFn &display);

// Static term map: 800x800 canvas, circle area proportional to occurrences
// (radius 4..28 px by sqrt), fill from a fixed 12-color palette by cluster
// id (gray past 12), edges as thin gray lines, labels centered below.
std::string TermMapSvg(const TermGraph &graph, const DisplayFn &display);

// Serializes with two-space indentation and a final newline.
std::string Dump(const Json &json);

}  // namespace topicshift

#endif  // TOPICSHIFT_EXPORTERS_H_
