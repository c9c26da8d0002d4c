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

// Reader for the topic appendix table: one row per distinct topic with its
// text-term counts per platform, keyword count and hashtag count.
//
//   rank,topic,type,term_total,blog,news,policy,wikipedia,keywords,hashtags,total
//
// Empty count cells mean zero. `type` lists the groups with a nonzero count
// using the letters K, T and H in any order ("KTH", "TK", "H").

#ifndef TOPICSHIFT_APPENDIX_H_
#define TOPICSHIFT_APPENDIX_H_

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "topicshift/corpus.h"
#include "topicshift/topicsets.h"

namespace topicshift {

struct AppendixRow {
  int rank = 0;
  std::string topic;      // as printed
  std::string canonical;  // normalized
  std::string type;
  int64_t term_total = 0;
  int64_t blog = 0;
  int64_t news = 0;
  int64_t policy = 0;
  int64_t wikipedia = 0;
  int64_t keywords = 0;
  int64_t hashtags = 0;
  int64_t total = 0;

  int64_t PlatformCount(Platform platform) const;
};

class AppendixTable {
 public:
  explicit AppendixTable(std::vector<AppendixRow> rows);

  const std::vector<AppendixRow> &rows() const { return rows_; }

  // Canonical label -> count, nonzero cells only.
  FrequencyTable Keywords() const;
  FrequencyTable Hashtags() const;
  FrequencyTable Terms() const;
  FrequencyTable PlatformTerms(Platform platform) const;

 private:
  std::vector<AppendixRow> rows_;
};

// Validates every row: integer cells, type letters matching the nonzero
// groups, term_total equal to the platform sum, total equal to the group
// sum, and canonical labels unique. Throws kSchema naming the line.
AppendixTable LoadAppendix(std::istream &in,
                           const LabelNormalizer &normalizer = LabelNormalizer());

// Throws kMissingInput when the file cannot be opened.
AppendixTable LoadAppendixFile(const std::string &path,
                               const LabelNormalizer &normalizer = LabelNormalizer());

}  // namespace topicshift

#endif  // TOPICSHIFT_APPENDIX_H_
