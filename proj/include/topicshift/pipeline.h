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

// Batch pipeline behind the command-line tool.
//
// Commands and the files they write under the output directory:
//
//   ingest   coverage.json, coverage.csv
//   extract  terms.csv, hashtags.csv
//   topics   topic_sets.csv
//   compare  similarity.csv, similarity.json, venn.json,
//            classification.csv, rank_shifts.csv, rank_shifts.json
//   map      graph_{keywords,terms}.json, edges_{keywords,terms}.csv,
//            term_map_{keywords,terms}.svg
//   linkage  linkage_{terms,hashtags}.json, linkage_{terms,hashtags}.dot
//   report   report.json, term_map.svg, wordcloud.json
//   all      everything above
//
// topics and compare also run from the appendix fixture alone; every other
// command needs the publication and event files.

#ifndef TOPICSHIFT_PIPELINE_H_
#define TOPICSHIFT_PIPELINE_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "topicshift/corpus.h"
#include "topicshift/exporters.h"
#include "topicshift/netmap.h"

namespace topicshift {

struct PipelineConfig {
  std::string publications;  // JSON Lines
  std::string events;        // JSON Lines
  std::string fixture;       // appendix CSV
  std::vector<Platform> platforms{kAllPlatforms.begin(), kAllPlatforms.end()};
  std::string language = "en";  // empty disables the filter
  int top_n = 100;
  double relevance_fraction = 0.6;
  int64_t min_occurrences = 2;           // event text terms
  int64_t min_occurrences_keywords = 1;  // author keywords
  ClusterParams cluster;
  int layout_iterations = 5000;
  int linkage_keywords = 5;
  int linkage_terms = 5;
  bool weighted_cosine = false;
  std::string tagger_lexicon;  // empty: built-in lexicon only
  std::string noun_stoplist;
  std::string sentence_abbreviations;
  std::string label_abbreviations;
  std::string output = "topicshift_out";
  int threads = 0;  // 0: runtime default
};

// Default config with the lexicon paths of the bundled data directory.
PipelineConfig DefaultConfig();

// Overrides fields present in `json` (keys as in ConfigToJson). Throws
// kSchema for unknown keys or mistyped values.
void ApplyConfigJson(const Json &json, PipelineConfig *config);
Json ConfigToJson(const PipelineConfig &config);

// Reads a JSON config file into `config`. Throws kMissingInput / kSchema.
void ApplyConfigFile(const std::string &path, PipelineConfig *config);

const std::vector<std::string> &Commands();

// Range checks (kInvalidArgument) and input availability (kMissingInput)
// for `command`.
void ValidateConfig(const PipelineConfig &config, const std::string &command);

// Validates, runs and writes the command's files. Returns the written paths
// relative to the output directory, in write order. Progress and record
// warnings go to `log`.
std::vector<std::string> RunCommand(const std::string &command,
                                    const PipelineConfig &config,
                                    std::ostream &log);

// "BigData" -> "Big Data", "AIEthics" -> "AI Ethics", "big_data" ->
// "big data". Acronyms and digits stay attached ("IoT", "COVID19").
std::string SplitHashtagWords(const std::string &tag);

}  // namespace topicshift

#endif  // TOPICSHIFT_PIPELINE_H_
