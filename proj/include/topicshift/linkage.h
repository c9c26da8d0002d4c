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

// Keyword to audience-term linkage through events.
//
// An event links every author keyword of the publications it mentions to
// every term in its own text. Weights and mention totals count distinct
// events, so weight(k, t) <= mentions(k) always holds.

#ifndef TOPICSHIFT_LINKAGE_H_
#define TOPICSHIFT_LINKAGE_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "topicshift/corpus.h"

namespace topicshift {

struct LinkageNetwork {
  std::vector<std::string> left;   // keywords, sorted
  std::vector<std::string> right;  // terms, sorted
  std::map<std::pair<std::string, std::string>, int64_t> edges;  // weight >= 1
  std::map<std::string, int64_t> keyword_mentions;

  int64_t Weight(const std::string &keyword, const std::string &term) const;
};

// `keywords` maps a publication DOI to its canonical keywords; `event_terms`
// holds canonical terms per event (indexed like corpus.events()). Only
// events on `platforms` count. Keywords with mentions but no linked term
// stay in `left` with no edges.
LinkageNetwork BuildLinkage(const LinkedCorpus &corpus,
                            const std::map<std::string, std::vector<std::string>> &keywords,
                            const std::vector<std::vector<std::string>> &event_terms,
                            const std::set<Platform> &platforms);

// The k_keywords most-mentioned keywords and, for each, its k_terms
// heaviest terms; ties go to the lexicographically smaller label. Returns
// the subnetwork induced by the chosen nodes. Throws kInvalidArgument when
// either k is below 1.
LinkageNetwork TopkLinked(const LinkageNetwork &network, int k_keywords,
                          int k_terms);

// weight / mentions * 100. Throws kDomain when the keyword has no mentions.
double MentionRate(const LinkageNetwork &network, const std::string &keyword,
                   const std::string &term);

}  // namespace topicshift

#endif  // TOPICSHIFT_LINKAGE_H_
