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

#include "topicshift/linkage.h"

#include <algorithm>

#include "topicshift/error.h"
#include "topicshift/format.h"
#include "topicshift/kernels.h"

namespace topicshift {

namespace {

std::map<std::string, int32_t> Index(const std::set<std::string> &labels) {
  std::map<std::string, int32_t> ids;
  for (const std::string &label : labels) {
    ids.emplace(label, static_cast<int32_t>(ids.size()));
  }
  return ids;
}

kernels::IdList ToIds(const std::set<std::string> &labels,
                      const std::map<std::string, int32_t> &ids) {
  kernels::IdList out;
  for (const std::string &label : labels) out.push_back(ids.at(label));
  return out;  // sorted because both orders are lexicographic
}

// Descending count, then label.
template <typename Map>
std::vector<std::string> TopByCount(const Map &counts, int k) {
  std::vector<std::pair<std::string, int64_t>> order(counts.begin(), counts.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const auto &x, const auto &y) { return x.second > y.second; });
  std::vector<std::string> out;
  for (const auto &[label, count] : order) {
    if (static_cast<int>(out.size()) == k) break;
    out.push_back(label);
  }
  return out;
}

}  // namespace

int64_t LinkageNetwork::Weight(const std::string &keyword,
                               const std::string &term) const {
  auto it = edges.find({keyword, term});
  return it == edges.end() ? 0 : it->second;
}

LinkageNetwork BuildLinkage(
    const LinkedCorpus &corpus,
    const std::map<std::string, std::vector<std::string>> &keywords,
    const std::vector<std::vector<std::string>> &event_terms,
    const std::set<Platform> &platforms) {
  const auto &events = corpus.events();
  if (event_terms.size() != events.size()) {
    Fail(ErrorKind::kInvalidArgument, "event_terms must match the event list");
  }
  std::vector<std::set<std::string>> left_sets, right_sets;
  std::set<std::string> all_left, all_right;
  for (size_t e = 0; e < events.size(); ++e) {
    if (!platforms.count(events[e].platform)) continue;
    std::set<std::string> left;
    for (const std::string &doi : corpus.KnownDois(e)) {
      auto it = keywords.find(doi);
      if (it == keywords.end()) continue;
      left.insert(it->second.begin(), it->second.end());
    }
    if (left.empty()) continue;
    std::set<std::string> right(event_terms[e].begin(), event_terms[e].end());
    all_left.insert(left.begin(), left.end());
    all_right.insert(right.begin(), right.end());
    left_sets.push_back(std::move(left));
    right_sets.push_back(std::move(right));
  }

  const auto left_ids = Index(all_left);
  const auto right_ids = Index(all_right);
  std::vector<kernels::IdList> left_lists, right_lists;
  for (size_t e = 0; e < left_sets.size(); ++e) {
    left_lists.push_back(ToIds(left_sets[e], left_ids));
    right_lists.push_back(ToIds(right_sets[e], right_ids));
  }
  kernels::LinkageCounts counts = kernels::CountLinkage(
      left_lists, right_lists, static_cast<int32_t>(all_left.size()));

  LinkageNetwork network;
  network.left.assign(all_left.begin(), all_left.end());
  network.right.assign(all_right.begin(), all_right.end());
  for (size_t k = 0; k < network.left.size(); ++k) {
    network.keyword_mentions[network.left[k]] = counts.mentions[k];
  }
  for (const kernels::PairCount &pair : counts.weights) {
    network.edges[{network.left[pair.a], network.right[pair.b]}] = pair.count;
  }
  return network;
}

LinkageNetwork TopkLinked(const LinkageNetwork &network, int k_keywords,
                          int k_terms) {
  if (k_keywords < 1 || k_terms < 1) {
    Fail(ErrorKind::kInvalidArgument, "top-k sizes must be >= 1");
  }
  std::vector<std::string> keywords = TopByCount(network.keyword_mentions, k_keywords);
  std::set<std::string> left(keywords.begin(), keywords.end());
  std::set<std::string> right;
  for (const std::string &keyword : keywords) {
    std::map<std::string, int64_t> weights;
    for (const auto &[pair, weight] : network.edges) {
      if (pair.first == keyword) weights.emplace(pair.second, weight);
    }
    for (const std::string &term : TopByCount(weights, k_terms)) right.insert(term);
  }

  LinkageNetwork sub;
  sub.left.assign(left.begin(), left.end());
  sub.right.assign(right.begin(), right.end());
  for (const std::string &keyword : sub.left) {
    sub.keyword_mentions[keyword] = network.keyword_mentions.at(keyword);
  }
  for (const auto &[pair, weight] : network.edges) {
    if (left.count(pair.first) && right.count(pair.second)) sub.edges[pair] = weight;
  }
  return sub;
}

double MentionRate(const LinkageNetwork &network, const std::string &keyword,
                   const std::string &term) {
  auto it = network.keyword_mentions.find(keyword);
  if (it == network.keyword_mentions.end() || it->second == 0) {
    Fail(ErrorKind::kDomain, "keyword " + keyword + " has no mentions");
  }
  return Percent(static_cast<double>(network.Weight(keyword, term)),
                 static_cast<double>(it->second));
}

}  // namespace topicshift
