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

#include "topicshift/topicsets.h"

#include <algorithm>
#include <fstream>

#include "topicshift/error.h"
#include "topicshift/format.h"
#include "topicshift/text.h"

namespace topicshift {

namespace {

constexpr std::pair<const char *, const char *> kBuiltinAbbreviations[] = {
    {"ai", "artificial intelligence"},
    {"ml", "machine learning"},
    {"iot", "internet of things"},
    {"nlp", "natural language processing"},
    {"hpc", "high performance computing"},
    {"ehr", "electronic health record"},
    {"svm", "support vector machine"},
    {"elm", "extreme learning machine"},
    {"sna", "social network analysis"},
};

constexpr const char *kKeepWords[] = {
    "news", "series", "species", "data", "hdfs", "pnas", "gps", "ngs", "gis",
};

// Plural endings that are not plurals.
constexpr const char *kKeepSuffixes[] = {"ics", "ss", "us", "is"};

constexpr std::pair<const char *, const char *> kSisPlurals[] = {
    {"analyses", "analysis"},
    {"diagnoses", "diagnosis"},
    {"hypotheses", "hypothesis"},
    {"theses", "thesis"},
};

constexpr const char *kGroupNames[] = {"K",      "H",      "T_all",
                                       "T_blog", "T_news", "T_policy",
                                       "T_wikipedia"};

std::string ReplaceHyphens(const std::string &text) {
  std::string out;
  for (const CodePoint &cp : DecodeUtf8(text)) {
    if (cp.value == '-' || cp.value == U'‐' || cp.value == U'‑') {
      out += ' ';
    } else {
      out.append(text, cp.begin, cp.end - cp.begin);
    }
  }
  return out;
}

}  // namespace

LabelNormalizer::LabelNormalizer() {
  for (const char *word : kKeepWords) keep_.insert(word);
  for (const auto &[abbreviation, expansion] : kBuiltinAbbreviations) {
    AddAbbreviation(abbreviation, expansion);
  }
}

void LabelNormalizer::LoadAbbreviations(const std::string &path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kMissingInput, "cannot read abbreviations " + path);
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = TrimAscii(line);
    if (view.empty() || view.front() == '#') continue;
    size_t tab = view.find('\t');
    if (tab == std::string_view::npos) {
      Fail(ErrorKind::kSchema, path + ":" + std::to_string(number) +
                                   ": expected abbreviation<TAB>expansion");
    }
    AddAbbreviation(view.substr(0, tab), view.substr(tab + 1));
  }
}

void LabelNormalizer::AddAbbreviation(std::string_view abbreviation,
                                      std::string_view expansion) {
  std::string key = Basic(abbreviation);
  std::string value = Basic(expansion);
  if (key.empty() || value.empty()) {
    Fail(ErrorKind::kInvalidArgument, "empty abbreviation entry");
  }
  abbreviations_[key] = value;
}

void LabelNormalizer::AddKeepWord(std::string_view word) {
  keep_.insert(CaseFold(TrimAscii(word)));
}

std::string LabelNormalizer::Singularize(const std::string &token) const {
  if (keep_.count(token)) return token;
  for (const char *suffix : kKeepSuffixes) {
    if (EndsWith(token, suffix)) return token;
  }
  for (const auto &[plural, singular] : kSisPlurals) {
    if (token == plural) return singular;
  }
  if (token.size() > 4 && EndsWith(token, "ies")) {
    return token.substr(0, token.size() - 3) + "y";
  }
  for (const char *suffix : {"ches", "shes", "xes", "zes"}) {
    if (token.size() > 4 && EndsWith(token, suffix)) {
      return token.substr(0, token.size() - 2);
    }
  }
  if (token.size() > 2 && token.back() == 's') {
    return token.substr(0, token.size() - 1);
  }
  return token;
}

// Everything but abbreviation expansion.
std::string LabelNormalizer::Basic(std::string_view raw) const {
  std::string text = CollapseWhitespace(ReplaceHyphens(NormalizeNfc(CaseFold(raw))));
  if (text.empty()) return text;
  size_t last = text.rfind(' ');
  size_t start = last == std::string::npos ? 0 : last + 1;
  return text.substr(0, start) + Singularize(text.substr(start));
}

std::string LabelNormalizer::Normalize(std::string_view raw) const {
  std::string text = Basic(raw);
  if (text.empty()) Fail(ErrorKind::kInvalidArgument, "empty label");
  auto it = abbreviations_.find(text);
  return it == abbreviations_.end() ? text : it->second;
}

std::string NormalizeLabel(std::string_view raw) {
  static const LabelNormalizer normalizer;
  return normalizer.Normalize(raw);
}

std::string TopicLabel::Display() const {
  if (variants.empty()) return canonical;
  auto best = variants.begin();
  for (auto it = variants.begin(); it != variants.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

std::vector<std::vector<std::string>> NormalizeDocuments(
    const std::vector<std::vector<std::string>> &documents,
    const LabelNormalizer &normalizer, LabelIndex *index) {
  std::vector<std::vector<std::string>> out(documents.size());
  const int64_t n = static_cast<int64_t>(documents.size());
  // Empty canonical form marks a label that normalizes to nothing ("-").
  std::vector<std::vector<std::string>> canonical(documents.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t d = 0; d < n; ++d) {
    for (const std::string &raw : documents[d]) {
      std::string text = normalizer.Basic(raw);
      canonical[d].push_back(text.empty() ? text : normalizer.Normalize(raw));
    }
  }
  for (size_t d = 0; d < documents.size(); ++d) {
    for (size_t k = 0; k < documents[d].size(); ++k) {
      if (canonical[d][k].empty()) continue;
      out[d].push_back(canonical[d][k]);
      if (index == nullptr) continue;
      TopicLabel &label = (*index)[canonical[d][k]];
      label.canonical = canonical[d][k];
      ++label.variants[CollapseWhitespace(documents[d][k])];
    }
  }
  return out;
}

std::string_view GroupName(TopicGroup group) {
  return kGroupNames[static_cast<int>(group)];
}

std::optional<TopicGroup> ParseGroup(std::string_view name) {
  for (int g = 0; g < 7; ++g) {
    if (name == kGroupNames[g]) return static_cast<TopicGroup>(g);
  }
  return std::nullopt;
}

TopicGroup PlatformGroup(Platform platform) {
  switch (platform) {
    case Platform::kBlog:
      return TopicGroup::kTBlog;
    case Platform::kNews:
      return TopicGroup::kTNews;
    case Platform::kPolicy:
      return TopicGroup::kTPolicy;
    case Platform::kWikipedia:
      return TopicGroup::kTWikipedia;
    case Platform::kTwitter:
      break;
  }
  Fail(ErrorKind::kInvalidArgument, "twitter has no text-term group");
}

std::set<std::string> TopicSet::labels() const {
  std::set<std::string> out;
  for (const auto &[label, frequency] : members) out.insert(label);
  return out;
}

std::vector<std::pair<std::string, int64_t>> RankedMembers(const TopicSet &set) {
  std::vector<std::pair<std::string, int64_t>> ranked(set.members.begin(),
                                                      set.members.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto &x, const auto &y) { return x.second > y.second; });
  return ranked;
}

TopicSet BuildTopicSet(TopicGroup group, const FrequencyTable &frequencies,
                       int n) {
  if (n < 1) Fail(ErrorKind::kInvalidArgument, "top_n must be ≥ 1");
  TopicSet all{group, {}, n};
  for (const auto &[label, frequency] : frequencies) {
    if (frequency >= 1) all.members.emplace(label, frequency);
  }
  TopicSet selected{group, {}, n};
  for (const auto &[label, frequency] : RankedMembers(all)) {
    if (selected.size() == static_cast<size_t>(n)) break;
    selected.members.emplace(label, frequency);
  }
  return selected;
}

TopicSet RestrictToPlatform(const TopicSet &all, TopicGroup group,
                            const FrequencyTable &platform_frequencies) {
  TopicSet subset{group, {}, all.n_selected};
  for (const auto &[label, frequency] : all.members) {
    auto it = platform_frequencies.find(label);
    if (it != platform_frequencies.end() && it->second >= 1) {
      subset.members.emplace(label, it->second);
    }
  }
  return subset;
}

std::vector<ShareRow> ShareStatistics(const TopicSet &set,
                                      const FrequencyTable &doc_frequencies,
                                      int64_t total_occurrences,
                                      int64_t total_documents) {
  if (total_occurrences <= 0 || total_documents <= 0) {
    Fail(ErrorKind::kDomain, "share statistics need positive totals");
  }
  std::vector<ShareRow> rows;
  for (const auto &[label, frequency] : RankedMembers(set)) {
    auto it = doc_frequencies.find(label);
    int64_t docs = it == doc_frequencies.end() ? frequency : it->second;
    rows.push_back({label, frequency, docs,
                    Percent(static_cast<double>(frequency),
                            static_cast<double>(total_occurrences)),
                    Percent(static_cast<double>(docs),
                            static_cast<double>(total_documents))});
  }
  return rows;
}

}  // namespace topicshift
