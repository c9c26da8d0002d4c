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

// Fixtures and brute-force oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's own helpers.

#ifndef TOPICSHIFT_TESTS_FIXTURES_H_
#define TOPICSHIFT_TESTS_FIXTURES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <regex>

#include "topicshift/corpus.h"
#include "topicshift/linkage.h"
#include "topicshift/termext.h"
#include "topicshift/topicsets.h"

namespace fixtures {

namespace ts = topicshift;

inline std::string Doi(int i) { return "10.1000/p" + std::to_string(i); }

// Published platform counts for 8,626 publications. Twitter mentions the
// first 3,493 DOIs; the text platforms share 697 DOIs, 627 of which Twitter
// also mentions. Within that group: policy and wikipedia take a prefix,
// news the first 367 and blog the last 412.
inline ts::LinkedCorpus CoverageCorpus() {
  const int kPublications = 8626;
  std::vector<ts::Publication> pubs;
  for (int i = 0; i < kPublications; ++i) pubs.push_back({Doi(i)});

  std::vector<int> group;
  for (int i = 0; i < 627; ++i) group.push_back(i);
  for (int i = 3493; i < 3493 + 70; ++i) group.push_back(i);

  std::vector<ts::AltmetricEvent> events;
  int next_id = 0;
  auto add = [&](ts::Platform platform, const std::vector<int> &dois, int unique) {
    for (int e = 0; e < unique; ++e) {
      ts::AltmetricEvent event;
      event.event_id = "e" + std::to_string(next_id++);
      event.platform = platform;
      event.dois = {Doi(dois[e % dois.size()])};
      events.push_back(event);
    }
  };
  auto slice = [&](size_t begin, size_t end) {
    return std::vector<int>(group.begin() + begin, group.begin() + end);
  };
  add(ts::Platform::kNews, slice(0, 367), 1855);
  add(ts::Platform::kPolicy, slice(0, 85), 90);
  add(ts::Platform::kBlog, slice(285, 697), 974);
  add(ts::Platform::kWikipedia, slice(0, 125), 146);
  std::vector<int> tweeted(3493);
  for (int i = 0; i < 3493; ++i) tweeted[i] = i;
  add(ts::Platform::kTwitter, tweeted, 42341);

  ts::PlatformCounts all = {{ts::Platform::kNews, 2825},
                            {ts::Platform::kPolicy, 111},
                            {ts::Platform::kBlog, 1105},
                            {ts::Platform::kWikipedia, 179},
                            {ts::Platform::kTwitter, 74450}};
  return ts::LinkCorpus(std::move(pubs), std::move(events), all);
}

// Best V over every set partition, enumerated once each as a restricted
// growth string.
inline double BestPartitionQuality(const std::vector<std::vector<double>> &s,
                                   double gamma) {
  const int n = static_cast<int>(s.size());
  std::vector<int> a(n, 0);
  double best = -1e300;
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      double v = 0.0;
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (a[x] == a[y]) v += s[x][y] - gamma;
        }
      }
      best = std::max(best, v);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return 0.0;
  rec(0, 0);
  return best;
}

// Random symmetric association-strength matrix with about `density` of the
// pairs connected.
inline std::vector<std::vector<double>> RandomStrengths(int n, double density,
                                                        std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < density) s[i][j] = s[j][i] = 2.0 * unit(rng);
    }
  }
  return s;
}

// Linkage by three nested loops over events, keywords and terms.
struct BruteLinkage {
  std::map<std::pair<std::string, std::string>, int64_t> edges;
  std::map<std::string, int64_t> mentions;
};

inline BruteLinkage BruteForceLinkage(
    const ts::LinkedCorpus &corpus,
    const std::map<std::string, std::vector<std::string>> &keywords,
    const std::vector<std::vector<std::string>> &event_terms,
    const std::set<ts::Platform> &platforms) {
  BruteLinkage out;
  std::set<std::string> all_keywords;
  for (const auto &[doi, list] : keywords) all_keywords.insert(list.begin(), list.end());
  std::set<std::string> all_terms;
  for (const auto &terms : event_terms) all_terms.insert(terms.begin(), terms.end());
  for (size_t e = 0; e < corpus.events().size(); ++e) {
    if (!platforms.count(corpus.events()[e].platform)) continue;
    for (const std::string &k : all_keywords) {
      bool has_k = false;
      for (const std::string &doi : corpus.events()[e].dois) {
        if (!corpus.publications().count(doi) || !keywords.count(doi)) continue;
        const auto &list = keywords.at(doi);
        if (std::find(list.begin(), list.end(), k) != list.end()) has_k = true;
      }
      if (!has_k) continue;
      ++out.mentions[k];
      for (const std::string &t : all_terms) {
        const auto &terms = event_terms[e];
        if (std::find(terms.begin(), terms.end(), t) != terms.end()) {
          ++out.edges[{k, t}];
        }
      }
    }
  }
  return out;
}

// First violation of the phrase grammar or of maximality, or "" when the
// phrases are exactly the maximal adjective/noun spans ending in a noun.
inline std::string PhraseViolation(const std::vector<ts::Sentence> &sentences,
                                   const std::vector<ts::Phrase> &phrases) {
  using ts::Pos;
  std::vector<std::vector<bool>> covered(sentences.size());
  for (size_t s = 0; s < sentences.size(); ++s) {
    covered[s].assign(sentences[s].size(), false);
  }
  for (const ts::Phrase &p : phrases) {
    if (p.sentence >= sentences.size()) return "sentence index out of range";
    const ts::Sentence &tokens = sentences[p.sentence];
    if (p.begin >= p.end || p.end > tokens.size()) return "bad span";
    for (size_t t = p.begin; t < p.end; ++t) {
      if (tokens[t].pos == Pos::kOther) return "non noun/adjective inside " + p.label;
      covered[p.sentence][t] = true;
    }
    if (tokens[p.end - 1].pos != Pos::kNoun) return "phrase ends without a noun: " + p.label;
    if (p.begin > 0 && tokens[p.begin - 1].pos != Pos::kOther) {
      return "phrase can grow left: " + p.label;
    }
    for (size_t t = p.end; t < tokens.size() && tokens[t].pos != Pos::kOther; ++t) {
      if (tokens[t].pos == Pos::kNoun) return "phrase can grow right: " + p.label;
    }
  }
  for (size_t s = 0; s < sentences.size(); ++s) {
    for (size_t t = 0; t < sentences[s].size(); ++t) {
      if (sentences[s][t].pos == Pos::kNoun && !covered[s][t]) {
        return "noun outside every phrase: " + sentences[s][t].surface;
      }
    }
  }
  for (size_t i = 0; i < phrases.size(); ++i) {
    for (size_t j = 0; j < phrases.size(); ++j) {
      if (i == j || phrases[i].sentence != phrases[j].sentence) continue;
      if (phrases[j].begin <= phrases[i].begin && phrases[i].end <= phrases[j].end) {
        return "nested phrases: " + phrases[i].label;
      }
    }
  }
  return "";
}

// Case-folded tags of an ASCII tweet by a single regex scan.
inline std::vector<std::string> HashtagOracle(const std::string &tweet) {
  static const std::regex pattern("(^|[^A-Za-z0-9_])#([A-Za-z0-9_]+)");
  std::vector<std::string> tags;
  for (auto it = std::sregex_iterator(tweet.begin(), tweet.end(), pattern);
       it != std::sregex_iterator(); ++it) {
    std::string tag = (*it)[2];
    std::transform(tag.begin(), tag.end(), tag.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    tags.push_back(tag);
  }
  return tags;
}

// Random ASCII tweet over a small alphabet dense in '#' and separators.
inline std::string FuzzTweet(std::mt19937 &rng) {
  static const std::string alphabet = "aB9_ #.,!#x";
  std::string tweet;
  for (int k = rng() % 40; k > 0; --k) tweet += alphabet[rng() % alphabet.size()];
  return tweet;
}

// Random tagged sentence of up to 14 tokens.
inline ts::Sentence FuzzSentence(std::mt19937 &rng) {
  static const ts::Pos kinds[] = {ts::Pos::kNoun, ts::Pos::kAdjective, ts::Pos::kOther};
  ts::Sentence s;
  for (int t = rng() % 15; t > 0; --t) {
    std::string w = "w" + std::to_string(rng() % 50);
    s.push_back({w, w, kinds[rng() % 3]});
  }
  return s;
}

}  // namespace fixtures

#endif  // TOPICSHIFT_TESTS_FIXTURES_H_
