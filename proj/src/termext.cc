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

#include "topicshift/termext.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "topicshift/error.h"
#include "topicshift/kernels.h"
#include "topicshift/text.h"

namespace topicshift {

namespace {

constexpr const char *kDefaultAbbreviations[] = {
    "e.g", "i.e", "etc", "vs", "al", "fig", "dr", "mr", "mrs", "ms",
    "prof", "st", "u.s", "u.k", "e.u", "inc", "ltd", "approx"};

std::string AbbreviationKey(std::string_view text) {
  std::string key = CaseFold(TrimAscii(text));
  while (!key.empty() && key.back() == '.') key.pop_back();
  return key;
}

bool IsTerminator(char32_t c) {
  return c == '.' || c == '!' || c == '?' || c == U'…';
}

bool IsCloser(char32_t c) {
  return c == ')' || c == ']' || c == '}' || c == '"' || c == '\'' ||
         c == U'’' || c == U'”' || c == U'»';
}

bool IsWordChar(char32_t c) { return IsAlnum(c) || c == '_'; }

// Characters that stay inside a token when letters or digits follow.
bool IsJoiner(char32_t c) {
  return c == '-' || c == '\'' || c == U'’' || c == '.' || c == '&';
}

bool IsUrl(std::string_view chunk) {
  std::string lower = AsciiLower(chunk);
  for (std::string_view prefix : {"http://", "https://", "www.", "ftp://"}) {
    if (StartsWith(lower, prefix)) return true;
  }
  return false;
}

bool IsHandle(std::string_view chunk) {
  return chunk.size() > 1 && chunk.front() == '@';
}

bool IsAbbreviation(const std::unordered_set<std::string> &abbreviations,
                    const std::vector<std::string> &sentence,
                    const std::string &word) {
  std::string key = AbbreviationKey(word);
  if (abbreviations.count(key)) return true;
  if (!sentence.empty()) {
    return abbreviations.count(AbbreviationKey(sentence.back()) + " " + key) > 0;
  }
  return false;
}

}  // namespace

Tokenizer::Tokenizer() {
  for (const char *abbreviation : kDefaultAbbreviations) {
    abbreviations_.insert(abbreviation);
  }
}

void Tokenizer::LoadAbbreviations(const std::string &path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kMissingInput, "cannot read abbreviations " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = TrimAscii(line);
    if (view.empty() || view.front() == '#') continue;
    AddAbbreviation(view);
  }
}

void Tokenizer::AddAbbreviation(std::string_view abbreviation) {
  std::string key = AbbreviationKey(abbreviation);
  if (!key.empty()) abbreviations_.insert(key);
}

std::vector<std::vector<std::string>> Tokenizer::Split(
    std::string_view text) const {
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> current;
  auto end_sentence = [&]() {
    if (!current.empty()) sentences.push_back(std::move(current));
    current.clear();
  };

  std::string normalized = NormalizeNfc(text);
  for (const std::string &chunk : SplitWhitespace(normalized)) {
    if (IsUrl(chunk) || IsHandle(chunk)) continue;
    std::vector<CodePoint> cps = DecodeUtf8(chunk);
    auto slice = [&](size_t from, size_t to) {
      return chunk.substr(cps[from].begin, cps[to - 1].end - cps[from].begin);
    };
    size_t i = 0;
    while (i < cps.size()) {
      char32_t c = cps[i].value;
      if (IsWordChar(c)) {
        size_t j = i + 1;
        while (j < cps.size() &&
               (IsWordChar(cps[j].value) ||
                (IsJoiner(cps[j].value) && j + 1 < cps.size() &&
                 IsWordChar(cps[j + 1].value)))) {
          ++j;
        }
        std::string word = slice(i, j);
        if (j < cps.size() && cps[j].value == '.' &&
            IsAbbreviation(abbreviations_, current, word)) {
          word += '.';
          ++j;
        }
        current.push_back(std::move(word));
        i = j;
        continue;
      }
      if (IsTerminator(c)) {
        size_t j = i;
        while (j < cps.size() && IsTerminator(cps[j].value)) ++j;
        size_t k = j;
        while (k < cps.size() && IsCloser(cps[k].value)) ++k;
        if (k == cps.size()) {
          end_sentence();
          i = k;
          continue;
        }
        // A terminator inside a chunk ("a.b" is joined above) is punctuation.
      }
      current.push_back(slice(i, i + 1));
      ++i;
    }
  }
  end_sentence();
  return sentences;
}

std::vector<Sentence> Tokenizer::Tokenize(std::string_view text,
                                          const Tagger &tagger) const {
  std::vector<Sentence> tagged;
  for (const auto &surfaces : Split(text)) tagged.push_back(tagger.Tag(surfaces));
  return tagged;
}

std::string FirstSentence(std::string_view text) {
  static const std::unordered_set<std::string> abbreviations(
      std::begin(kDefaultAbbreviations), std::end(kDefaultAbbreviations));
  std::vector<CodePoint> cps = DecodeUtf8(text);
  int depth = 0;
  bool in_quote = false;
  size_t word_begin = 0;
  for (size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i].value;
    if (IsSpace(c)) {
      word_begin = i + 1;
      continue;
    }
    if (c == '(' || c == '[' || c == '{' || c == U'“') {
      ++depth;
    } else if ((c == ')' || c == ']' || c == '}' || c == U'”') &&
               depth > 0) {
      --depth;
    } else if (c == '"') {
      in_quote = !in_quote;
    } else if (IsTerminator(c) && depth == 0 && !in_quote) {
      bool at_break = i + 1 == cps.size() || IsSpace(cps[i + 1].value);
      if (!at_break) continue;
      if (c == '.') {
        std::string word(text.substr(cps[word_begin].begin,
                                     cps[i].begin - cps[word_begin].begin));
        if (abbreviations.count(AbbreviationKey(word))) continue;
      }
      return std::string(TrimAscii(text.substr(0, cps[i].end)));
    }
  }
  return std::string(TrimAscii(text));
}

NounStoplist LoadNounStoplist(const std::string &path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kMissingInput, "cannot read noun stoplist " + path);
  NounStoplist stoplist;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = TrimAscii(line);
    if (view.empty() || view.front() == '#') continue;
    stoplist.insert(CaseFold(view));
  }
  return stoplist;
}

std::vector<Phrase> ExtractCandidatePhrases(
    const std::vector<Sentence> &sentences, const NounStoplist &stoplist) {
  std::vector<Phrase> phrases;
  for (size_t s = 0; s < sentences.size(); ++s) {
    const Sentence &tokens = sentences[s];
    size_t i = 0;
    while (i < tokens.size()) {
      if (tokens[i].pos == Pos::kOther) {
        ++i;
        continue;
      }
      size_t run_end = i;
      size_t last_noun = tokens.size();
      while (run_end < tokens.size() && tokens[run_end].pos != Pos::kOther) {
        if (tokens[run_end].pos == Pos::kNoun) last_noun = run_end;
        ++run_end;
      }
      if (last_noun != tokens.size()) {
        Phrase phrase{s, i, last_noun + 1, {}};
        std::vector<std::string> lemmas;
        for (size_t t = phrase.begin; t < phrase.end; ++t) {
          lemmas.push_back(tokens[t].lemma);
        }
        phrase.label = Join(lemmas, " ");
        if (!(lemmas.size() == 1 && stoplist.count(lemmas[0]))) {
          phrases.push_back(std::move(phrase));
        }
      }
      i = run_end;
    }
  }
  return phrases;
}

namespace {

// Assigns dense ids in label order and converts documents to id lists.
struct Vocabulary {
  std::vector<std::string> labels;
  std::map<std::string, int32_t> ids;
};

Vocabulary BuildVocabulary(const std::vector<std::vector<std::string>> &docs) {
  Vocabulary vocab;
  for (const auto &doc : docs) {
    for (const std::string &label : doc) vocab.ids.emplace(label, 0);
  }
  for (auto &[label, id] : vocab.ids) {
    id = static_cast<int32_t>(vocab.labels.size());
    vocab.labels.push_back(label);
  }
  return vocab;
}

std::vector<kernels::IdList> ToIdLists(
    const std::vector<std::vector<std::string>> &docs,
    const std::map<std::string, int32_t> &ids) {
  std::vector<kernels::IdList> lists(docs.size());
  for (size_t d = 0; d < docs.size(); ++d) {
    for (const std::string &label : docs[d]) {
      auto it = ids.find(label);
      if (it != ids.end()) lists[d].push_back(it->second);
    }
    std::sort(lists[d].begin(), lists[d].end());
    lists[d].erase(std::unique(lists[d].begin(), lists[d].end()),
                   lists[d].end());
  }
  return lists;
}

void ValidateOptions(const RelevanceOptions &options) {
  if (!(options.relevance_fraction > 0.0 && options.relevance_fraction <= 1.0)) {
    Fail(ErrorKind::kInvalidArgument, "relevance_fraction must be in (0, 1]");
  }
  if (options.min_occurrences < 1) {
    Fail(ErrorKind::kInvalidArgument, "min_occurrences must be >= 1");
  }
}

int64_t ToCount(double value) { return static_cast<int64_t>(std::llround(value)); }

}  // namespace

std::map<std::string, int64_t> CountOccurrences(
    const std::vector<std::vector<std::string>> &documents) {
  Vocabulary vocab = BuildVocabulary(documents);
  std::vector<int64_t> frequencies = kernels::DocumentFrequencies(
      ToIdLists(documents, vocab.ids),
      static_cast<int32_t>(vocab.labels.size()));
  std::map<std::string, int64_t> counts;
  for (size_t id = 0; id < vocab.labels.size(); ++id) {
    counts.emplace(vocab.labels[id], frequencies[id]);
  }
  return counts;
}

std::vector<CandidateTerm> BuildCandidates(
    const std::vector<std::vector<std::string>> &documents,
    const RelevanceOptions &options) {
  ValidateOptions(options);
  std::map<std::string, int32_t> eligible;
  std::vector<CandidateTerm> candidates;
  for (const auto &[label, frequency] : CountOccurrences(documents)) {
    if (frequency < options.min_occurrences) continue;
    eligible.emplace(label, static_cast<int32_t>(candidates.size()));
    candidates.push_back({label, frequency, {}, 0.0, false});
  }

  const auto docs = ToIdLists(documents, eligible);
  std::vector<kernels::SparseRow> first(candidates.size());
  for (const kernels::PairCount &pair : kernels::CooccurrenceCounts(docs)) {
    double count = static_cast<double>(pair.count);
    first[pair.a].push_back({pair.b, count});
    first[pair.b].push_back({pair.a, count});
  }
  for (auto &row : first) {
    std::sort(row.begin(), row.end(),
              [](const auto &x, const auto &y) { return x.id < y.id; });
  }
  const auto second = kernels::SecondOrderRows(first);
  for (size_t t = 0; t < candidates.size(); ++t) {
    for (const kernels::WeightedEntry &entry : second[t]) {
      if (static_cast<size_t>(entry.id) == t) continue;
      candidates[t].cooccurrence_row.emplace(candidates[entry.id].label,
                                             entry.value);
    }
  }
  return candidates;
}

std::vector<CandidateTerm> ScoreRelevance(std::vector<CandidateTerm> candidates,
                                          const RelevanceOptions &options) {
  ValidateOptions(options);
  const size_t n = candidates.size();
  std::map<std::string, size_t> column;
  for (size_t t = 0; t < n; ++t) column.emplace(candidates[t].label, t);

  // Dense smoothed table; own column is zero before smoothing.
  int64_t divisor = 0;
  for (const CandidateTerm &term : candidates) {
    for (const auto &[label, value] : term.cooccurrence_row) {
      if (value != 0.0) divisor = std::gcd(divisor, ToCount(value));
    }
  }
  const double pseudo = divisor > 0 ? static_cast<double>(divisor) : 1.0;

  std::vector<std::vector<double>> table(n, std::vector<double>(n, pseudo));
  std::vector<double> row_total(n, 0.0);
  std::vector<double> pooled(n, 0.0);
  double grand_total = 0.0;
  for (size_t t = 0; t < n; ++t) {
    for (const auto &[label, value] : candidates[t].cooccurrence_row) {
      auto it = column.find(label);
      if (it != column.end() && it->second != t) table[t][it->second] += value;
    }
    for (size_t j = 0; j < n; ++j) {
      row_total[t] += table[t][j];
      pooled[j] += table[t][j];
    }
    grand_total += row_total[t];
  }

  for (size_t t = 0; t < n; ++t) {
    double kl = 0.0;
    for (size_t j = 0; j < n; ++j) {
      double p = table[t][j] / row_total[t];
      double q = pooled[j] / grand_total;
      kl += p * std::log(p / q);
    }
    candidates[t].relevance = kl > 0.0 ? kl : 0.0;
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const CandidateTerm &x, const CandidateTerm &y) {
              if (x.relevance != y.relevance) return x.relevance > y.relevance;
              return x.label < y.label;
            });
  const size_t keep = static_cast<size_t>(
      std::ceil(options.relevance_fraction * static_cast<double>(n) - 1e-9));
  for (size_t t = 0; t < n; ++t) {
    candidates[t].retained = t < std::max<size_t>(keep, 1);
  }
  return candidates;
}

std::vector<HashtagOccurrence> ExtractHashtags(std::string_view tweet) {
  std::vector<HashtagOccurrence> tags;
  std::string text = NormalizeNfc(tweet);
  std::vector<CodePoint> cps = DecodeUtf8(text);
  size_t i = 0;
  while (i < cps.size()) {
    bool starts = cps[i].value == '#' &&
                  (i == 0 || !IsWordChar(cps[i - 1].value));
    size_t j = i + 1;
    while (starts && j < cps.size() && IsWordChar(cps[j].value)) ++j;
    if (!starts || j == i + 1) {
      ++i;
      continue;
    }
    std::string surface =
        text.substr(cps[i + 1].begin, cps[j - 1].end - cps[i + 1].begin);
    tags.push_back({NormalizeNfc(CaseFold(surface)), surface});
    i = j;
  }
  return tags;
}

std::vector<Hashtag> CountHashtags(const std::vector<std::string> &tweets) {
  std::vector<std::vector<HashtagOccurrence>> per_tweet(tweets.size());
  const int64_t n = static_cast<int64_t>(tweets.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (int64_t i = 0; i < n; ++i) per_tweet[i] = ExtractHashtags(tweets[i]);

  std::map<std::string, int64_t> frequency;
  std::map<std::string, std::map<std::string, int64_t>> surfaces;
  for (const auto &tags : per_tweet) {
    std::set<std::string> seen;
    for (const HashtagOccurrence &tag : tags) {
      if (seen.insert(tag.canonical).second) ++frequency[tag.canonical];
      ++surfaces[tag.canonical][tag.surface];
    }
  }

  std::vector<Hashtag> out;
  for (const auto &[canonical, count] : frequency) {
    const auto &forms = surfaces[canonical];
    auto best = forms.begin();
    for (auto it = forms.begin(); it != forms.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    out.push_back({canonical, best->first, count});
  }
  std::stable_sort(out.begin(), out.end(), [](const Hashtag &x, const Hashtag &y) {
    return x.frequency > y.frequency;
  });
  return out;
}

}  // namespace topicshift
