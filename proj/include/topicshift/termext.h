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

// Candidate topic extraction from free text.
//
// Text terms are noun phrases selected by a linguistic filter: maximal token
// runs made only of nouns and adjectives that end in a noun. Candidates are
// then ranked by how far their second-order co-occurrence distribution is
// from the corpus-wide one (Kullback-Leibler divergence) and the most
// relevant fraction is kept. Hashtags are pulled from tweets separately.

#ifndef TOPICSHIFT_TERMEXT_H_
#define TOPICSHIFT_TERMEXT_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace topicshift {

enum class Pos { kNoun, kAdjective, kOther };

std::string_view PosName(Pos pos);

struct TaggedToken {
  std::string surface;
  std::string lemma;  // case-folded, possessive stripped
  Pos pos = Pos::kOther;
};

using Sentence = std::vector<TaggedToken>;

// Lexicon lookup first, then suffix rules, then noun for any other
// alphabetic token. Tokens without letters, and abbreviations kept with
// their period, are kOther.
class Tagger {
 public:
  // Starts from the built-in function-word/adjective lexicon.
  Tagger();

  // Reads "word<TAB>pos" lines (pos: noun|adjective|other, or n|a|o).
  // Entries override the built-in ones. Throws kMissingInput / kSchema.
  void LoadLexicon(const std::string &path);
  void AddEntry(std::string_view word, Pos pos);

  size_t lexicon_size() const { return lexicon_.size(); }

  // Tags one sentence worth of surface tokens.
  Sentence Tag(const std::vector<std::string> &surfaces) const;

 private:
  std::unordered_map<std::string, Pos> lexicon_;
};

// Splits sentences on '.', '!', '?' (and the ellipsis) that are followed by
// whitespace or end of text. A period after a listed abbreviation does not
// end a sentence.
class Tokenizer {
 public:
  Tokenizer();

  // One abbreviation per line, with or without the final period.
  void LoadAbbreviations(const std::string &path);
  void AddAbbreviation(std::string_view abbreviation);

  // NFC-normalizes, strips URLs and @handles, splits sentences and tokens,
  // and tags each sentence. Empty text yields no sentences.
  std::vector<Sentence> Tokenize(std::string_view text,
                                 const Tagger &tagger) const;

  // Raw token surfaces per sentence, before tagging.
  std::vector<std::vector<std::string>> Split(std::string_view text) const;

 private:
  std::unordered_set<std::string> abbreviations_;
};

// Text up to and including the first sentence terminator that is not inside
// parentheses, brackets or quotes; the whole text when there is none.
std::string FirstSentence(std::string_view text);

struct Phrase {
  size_t sentence = 0;
  size_t begin = 0;  // token index, inclusive
  size_t end = 0;    // token index, exclusive
  std::string label;  // lemmas joined by single spaces
};

// A noun stoplist removes single-token phrases whose lemma is generic.
using NounStoplist = std::unordered_set<std::string>;

NounStoplist LoadNounStoplist(const std::string &path);

// Maximal adjective/noun spans ending in a noun, per sentence.
std::vector<Phrase> ExtractCandidatePhrases(const std::vector<Sentence> &sentences,
                                            const NounStoplist &stoplist = {});

// Number of documents containing each label; repeated labels within one
// document count once. Runs in parallel over documents.
std::map<std::string, int64_t> CountOccurrences(
    const std::vector<std::vector<std::string>> &documents);

struct CandidateTerm {
  std::string label;
  int64_t doc_frequency = 0;
  // Second-order co-occurrence counts against every other eligible term.
  std::map<std::string, double> cooccurrence_row;
  double relevance = 0.0;
  bool retained = false;
};

struct RelevanceOptions {
  double relevance_fraction = 0.6;  // in (0, 1]
  int64_t min_occurrences = 2;      // 2 for event text, 1 for keywords
};

// Builds candidates for every label with doc_frequency >= min_occurrences
// and fills their second-order co-occurrence rows (the square of the
// first-order document co-occurrence matrix).
std::vector<CandidateTerm> BuildCandidates(
    const std::vector<std::vector<std::string>> &documents,
    const RelevanceOptions &options);

// Fills relevance and retained. Relevance is KL(p_t || q): p_t is t's row
// with a pseudo-count added to every cell, q is the row-total weighted
// mixture of all p_t. The pseudo-count is the gcd of the nonzero row
// entries, which is 1 for primitive integer tables and keeps the ranking
// invariant under uniform integer scaling. Keeps ceil(fraction * n)
// candidates by descending relevance, ties by label. Returns candidates
// ordered that way.
std::vector<CandidateTerm> ScoreRelevance(std::vector<CandidateTerm> candidates,
                                          const RelevanceOptions &options);

struct HashtagOccurrence {
  std::string canonical;  // case-folded, without '#'
  std::string surface;    // original spelling, without '#'
};

// Every '#' that starts the text or follows a character other than a
// letter, digit or underscore, followed by one or more such characters.
std::vector<HashtagOccurrence> ExtractHashtags(std::string_view tweet);

struct Hashtag {
  std::string canonical;
  std::string display;  // most frequent surface form, ties lexicographic
  int64_t frequency = 0;  // tweets using the tag
};

// Counts each canonical tag once per tweet. Sorted by descending frequency,
// then canonical text.
std::vector<Hashtag> CountHashtags(const std::vector<std::string> &tweets);

}  // namespace topicshift

#endif  // TOPICSHIFT_TERMEXT_H_
