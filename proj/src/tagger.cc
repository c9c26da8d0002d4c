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

#include <fstream>
#include <optional>
#include <sstream>

#include "topicshift/error.h"
#include "topicshift/termext.h"
#include "topicshift/text.h"

namespace topicshift {

namespace {

constexpr const char *kBuiltinLexicon =
#include "topicshift/tagger_lexicon.inc"
    ;

std::optional<Pos> ParsePos(std::string_view name) {
  std::string lower = AsciiLower(TrimAscii(name));
  if (lower == "noun" || lower == "n") return Pos::kNoun;
  if (lower == "adjective" || lower == "adj" || lower == "a") {
    return Pos::kAdjective;
  }
  if (lower == "other" || lower == "o") return Pos::kOther;
  return std::nullopt;
}

// Returns false on a malformed line.
bool ParseLexiconLine(const std::string &line, std::string *word, Pos *pos) {
  std::string_view view = TrimAscii(line);
  if (view.empty() || view.front() == '#') {
    word->clear();
    return true;
  }
  size_t tab = view.find('\t');
  if (tab == std::string_view::npos) return false;
  auto parsed = ParsePos(view.substr(tab + 1));
  if (!parsed) return false;
  *word = CaseFold(TrimAscii(view.substr(0, tab)));
  *pos = *parsed;
  return !word->empty();
}

bool HasLetter(std::string_view token) {
  for (const CodePoint &cp : DecodeUtf8(token)) {
    if (IsAlpha(cp.value)) return true;
  }
  return false;
}

std::string Lemma(std::string_view surface) {
  std::string lemma = CaseFold(surface);
  for (std::string_view possessive : {"'s", "’s"}) {
    if (EndsWith(lemma, possessive) && lemma.size() > possessive.size()) {
      lemma.resize(lemma.size() - possessive.size());
      break;
    }
  }
  return lemma;
}

bool IsAdjectiveSuffix(std::string_view lemma) {
  if (lemma.size() < 5) return false;
  for (std::string_view suffix :
       {"al", "ive", "ous", "ful", "less", "able", "ible", "ic", "ish"}) {
    if (EndsWith(lemma, suffix)) return true;
  }
  return false;
}

// Tag decided before context: fixed lexicon or suffix class.
enum class Shape { kFixed, kIng, kEd, kDefault };

}  // namespace

std::string_view PosName(Pos pos) {
  switch (pos) {
    case Pos::kNoun:
      return "noun";
    case Pos::kAdjective:
      return "adjective";
    case Pos::kOther:
      return "other";
  }
  return "other";
}

Tagger::Tagger() {
  std::istringstream in(kBuiltinLexicon);
  std::string line, word;
  Pos pos;
  while (std::getline(in, line)) {
    if (ParseLexiconLine(line, &word, &pos) && !word.empty()) {
      lexicon_[word] = pos;
    }
  }
}

void Tagger::LoadLexicon(const std::string &path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kMissingInput, "cannot read tagger lexicon " + path);
  std::string line, word;
  Pos pos;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!ParseLexiconLine(line, &word, &pos)) {
      Fail(ErrorKind::kSchema, path + ":" + std::to_string(number) +
                                   ": expected word<TAB>pos");
    }
    if (!word.empty()) lexicon_[word] = pos;
  }
}

void Tagger::AddEntry(std::string_view word, Pos pos) {
  lexicon_[CaseFold(word)] = pos;
}

Sentence Tagger::Tag(const std::vector<std::string> &surfaces) const {
  Sentence tokens;
  std::vector<Shape> shapes;
  tokens.reserve(surfaces.size());
  for (const std::string &surface : surfaces) {
    TaggedToken token{surface, Lemma(surface), Pos::kOther};
    Shape shape = Shape::kFixed;
    if (!HasLetter(token.lemma) || EndsWith(token.lemma, ".")) {
      token.pos = Pos::kOther;
    } else if (auto it = lexicon_.find(token.lemma); it != lexicon_.end()) {
      token.pos = it->second;
    } else if (token.lemma.size() > 4 && EndsWith(token.lemma, "ly")) {
      token.pos = Pos::kOther;
    } else if (token.lemma.size() > 4 && EndsWith(token.lemma, "ing")) {
      shape = Shape::kIng;
    } else if (token.lemma.size() > 4 && EndsWith(token.lemma, "ed")) {
      shape = Shape::kEd;
    } else if (IsAdjectiveSuffix(token.lemma)) {
      token.pos = Pos::kAdjective;
    } else {
      token.pos = Pos::kNoun;
      shape = Shape::kDefault;
    }
    tokens.push_back(std::move(token));
    shapes.push_back(shape);
  }
  // "-ing" reads as a noun after a noun ("cloud computing"), else a verb.
  // "-ed" reads as a modifier when it opens a noun group ("distributed
  // systems"), else a verb ("researchers analyzed tweets").
  for (size_t i = 0; i < tokens.size(); ++i) {
    bool prev_noun = i > 0 && tokens[i - 1].pos == Pos::kNoun;
    if (shapes[i] == Shape::kIng) {
      tokens[i].pos = prev_noun ? Pos::kNoun : Pos::kOther;
    } else if (shapes[i] == Shape::kEd) {
      bool next_noun = i + 1 < tokens.size() &&
                       (shapes[i + 1] == Shape::kDefault ||
                        (shapes[i + 1] == Shape::kFixed &&
                         tokens[i + 1].pos == Pos::kNoun));
      tokens[i].pos = !prev_noun && next_noun ? Pos::kAdjective : Pos::kOther;
    }
  }
  return tokens;
}

}  // namespace topicshift
