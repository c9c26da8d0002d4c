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

#include "topicshift/appendix.h"

#include <charconv>
#include <fstream>
#include <set>

#include "topicshift/error.h"
#include "topicshift/format.h"
#include "topicshift/text.h"

namespace topicshift {

namespace {

constexpr const char *kColumns[] = {
    "rank",   "topic",     "type",     "term_total", "blog",  "news",
    "policy", "wikipedia", "keywords", "hashtags",   "total"};
constexpr size_t kNumColumns = std::size(kColumns);

[[noreturn]] void RowError(size_t line, const std::string &message) {
  Fail(ErrorKind::kSchema, "appendix line " + std::to_string(line) + ": " + message);
}

int64_t ParseCount(std::string_view cell, size_t line, const char *column) {
  cell = TrimAscii(cell);
  if (cell.empty()) return 0;
  int64_t value = 0;
  auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || end != cell.data() + cell.size() || value < 0) {
    RowError(line, std::string("bad count in column ") + column);
  }
  return value;
}

void FillFrequency(FrequencyTable &table, const std::string &label, int64_t count) {
  if (count > 0) table[label] = count;
}

}  // namespace

int64_t AppendixRow::PlatformCount(Platform platform) const {
  switch (platform) {
    case Platform::kBlog:
      return blog;
    case Platform::kNews:
      return news;
    case Platform::kPolicy:
      return policy;
    case Platform::kWikipedia:
      return wikipedia;
    case Platform::kTwitter:
      return 0;
  }
  return 0;
}

AppendixTable::AppendixTable(std::vector<AppendixRow> rows)
    : rows_(std::move(rows)) {}

FrequencyTable AppendixTable::Keywords() const {
  FrequencyTable table;
  for (const AppendixRow &row : rows_) FillFrequency(table, row.canonical, row.keywords);
  return table;
}

FrequencyTable AppendixTable::Hashtags() const {
  FrequencyTable table;
  for (const AppendixRow &row : rows_) FillFrequency(table, row.canonical, row.hashtags);
  return table;
}

FrequencyTable AppendixTable::Terms() const {
  FrequencyTable table;
  for (const AppendixRow &row : rows_) {
    FillFrequency(table, row.canonical, row.term_total);
  }
  return table;
}

FrequencyTable AppendixTable::PlatformTerms(Platform platform) const {
  FrequencyTable table;
  for (const AppendixRow &row : rows_) {
    FillFrequency(table, row.canonical, row.PlatformCount(platform));
  }
  return table;
}

AppendixTable LoadAppendix(std::istream &in, const LabelNormalizer &normalizer) {
  std::string line;
  size_t number = 0;
  if (!std::getline(in, line)) Fail(ErrorKind::kSchema, "appendix is empty");
  ++number;
  std::vector<std::string> header = SplitCsvLine(line);
  if (header.size() != kNumColumns) RowError(number, "unexpected header");
  for (size_t c = 0; c < kNumColumns; ++c) {
    if (TrimAscii(header[c]) != kColumns[c]) {
      RowError(number, std::string("expected column ") + kColumns[c]);
    }
  }

  std::vector<AppendixRow> rows;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++number;
    if (TrimAscii(line).empty()) continue;
    std::vector<std::string> cells = SplitCsvLine(line);
    if (cells.size() != kNumColumns) {
      RowError(number, "expected " + std::to_string(kNumColumns) + " fields");
    }
    AppendixRow row;
    row.rank = static_cast<int>(ParseCount(cells[0], number, "rank"));
    row.topic = CollapseWhitespace(cells[1]);
    if (row.topic.empty()) RowError(number, "empty topic");
    row.canonical = normalizer.Normalize(row.topic);
    row.type = std::string(TrimAscii(cells[2]));
    row.term_total = ParseCount(cells[3], number, "term_total");
    row.blog = ParseCount(cells[4], number, "blog");
    row.news = ParseCount(cells[5], number, "news");
    row.policy = ParseCount(cells[6], number, "policy");
    row.wikipedia = ParseCount(cells[7], number, "wikipedia");
    row.keywords = ParseCount(cells[8], number, "keywords");
    row.hashtags = ParseCount(cells[9], number, "hashtags");
    row.total = ParseCount(cells[10], number, "total");

    if (row.term_total != row.blog + row.news + row.policy + row.wikipedia) {
      RowError(number, "term_total differs from the platform sum");
    }
    if (row.total != row.term_total + row.keywords + row.hashtags) {
      RowError(number, "total differs from the group sum");
    }
    std::set<char> letters(row.type.begin(), row.type.end());
    std::set<char> expected;
    if (row.keywords > 0) expected.insert('K');
    if (row.term_total > 0) expected.insert('T');
    if (row.hashtags > 0) expected.insert('H');
    if (letters != expected || letters.size() != row.type.size()) {
      RowError(number, "type " + row.type + " does not match the counts");
    }
    if (!seen.insert(row.canonical).second) {
      RowError(number, "duplicate topic " + row.canonical);
    }
    rows.push_back(std::move(row));
  }
  return AppendixTable(std::move(rows));
}

AppendixTable LoadAppendixFile(const std::string &path,
                               const LabelNormalizer &normalizer) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kMissingInput, "cannot read appendix " + path);
  return LoadAppendix(in, normalizer);
}

}  // namespace topicshift
