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

#include <cstdint>
#include <random>

#include "doctest.h"
#include "topicshift/error.h"
#include "topicshift/format.h"
#include "topicshift/text.h"

namespace ts = topicshift;

TEST_SUITE("text") {

TEST_CASE("case folding and NFC") {
  CHECK(ts::CaseFold("Big DATA") == "big data");
  CHECK(ts::CaseFold("Straße") == "strasse");
  // e + combining acute composes to U+00E9.
  CHECK(ts::NormalizeNfc("e\xCC\x81") == "\xC3\xA9");
  CHECK(ts::CollapseWhitespace("  big \t\n data ") == "big data");
}

TEST_CASE("utf-8 decoding keeps byte offsets") {
  auto cps = ts::DecodeUtf8("a\xC3\xA9z");
  REQUIRE(cps.size() == 3);
  CHECK(cps[1].value == U'é');
  CHECK(cps[1].begin == 1);
  CHECK(cps[1].end == 3);
  CHECK(ts::IsUpper(U'A'));
  CHECK(ts::IsLower(U'é'));
  CHECK_FALSE(ts::IsAlpha(U'1'));
}

TEST_CASE("half-away rounding at exact binary ties") {
  CHECK(ts::RoundHalfAway(0.125, 2) == 0.13);
  CHECK(ts::RoundHalfAway(-0.125, 2) == -0.13);
  CHECK(ts::RoundHalfAway(2.5, 0) == 3.0);
  CHECK(ts::RoundHalfAway(-2.5, 0) == -3.0);
  // 2.675 is stored slightly below the tie.
  CHECK(ts::RoundHalfAway(2.675, 2) == 2.67);
  CHECK(ts::FormatFixed(9.995, 2) == "9.99");
  CHECK(ts::FormatFixed(0.99999, 2) == "1.00");
  CHECK(ts::FormatFixed(-0.001, 2) == "0.00");
}

TEST_CASE("rounding matches integer arithmetic on eighths") {
  // k / 8 is exact in binary; with 2 decimals the oracle is integer math.
  for (int64_t k = -4000; k <= 4000; ++k) {
    double value = static_cast<double>(k) / 8.0;
    int64_t hundredths_x8 = k * 100;  // value * 100 * 8
    int64_t q = hundredths_x8 / 8;
    int64_t r = hundredths_x8 % 8;
    if (r < 0) r = -r;
    if (r >= 4) q += k < 0 ? -1 : 1;
    CHECK(ts::RoundHalfAway(value, 2) == static_cast<double>(q) / 100.0);
  }
}

TEST_CASE("percent and csv helpers") {
  CHECK(ts::Percent(1, 4) == 25.0);
  CHECK_THROWS_AS(ts::Percent(1, 0), ts::Error);
  CHECK(ts::CsvField("a,b") == "\"a,b\"");
  CHECK(ts::CsvField("say \"hi\"") == "\"say \"\"hi\"\"\"");
  auto fields = ts::SplitCsvLine("1,\"a, b\",,\"q\"\"x\"");
  REQUIRE(fields.size() == 4);
  CHECK(fields[1] == "a, b");
  CHECK(fields[2].empty());
  CHECK(fields[3] == "q\"x");
}

TEST_CASE("csv round trip on random fields") {
  std::mt19937 rng(3);
  const std::string alphabet = "ab,\" \n";
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> fields(1 + rng() % 4);
    std::string line;
    for (size_t f = 0; f < fields.size(); ++f) {
      for (int c = rng() % 6; c > 0; --c) fields[f] += alphabet[rng() % 5];  // no newline
      line += (f ? "," : "") + ts::CsvField(fields[f]);
    }
    CHECK(ts::SplitCsvLine(line) == fields);
  }
}

}  // TEST_SUITE
