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

#include "topicshift/format.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "topicshift/error.h"

namespace topicshift {

namespace {

// Rounds the exact decimal expansion of `value` (glibc prints binary doubles
// exactly) half away from zero. Operating on digits avoids the double
// rounding that value * 10^d introduces near ties.
std::string RoundDecimalString(double value, int decimals) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals + 60, std::fabs(value));
  std::string digits(buf);
  size_t dot = digits.find('.');
  std::string integer = digits.substr(0, dot);
  std::string fraction = digits.substr(dot + 1);
  bool round_up = fraction[decimals] >= '5';
  std::string kept = integer + fraction.substr(0, decimals);
  if (round_up) {
    int i = static_cast<int>(kept.size()) - 1;
    while (i >= 0 && kept[i] == '9') kept[i--] = '0';
    if (i < 0) {
      kept.insert(kept.begin(), '1');
    } else {
      ++kept[i];
    }
  }
  size_t int_len = kept.size() - decimals;
  std::string out = kept.substr(0, int_len);
  if (decimals > 0) out += "." + kept.substr(int_len);
  bool all_zero = out.find_first_not_of("0.") == std::string::npos;
  if (value < 0 && !all_zero) out.insert(out.begin(), '-');
  return out;
}

}  // namespace

double RoundHalfAway(double value, int decimals) {
  if (!std::isfinite(value)) return value;
  return std::strtod(RoundDecimalString(value, decimals).c_str(), nullptr);
}

std::string FormatFixed(double value, int decimals) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : "inf";
  return RoundDecimalString(value, decimals);
}

double Percent(double numerator, double denominator) {
  if (denominator == 0.0) {
    Fail(ErrorKind::kDomain, "percentage of a zero total is undefined");
  }
  return numerator / denominator * 100.0;
}

std::string CsvField(const std::string &field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back().push_back(c);
    }
  }
  return fields;
}

}  // namespace topicshift
