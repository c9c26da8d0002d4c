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

#ifndef TOPICSHIFT_FORMAT_H_
#define TOPICSHIFT_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

namespace topicshift {

// Rounds half away from zero at the given number of decimals.
double RoundHalfAway(double value, int decimals);

// Fixed-point text of RoundHalfAway(value, decimals), e.g. "0.5151".
std::string FormatFixed(double value, int decimals);

// numerator / denominator * 100. Throws kDomain on a zero denominator.
double Percent(double numerator, double denominator);

// Quotes a CSV field when it contains a delimiter, quote or newline.
std::string CsvField(const std::string &field);

// Splits one CSV record, honoring double-quoted fields.
std::vector<std::string> SplitCsvLine(std::string_view line);

}  // namespace topicshift

#endif  // TOPICSHIFT_FORMAT_H_
