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

// UTF-8 text helpers shared by the ingestion, extraction and label
// normalization stages. Unicode semantics come from ICU.

#ifndef TOPICSHIFT_TEXT_H_
#define TOPICSHIFT_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace topicshift {

// NFC-normalizes UTF-8 text. Invalid sequences are replaced by U+FFFD.
std::string NormalizeNfc(std::string_view text);

// Full Unicode case folding (not locale-sensitive lowercasing).
std::string CaseFold(std::string_view text);

// Trims and collapses every run of Unicode whitespace to one ASCII space.
std::string CollapseWhitespace(std::string_view text);

std::string_view TrimAscii(std::string_view text);
std::string AsciiLower(std::string_view text);

bool StartsWith(std::string_view text, std::string_view prefix);
bool EndsWith(std::string_view text, std::string_view suffix);

std::vector<std::string> SplitWhitespace(std::string_view text);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// One decoded code point and its byte range in the source string.
struct CodePoint {
  char32_t value;
  size_t begin;
  size_t end;
};

// Decodes UTF-8 into code points; malformed bytes decode as U+FFFD.
std::vector<CodePoint> DecodeUtf8(std::string_view text);

bool IsAlnum(char32_t c);
bool IsAlpha(char32_t c);
bool IsDigit(char32_t c);
bool IsSpace(char32_t c);
bool IsUpper(char32_t c);
bool IsLower(char32_t c);

}  // namespace topicshift

#endif  // TOPICSHIFT_TEXT_H_
