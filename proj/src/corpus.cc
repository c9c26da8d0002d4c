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

#include "topicshift/corpus.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <variant>

#include "json.hpp"
#include "topicshift/error.h"
#include "topicshift/format.h"
#include "topicshift/text.h"

namespace topicshift {

using json = nlohmann::json;

namespace {

constexpr std::array<std::pair<Platform, std::string_view>, 5> kPlatformNames =
    {{{Platform::kTwitter, "twitter"},
      {Platform::kBlog, "blog"},
      {Platform::kNews, "news"},
      {Platform::kPolicy, "policy"},
      {Platform::kWikipedia, "wikipedia"}}};

std::vector<std::string> ReadLines(std::istream &in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

bool IsBlank(const std::string &line) { return TrimAscii(line).empty(); }

// Result of parsing one line: a record, a schema error, or a blank line.
template <typename Record>
struct Parsed {
  std::variant<std::monostate, Record, std::string> value;
};

std::string OptionalString(const json &record, const char *field) {
  auto it = record.find(field);
  if (it == record.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw std::invalid_argument(std::string("field '") + field +
                                "' must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> StringArray(const json &record, const char *field) {
  std::vector<std::string> out;
  auto it = record.find(field);
  if (it == record.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw std::invalid_argument(std::string("field '") + field +
                                "' must be an array of strings");
  }
  for (const json &item : *it) {
    if (!item.is_string()) {
      throw std::invalid_argument(std::string("field '") + field +
                                  "' must be an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

// A publication whose DOI is missing parses to a Publication with empty doi;
// the caller counts and drops it.
Parsed<Publication> ParsePublicationLine(const std::string &line) {
  Parsed<Publication> parsed;
  if (IsBlank(line)) return parsed;
  try {
    json record = json::parse(line);
    if (!record.is_object()) throw std::invalid_argument("record is not an object");
    Publication pub;
    pub.doi = CanonicalDoi(OptionalString(record, "doi"));
    pub.title = NormalizeNfc(OptionalString(record, "title"));
    pub.abstract = NormalizeNfc(OptionalString(record, "abstract"));
    for (std::string &kw : StringArray(record, "author_keywords")) {
      pub.author_keywords.push_back(NormalizeNfc(kw));
    }
    if (auto it = record.find("year"); it != record.end() && !it->is_null()) {
      if (!it->is_number_integer()) {
        throw std::invalid_argument("field 'year' must be an integer");
      }
      pub.year = it->get<int>();
    }
    std::string type = OptionalString(record, "doc_type");
    if (!type.empty()) {
      auto parsed_type = ParseDocType(type);
      if (!parsed_type) {
        throw std::invalid_argument("doc_type '" + type +
                                    "' is not article, review or letter");
      }
      pub.doc_type = *parsed_type;
    }
    parsed.value = std::move(pub);
  } catch (const std::exception &e) {
    parsed.value = std::string(e.what());
  }
  return parsed;
}

Parsed<AltmetricEvent> ParseEventLine(const std::string &line) {
  Parsed<AltmetricEvent> parsed;
  if (IsBlank(line)) return parsed;
  try {
    json record = json::parse(line);
    if (!record.is_object()) throw std::invalid_argument("record is not an object");
    AltmetricEvent event;
    event.event_id = OptionalString(record, "event_id");
    if (event.event_id.empty()) {
      throw std::invalid_argument("missing event_id");
    }
    std::string platform = OptionalString(record, "platform");
    auto parsed_platform = ParsePlatform(platform);
    if (!parsed_platform) {
      throw std::invalid_argument("unknown platform '" + platform + "'");
    }
    event.platform = *parsed_platform;
    std::set<std::string> dois;
    for (const std::string &raw : StringArray(record, "dois")) {
      std::string doi = CanonicalDoi(raw);
      if (!doi.empty()) dois.insert(doi);
    }
    if (dois.empty()) throw std::invalid_argument("event lists no DOI");
    event.dois.assign(dois.begin(), dois.end());
    event.text = NormalizeNfc(OptionalString(record, "text"));
    event.language = OptionalString(record, "language");
    if (auto it = record.find("timestamp"); it != record.end() && !it->is_null()) {
      if (!it->is_string()) {
        throw std::invalid_argument("field 'timestamp' must be a string");
      }
      event.timestamp = it->get<std::string>();
    }
    parsed.value = std::move(event);
  } catch (const std::exception &e) {
    parsed.value = std::string(e.what());
  }
  return parsed;
}

template <typename Record, typename Fn>
std::vector<Parsed<Record>> ParseAll(const std::vector<std::string> &lines,
                                     Fn parse) {
  std::vector<Parsed<Record>> out(lines.size());
  const int64_t n = static_cast<int64_t>(lines.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) out[i] = parse(lines[i]);
  return out;
}

std::string PrimarySubtag(std::string_view tag) {
  std::string lower = AsciiLower(TrimAscii(tag));
  size_t dash = lower.find_first_of("-_");
  return dash == std::string::npos ? lower : lower.substr(0, dash);
}

bool HasErrors(const std::vector<Diagnostic> &diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic &d) {
                       return d.severity == Diagnostic::Severity::kError;
                     });
}

}  // namespace

std::string_view PlatformName(Platform platform) {
  for (const auto &[p, name] : kPlatformNames) {
    if (p == platform) return name;
  }
  return "unknown";
}

std::optional<Platform> ParsePlatform(std::string_view name) {
  std::string lower = AsciiLower(TrimAscii(name));
  for (const auto &[p, n] : kPlatformNames) {
    if (n == lower) return p;
  }
  return std::nullopt;
}

std::string_view DocTypeName(DocType type) {
  switch (type) {
    case DocType::kArticle:
      return "article";
    case DocType::kReview:
      return "review";
    case DocType::kLetter:
      return "letter";
  }
  return "article";
}

std::optional<DocType> ParseDocType(std::string_view name) {
  std::string lower = AsciiLower(TrimAscii(name));
  if (lower == "article") return DocType::kArticle;
  if (lower == "review") return DocType::kReview;
  if (lower == "letter") return DocType::kLetter;
  return std::nullopt;
}

bool PublicationLoad::has_errors() const { return HasErrors(diagnostics); }
bool EventLoad::has_errors() const { return HasErrors(diagnostics); }

std::string CanonicalDoi(std::string_view raw) {
  std::string doi = AsciiLower(TrimAscii(raw));
  static constexpr std::string_view kPrefixes[] = {
      "https://doi.org/", "http://doi.org/", "https://dx.doi.org/",
      "http://dx.doi.org/", "doi.org/", "doi:"};
  for (std::string_view prefix : kPrefixes) {
    if (StartsWith(doi, prefix)) {
      doi.erase(0, prefix.size());
      break;
    }
  }
  return std::string(TrimAscii(doi));
}

std::string EventDedupKey(const AltmetricEvent &event) {
  std::string key(PlatformName(event.platform));
  key.push_back('\x1f');
  key += Join(event.dois, "\x1e");
  key.push_back('\x1f');
  key += CollapseWhitespace(CaseFold(event.text));
  return key;
}

PublicationLoad LoadPublications(std::istream &in) {
  std::vector<std::string> lines = ReadLines(in);
  auto parsed = ParseAll<Publication>(lines, ParsePublicationLine);

  PublicationLoad load;
  std::unordered_set<std::string> seen;
  for (size_t i = 0; i < parsed.size(); ++i) {
    size_t line = i + 1;
    auto &value = parsed[i].value;
    if (std::holds_alternative<std::monostate>(value)) continue;
    if (auto *error = std::get_if<std::string>(&value)) {
      load.diagnostics.push_back({Diagnostic::Severity::kError, line, *error});
      continue;
    }
    Publication &pub = std::get<Publication>(value);
    if (pub.doi.empty()) {
      ++load.missing_doi;
      load.diagnostics.push_back(
          {Diagnostic::Severity::kWarning, line, "record has no DOI; dropped"});
      continue;
    }
    if (!seen.insert(pub.doi).second) {
      ++load.duplicates;
      load.diagnostics.push_back({Diagnostic::Severity::kWarning, line,
                                  "duplicate DOI " + pub.doi + "; kept first"});
      continue;
    }
    load.publications.push_back(std::move(pub));
  }
  return load;
}

EventLoad LoadEvents(std::istream &in,
                     const std::optional<std::string> &language_filter) {
  std::vector<std::string> lines = ReadLines(in);
  auto parsed = ParseAll<AltmetricEvent>(lines, ParseEventLine);
  std::optional<std::string> wanted;
  if (language_filter) wanted = PrimarySubtag(*language_filter);

  EventLoad load;
  std::unordered_set<std::string> keys;
  std::unordered_map<std::string, size_t> ids;  // event_id -> line
  for (size_t i = 0; i < parsed.size(); ++i) {
    size_t line = i + 1;
    auto &value = parsed[i].value;
    if (std::holds_alternative<std::monostate>(value)) continue;
    if (auto *error = std::get_if<std::string>(&value)) {
      load.diagnostics.push_back({Diagnostic::Severity::kError, line, *error});
      continue;
    }
    AltmetricEvent &event = std::get<AltmetricEvent>(value);
    if (wanted && PrimarySubtag(event.language) != *wanted) {
      ++load.language_filtered;
      continue;
    }
    ++load.all_events[event.platform];
    if (!keys.insert(EventDedupKey(event)).second) continue;
    auto [it, inserted] = ids.emplace(event.event_id, line);
    if (!inserted) {
      --load.all_events[event.platform];
      load.diagnostics.push_back(
          {Diagnostic::Severity::kError, line,
           "event_id " + event.event_id + " reused by a different event (line " +
               std::to_string(it->second) + ")"});
      continue;
    }
    ++load.unique_events[event.platform];
    load.events.push_back(std::move(event));
  }
  return load;
}

std::vector<std::string> LinkedCorpus::LinkedEventIds(
    const std::string &doi) const {
  std::vector<std::string> ids;
  auto it = links_.find(doi);
  if (it == links_.end()) return ids;
  for (size_t index : it->second) ids.push_back(events_[index].event_id);
  return ids;
}

LinkedCorpus LinkCorpus(std::vector<Publication> publications,
                        std::vector<AltmetricEvent> events,
                        PlatformCounts all_events) {
  LinkedCorpus corpus;
  for (Publication &pub : publications) {
    std::string doi = pub.doi;
    corpus.publications_.emplace(std::move(doi), std::move(pub));
  }
  corpus.events_ = std::move(events);
  corpus.event_dois_.resize(corpus.events_.size());
  for (size_t e = 0; e < corpus.events_.size(); ++e) {
    for (const std::string &doi : corpus.events_[e].dois) {
      if (!corpus.publications_.count(doi)) continue;
      corpus.links_[doi].push_back(e);
      corpus.event_dois_[e].push_back(doi);
    }
  }
  if (all_events.empty()) {
    for (const AltmetricEvent &event : corpus.events_) {
      ++all_events[event.platform];
    }
  }
  corpus.all_events_ = std::move(all_events);
  return corpus;
}

CoverageReport BuildCoverageReport(const LinkedCorpus &corpus) {
  const int64_t total = static_cast<int64_t>(corpus.publications().size());
  if (total == 0) {
    Fail(ErrorKind::kDomain, "coverage is undefined for an empty corpus");
  }
  std::map<Platform, std::set<std::string>> mentioned;
  std::map<Platform, int64_t> unique;
  for (size_t e = 0; e < corpus.events().size(); ++e) {
    Platform p = corpus.events()[e].platform;
    ++unique[p];
    for (const std::string &doi : corpus.KnownDois(e)) mentioned[p].insert(doi);
  }

  CoverageReport report;
  report.publications = total;
  for (Platform p : kAllPlatforms) {
    PlatformCoverage row{p};
    auto all = corpus.all_event_counts().find(p);
    row.all_events = all == corpus.all_event_counts().end() ? 0 : all->second;
    row.unique_events = unique[p];
    row.mentioned_papers = static_cast<int64_t>(mentioned[p].size());
    row.share_pct = Percent(static_cast<double>(row.mentioned_papers),
                            static_cast<double>(total));
    report.platforms.push_back(row);
  }

  std::set<std::string> text_group;
  for (Platform p : kTextPlatforms) {
    text_group.insert(mentioned[p].begin(), mentioned[p].end());
  }
  const std::set<std::string> &twitter = mentioned[Platform::kTwitter];
  std::set<std::string> both;
  std::set_intersection(text_group.begin(), text_group.end(), twitter.begin(),
                        twitter.end(), std::inserter(both, both.end()));
  std::set<std::string> any = text_group;
  any.insert(twitter.begin(), twitter.end());

  auto group = [total](std::string name, const std::set<std::string> &dois) {
    GroupCoverage g{std::move(name), static_cast<int64_t>(dois.size())};
    g.share_pct = Percent(static_cast<double>(g.mentioned_papers),
                          static_cast<double>(total));
    return g;
  };
  report.text_group = group("group_text", text_group);
  report.twitter_group = group("group_twitter", twitter);
  report.both_groups = group("group_both", both);
  report.grand_total = group("grand_total", any);
  return report;
}

}  // namespace topicshift
