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

// Publication and altmetric event records, DOI linking, and coverage
// statistics.
//
// Both input formats are JSON Lines. Records are parsed independently (in
// parallel); validation, deduplication and linking are sequential passes over
// the parsed results, so the outcome does not depend on the thread count.

#ifndef TOPICSHIFT_CORPUS_H_
#define TOPICSHIFT_CORPUS_H_

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace topicshift {

enum class DocType { kArticle, kReview, kLetter };

enum class Platform { kTwitter, kBlog, kNews, kPolicy, kWikipedia };

inline constexpr std::array<Platform, 5> kAllPlatforms = {
    Platform::kNews, Platform::kPolicy, Platform::kBlog, Platform::kWikipedia,
    Platform::kTwitter};

// Platforms whose posts contribute text terms (titles or summaries).
inline constexpr std::array<Platform, 4> kTextPlatforms = {
    Platform::kNews, Platform::kPolicy, Platform::kBlog, Platform::kWikipedia};

std::string_view PlatformName(Platform platform);
std::optional<Platform> ParsePlatform(std::string_view name);
std::string_view DocTypeName(DocType type);
std::optional<DocType> ParseDocType(std::string_view name);

struct Publication {
  std::string doi;
  std::string title;
  std::string abstract;
  std::vector<std::string> author_keywords;
  int year = 0;
  DocType doc_type = DocType::kArticle;
};

struct AltmetricEvent {
  std::string event_id;
  Platform platform = Platform::kTwitter;
  std::vector<std::string> dois;  // canonical, sorted, unique
  std::string text;
  std::string language;
  std::optional<std::string> timestamp;
};

// A problem with one input record. Line numbers are 1-based.
struct Diagnostic {
  enum class Severity { kWarning, kError };
  Severity severity = Severity::kError;
  size_t line = 0;
  std::string message;
};

struct PublicationLoad {
  std::vector<Publication> publications;
  std::vector<Diagnostic> diagnostics;
  size_t missing_doi = 0;
  size_t duplicates = 0;

  bool has_errors() const;
};

using PlatformCounts = std::map<Platform, int64_t>;

struct EventLoad {
  std::vector<AltmetricEvent> events;  // unique events, first occurrence kept
  PlatformCounts all_events;           // before deduplication
  PlatformCounts unique_events;
  std::vector<Diagnostic> diagnostics;
  size_t language_filtered = 0;

  bool has_errors() const;
};

// Lowercases, trims, and strips "https://doi.org/", "http://dx.doi.org/"
// and "doi:" style prefixes. Returns "" when nothing remains.
std::string CanonicalDoi(std::string_view raw);

// Key under which two events count as the same post: platform, DOI set and
// case-folded whitespace-collapsed text.
std::string EventDedupKey(const AltmetricEvent &event);

PublicationLoad LoadPublications(std::istream &in);

// With a language filter, events whose primary language subtag differs
// ("en-GB" matches "en") are dropped before deduplication.
EventLoad LoadEvents(std::istream &in,
                     const std::optional<std::string> &language_filter);

// Immutable after construction. Links hold indices into `events`.
class LinkedCorpus {
 public:
  LinkedCorpus() = default;

  const std::map<std::string, Publication> &publications() const {
    return publications_;
  }
  const std::vector<AltmetricEvent> &events() const { return events_; }
  const std::map<std::string, std::vector<size_t>> &links() const {
    return links_;
  }
  const PlatformCounts &all_event_counts() const { return all_events_; }

  // Event ids linked to `doi`, in event order.
  std::vector<std::string> LinkedEventIds(const std::string &doi) const;

  // Known publications an event links to (indices into events()).
  const std::vector<std::string> &KnownDois(size_t event_index) const {
    return event_dois_[event_index];
  }

 private:
  friend LinkedCorpus LinkCorpus(std::vector<Publication>,
                                 std::vector<AltmetricEvent>, PlatformCounts);

  std::map<std::string, Publication> publications_;
  std::vector<AltmetricEvent> events_;
  std::map<std::string, std::vector<size_t>> links_;
  std::vector<std::vector<std::string>> event_dois_;
  PlatformCounts all_events_;
};

// Links every (doi, event) pair where the event lists the doi and the doi is
// a known publication. `all_events` carries pre-deduplication counts for the
// coverage report; when empty, the retained events are counted instead.
LinkedCorpus LinkCorpus(std::vector<Publication> publications,
                        std::vector<AltmetricEvent> events,
                        PlatformCounts all_events = {});

struct PlatformCoverage {
  Platform platform;
  int64_t all_events = 0;
  int64_t unique_events = 0;
  int64_t mentioned_papers = 0;
  double share_pct = 0.0;
};

struct GroupCoverage {
  std::string name;
  int64_t mentioned_papers = 0;
  double share_pct = 0.0;
};

struct CoverageReport {
  int64_t publications = 0;
  std::vector<PlatformCoverage> platforms;  // news, policy, blog, wiki, twitter
  GroupCoverage text_group;                 // news, policy, blog, wikipedia
  GroupCoverage twitter_group;
  GroupCoverage both_groups;  // mentioned in both groups
  GroupCoverage grand_total;  // mentioned anywhere
};

// Throws kDomain when the corpus has no publications.
CoverageReport BuildCoverageReport(const LinkedCorpus &corpus);

}  // namespace topicshift

#endif  // TOPICSHIFT_CORPUS_H_
