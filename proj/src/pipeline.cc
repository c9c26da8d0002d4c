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

#include "topicshift/pipeline.h"

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "topicshift/appendix.h"
#include "topicshift/compare.h"
#include "topicshift/error.h"
#include "topicshift/format.h"
#include "topicshift/kernels.h"
#include "topicshift/linkage.h"
#include "topicshift/termext.h"
#include "topicshift/text.h"
#include "topicshift/topicsets.h"

namespace topicshift {

namespace {

namespace fs = std::filesystem;

constexpr TopicGroup kCompareOrder[] = {
    TopicGroup::kK,     TopicGroup::kH,     TopicGroup::kTAll,
    TopicGroup::kTBlog, TopicGroup::kTNews, TopicGroup::kTPolicy,
    TopicGroup::kTWikipedia};

bool UsesCorpus(const PipelineConfig &config) {
  return !config.publications.empty() || !config.events.empty();
}

void RequireReadable(const std::string &path, const std::string &what) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kMissingInput, "cannot read " + what + " " + path);
}

template <typename T>
T Get(const Json &json, const std::string &key) {
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception &) {
    Fail(ErrorKind::kSchema, "config key " + key + " has the wrong type");
  }
}

std::string DiagnosticText(const std::string &source, const Diagnostic &d) {
  return source + ":" + std::to_string(d.line) + ": " +
         (d.severity == Diagnostic::Severity::kError ? "error: " : "warning: ") +
         d.message;
}

void ReportDiagnostics(const std::string &source,
                       const std::vector<Diagnostic> &diagnostics, bool has_errors,
                       std::ostream &log) {
  std::string errors;
  for (const Diagnostic &d : diagnostics) {
    if (d.severity == Diagnostic::Severity::kError) {
      errors += "\n  " + DiagnosticText(source, d);
    } else {
      log << DiagnosticText(source, d) << "\n";
    }
  }
  if (has_errors) {
    Fail(ErrorKind::kSchema, "invalid records in " + source + ":" + errors);
  }
}

struct Extraction {
  std::vector<CandidateTerm> candidates;
  std::vector<Hashtag> hashtags;
  FrequencyTable k_full, t_full, h_full;
  std::map<Platform, FrequencyTable> t_platform;
  std::vector<std::vector<std::string>> keyword_docs;  // per publication
  std::map<std::string, std::vector<std::string>> keywords_by_doi;
  std::vector<std::vector<std::string>> event_labels;  // terms or hashtags
  std::vector<std::vector<std::string>> text_docs;     // text events only
  int64_t keyword_documents = 0;
  int64_t tweets = 0;
  int64_t text_events = 0;
  std::map<Platform, int64_t> platform_events;
  LabelIndex keyword_index, term_index;
  std::map<std::string, std::string> hashtag_display;
};

struct Topics {
  bool from_fixture = false;
  TopicSet k, h, t_all;
  std::map<TopicGroup, TopicSet> by_group;
  FrequencyTable k_full, t_full, h_full;
  std::map<Platform, FrequencyTable> t_platform;
  std::vector<GroupShares> shares;
};

struct Maps {
  TermGraph keywords;
  TermGraph terms;
  std::vector<std::string> overlay_sources;
  std::vector<OverlayScore> overlay;  // per terms node
};

struct Linkages {
  LinkageNetwork terms, hashtags;
  LinkageNetwork top_terms, top_hashtags;
};

class Session {
 public:
  Session(const PipelineConfig &config, std::ostream &log)
      : config_(config), log_(log) {}

  const LinkedCorpus &Corpus();
  const CoverageReport &Coverage();
  const Extraction &Extract();
  const Topics &TopicSets();
  const Maps &Map();
  const Linkages &Linkage();
  std::string Display(const std::string &canonical);

  void Write(const std::string &name, const std::string &content);
  const std::vector<std::string> &written() const { return written_; }

 private:
  void LoadResources();

  const PipelineConfig &config_;
  std::ostream &log_;
  std::vector<std::string> written_;

  std::unique_ptr<Tagger> tagger_;
  std::unique_ptr<Tokenizer> tokenizer_;
  NounStoplist stoplist_;
  std::unique_ptr<LabelNormalizer> normalizer_;

  std::optional<LinkedCorpus> corpus_;
  std::optional<CoverageReport> coverage_;
  std::optional<Extraction> extraction_;
  std::optional<Topics> topics_;
  std::optional<Maps> maps_;
  std::optional<Linkages> linkages_;
  std::map<std::string, std::string> fixture_display_;
};

void Session::Write(const std::string &name, const std::string &content) {
  fs::path dir(config_.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content) || !out.flush()) {
    Fail(ErrorKind::kMissingInput, "cannot write " + (dir / name).string());
  }
  written_.push_back(name);
  log_ << "wrote " << (dir / name).string() << "\n";
}

void Session::LoadResources() {
  if (normalizer_) return;
  tagger_ = std::make_unique<Tagger>();
  tokenizer_ = std::make_unique<Tokenizer>();
  normalizer_ = std::make_unique<LabelNormalizer>();
  if (!config_.tagger_lexicon.empty()) tagger_->LoadLexicon(config_.tagger_lexicon);
  if (!config_.sentence_abbreviations.empty()) {
    tokenizer_->LoadAbbreviations(config_.sentence_abbreviations);
  }
  if (!config_.noun_stoplist.empty()) {
    stoplist_ = LoadNounStoplist(config_.noun_stoplist);
  }
  if (!config_.label_abbreviations.empty()) {
    normalizer_->LoadAbbreviations(config_.label_abbreviations);
  }
}

const LinkedCorpus &Session::Corpus() {
  if (corpus_) return *corpus_;
  if (config_.publications.empty() || config_.events.empty()) {
    Fail(ErrorKind::kMissingInput,
         "this command needs both --publications and --events");
  }
  std::ifstream pubs_in(config_.publications);
  if (!pubs_in) Fail(ErrorKind::kMissingInput, "cannot read " + config_.publications);
  PublicationLoad pubs = LoadPublications(pubs_in);
  ReportDiagnostics(config_.publications, pubs.diagnostics, pubs.has_errors(), log_);

  std::ifstream events_in(config_.events);
  if (!events_in) Fail(ErrorKind::kMissingInput, "cannot read " + config_.events);
  std::optional<std::string> language;
  if (!config_.language.empty()) language = config_.language;
  EventLoad events = LoadEvents(events_in, language);
  ReportDiagnostics(config_.events, events.diagnostics, events.has_errors(), log_);

  std::set<Platform> selected(config_.platforms.begin(), config_.platforms.end());
  std::vector<AltmetricEvent> kept;
  for (AltmetricEvent &e : events.events) {
    if (selected.count(e.platform)) kept.push_back(std::move(e));
  }
  PlatformCounts all_events;
  for (const auto &[platform, count] : events.all_events) {
    if (selected.count(platform)) all_events[platform] = count;
  }
  corpus_ = LinkCorpus(std::move(pubs.publications), std::move(kept), all_events);
  return *corpus_;
}

const CoverageReport &Session::Coverage() {
  if (!coverage_) coverage_ = BuildCoverageReport(Corpus());
  return *coverage_;
}

const Extraction &Session::Extract() {
  if (extraction_) return *extraction_;
  const LinkedCorpus &corpus = Corpus();
  LoadResources();
  Extraction x;

  // Author keywords, one document per publication.
  std::vector<std::vector<std::string>> raw_keywords;
  std::vector<std::string> dois;
  for (const auto &[doi, pub] : corpus.publications()) {
    raw_keywords.push_back(pub.author_keywords);
    dois.push_back(doi);
  }
  x.keyword_docs = NormalizeDocuments(raw_keywords, *normalizer_, &x.keyword_index);
  for (size_t p = 0; p < dois.size(); ++p) {
    std::set<std::string> unique(x.keyword_docs[p].begin(), x.keyword_docs[p].end());
    x.keyword_docs[p].assign(unique.begin(), unique.end());
    x.keywords_by_doi[dois[p]] = x.keyword_docs[p];
    if (!unique.empty()) ++x.keyword_documents;
  }
  for (const auto &[label, count] : CountOccurrences(x.keyword_docs)) {
    if (count >= config_.min_occurrences_keywords) x.k_full[label] = count;
  }

  // Noun phrases from titles and summary first sentences.
  const auto &events = corpus.events();
  const int64_t n = static_cast<int64_t>(events.size());
  std::vector<std::vector<std::string>> phrase_labels(events.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t e = 0; e < n; ++e) {
    if (events[e].platform == Platform::kTwitter) continue;
    std::string text = events[e].platform == Platform::kWikipedia
                           ? FirstSentence(events[e].text)
                           : events[e].text;
    for (const Phrase &phrase : ExtractCandidatePhrases(
             tokenizer_->Tokenize(text, *tagger_), stoplist_)) {
      phrase_labels[e].push_back(phrase.label);
    }
  }
  std::vector<std::vector<std::string>> canonical =
      NormalizeDocuments(phrase_labels, *normalizer_, &x.term_index);
  std::vector<size_t> text_event_index;
  for (size_t e = 0; e < events.size(); ++e) {
    if (events[e].platform == Platform::kTwitter) continue;
    std::set<std::string> unique(canonical[e].begin(), canonical[e].end());
    x.text_docs.emplace_back(unique.begin(), unique.end());
    text_event_index.push_back(e);
    ++x.platform_events[events[e].platform];
  }
  x.text_events = static_cast<int64_t>(x.text_docs.size());
  RelevanceOptions options{config_.relevance_fraction, config_.min_occurrences};
  x.candidates = ScoreRelevance(BuildCandidates(x.text_docs, options), options);
  std::set<std::string> retained;
  for (const CandidateTerm &term : x.candidates) {
    if (term.retained) retained.insert(term.label);
  }
  x.event_labels.assign(events.size(), {});
  for (size_t d = 0; d < x.text_docs.size(); ++d) {
    std::vector<std::string> kept;
    for (const std::string &label : x.text_docs[d]) {
      if (retained.count(label)) kept.push_back(label);
    }
    x.text_docs[d] = kept;
    Platform platform = events[text_event_index[d]].platform;
    for (const std::string &label : kept) {
      ++x.t_full[label];
      ++x.t_platform[platform][label];
    }
    x.event_labels[text_event_index[d]] = std::move(kept);
  }

  // Hashtags, merged by their canonical label.
  std::vector<std::string> tweets;
  std::vector<size_t> tweet_index;
  for (size_t e = 0; e < events.size(); ++e) {
    if (events[e].platform != Platform::kTwitter) continue;
    tweets.push_back(events[e].text);
    tweet_index.push_back(e);
  }
  x.tweets = static_cast<int64_t>(tweets.size());
  x.platform_events[Platform::kTwitter] = x.tweets;
  x.hashtags = CountHashtags(tweets);
  std::map<std::string, std::string> tag_label;
  std::map<std::string, int64_t> display_weight;
  for (const Hashtag &tag : x.hashtags) {
    std::string words = SplitHashtagWords(tag.display);
    if (CollapseWhitespace(words).empty()) continue;
    std::string label = normalizer_->Normalize(words);
    tag_label[tag.canonical] = label;
    if (tag.frequency > display_weight[label]) {
      display_weight[label] = tag.frequency;
      x.hashtag_display[label] = CollapseWhitespace(words);
    }
  }
  std::vector<std::vector<std::string>> tweet_docs(tweets.size());
  for (size_t t = 0; t < tweets.size(); ++t) {
    std::set<std::string> labels;
    for (const HashtagOccurrence &occurrence : ExtractHashtags(tweets[t])) {
      auto it = tag_label.find(occurrence.canonical);
      if (it != tag_label.end()) labels.insert(it->second);
    }
    tweet_docs[t].assign(labels.begin(), labels.end());
    x.event_labels[tweet_index[t]] = tweet_docs[t];
  }
  x.h_full = CountOccurrences(tweet_docs);

  log_ << "extracted " << x.k_full.size() << " keywords, " << retained.size()
       << " of " << x.candidates.size() << " candidate terms, " << x.h_full.size()
       << " hashtags\n";
  extraction_ = std::move(x);
  return *extraction_;
}

const Topics &Session::TopicSets() {
  if (topics_) return *topics_;
  Topics t;
  std::map<TopicGroup, std::pair<int64_t, int64_t>> totals;  // occurrences, docs
  auto sum = [](const FrequencyTable &table) {
    int64_t total = 0;
    for (const auto &[label, f] : table) total += f;
    return total;
  };
  if (UsesCorpus(config_)) {
    const Extraction &x = Extract();
    t.k_full = x.k_full;
    t.t_full = x.t_full;
    t.h_full = x.h_full;
    t.t_platform = x.t_platform;
    totals[TopicGroup::kK] = {sum(t.k_full), x.keyword_documents};
    totals[TopicGroup::kH] = {sum(t.h_full), x.tweets};
    totals[TopicGroup::kTAll] = {sum(t.t_full), x.text_events};
    for (Platform p : kTextPlatforms) {
      auto it = x.platform_events.find(p);
      totals[PlatformGroup(p)] = {sum(t.t_platform[p]),
                                  it == x.platform_events.end() ? 0 : it->second};
    }
  } else {
    if (config_.fixture.empty()) {
      Fail(ErrorKind::kMissingInput,
           "give --fixture or both --publications and --events");
    }
    LoadResources();
    AppendixTable table = LoadAppendixFile(config_.fixture, *normalizer_);
    for (const AppendixRow &row : table.rows()) {
      fixture_display_[row.canonical] = row.topic;
    }
    t.from_fixture = true;
    t.k_full = table.Keywords();
    t.t_full = table.Terms();
    t.h_full = table.Hashtags();
    for (Platform p : kTextPlatforms) t.t_platform[p] = table.PlatformTerms(p);
    // The table has no document counts; shares of documents equal shares
    // of occurrences.
    totals[TopicGroup::kK] = {sum(t.k_full), sum(t.k_full)};
    totals[TopicGroup::kH] = {sum(t.h_full), sum(t.h_full)};
    totals[TopicGroup::kTAll] = {sum(t.t_full), sum(t.t_full)};
    for (Platform p : kTextPlatforms) {
      int64_t s = sum(t.t_platform[p]);
      totals[PlatformGroup(p)] = {s, s};
    }
  }

  t.k = BuildTopicSet(TopicGroup::kK, t.k_full, config_.top_n);
  t.h = BuildTopicSet(TopicGroup::kH, t.h_full, config_.top_n);
  t.t_all = BuildTopicSet(TopicGroup::kTAll, t.t_full, config_.top_n);
  t.by_group[TopicGroup::kK] = t.k;
  t.by_group[TopicGroup::kH] = t.h;
  t.by_group[TopicGroup::kTAll] = t.t_all;
  for (Platform p : kTextPlatforms) {
    t.by_group[PlatformGroup(p)] =
        RestrictToPlatform(t.t_all, PlatformGroup(p), t.t_platform[p]);
  }
  for (TopicGroup group : kCompareOrder) {
    const auto &[occurrences, documents] = totals[group];
    if (occurrences <= 0 || documents <= 0) continue;
    FrequencyTable docs;
    if (group == TopicGroup::kK) docs = t.k_full;
    t.shares.push_back({group, ShareStatistics(t.by_group[group], docs,
                                               occurrences, documents)});
  }
  topics_ = std::move(t);
  return *topics_;
}

const Maps &Session::Map() {
  if (maps_) return *maps_;
  const Extraction &x = Extract();
  const Topics &t = TopicSets();
  Maps m;
  LayoutOptions layout;
  layout.max_iterations = config_.layout_iterations;
  layout.seed = config_.cluster.seed;
  auto build = [&](const std::vector<std::vector<std::string>> &docs,
                   const TopicSet &set) {
    TermGraph graph = AssociationStrength(CooccurrenceGraph(docs, set));
    graph = Cluster(std::move(graph), config_.cluster);
    return Layout(std::move(graph), layout);
  };
  m.keywords = build(x.keyword_docs, t.k);
  m.terms = build(x.text_docs, t.t_all);

  std::vector<NamedFrequencies> sources;
  for (Platform p : kTextPlatforms) {
    auto it = t.t_platform.find(p);
    if (it == t.t_platform.end()) continue;
    sources.emplace_back(std::string(PlatformName(p)), it->second);
    m.overlay_sources.emplace_back(PlatformName(p));
  }
  if (sources.size() >= 2 && !m.terms.nodes.empty()) {
    std::vector<std::string> labels;
    for (const TermNode &node : m.terms.nodes) labels.push_back(node.label);
    m.overlay = OverlayScores(sources, labels);
  } else {
    m.overlay_sources.clear();
  }
  maps_ = std::move(m);
  return *maps_;
}

const Linkages &Session::Linkage() {
  if (linkages_) return *linkages_;
  const Extraction &x = Extract();
  const Topics &t = TopicSets();
  const LinkedCorpus &corpus = Corpus();
  std::map<std::string, std::vector<std::string>> keywords;
  for (const auto &[doi, labels] : x.keywords_by_doi) {
    for (const std::string &label : labels) {
      if (t.k.contains(label)) keywords[doi].push_back(label);
    }
  }
  std::vector<std::vector<std::string>> terms(corpus.events().size());
  for (size_t e = 0; e < corpus.events().size(); ++e) {
    const TopicSet &set =
        corpus.events()[e].platform == Platform::kTwitter ? t.h : t.t_all;
    for (const std::string &label : x.event_labels[e]) {
      if (set.contains(label)) terms[e].push_back(label);
    }
  }
  Linkages l;
  std::set<Platform> text(kTextPlatforms.begin(), kTextPlatforms.end());
  l.terms = BuildLinkage(corpus, keywords, terms, text);
  l.hashtags = BuildLinkage(corpus, keywords, terms, {Platform::kTwitter});
  l.top_terms = TopkLinked(l.terms, config_.linkage_keywords, config_.linkage_terms);
  l.top_hashtags =
      TopkLinked(l.hashtags, config_.linkage_keywords, config_.linkage_terms);
  linkages_ = std::move(l);
  return *linkages_;
}

std::string Session::Display(const std::string &canonical) {
  if (auto it = fixture_display_.find(canonical); it != fixture_display_.end()) {
    return it->second;
  }
  if (extraction_) {
    for (const LabelIndex *index : {&extraction_->keyword_index, &extraction_->term_index}) {
      if (auto it = index->find(canonical); it != index->end()) {
        return it->second.Display();
      }
    }
    if (auto it = extraction_->hashtag_display.find(canonical);
        it != extraction_->hashtag_display.end()) {
      return it->second;
    }
  }
  return canonical;
}

SimilarityMatrix Similarity(const Topics &t, bool weighted) {
  std::vector<NamedTopicSet> sets;
  for (TopicGroup group : kCompareOrder) {
    sets.emplace_back(std::string(GroupName(group)), t.by_group.at(group));
  }
  return PairwiseMatrix(sets, weighted);
}

Json LinkageSummary(const LinkageNetwork &top) {
  Json rows = Json::array();
  for (const std::string &keyword : top.left) {
    Json terms = Json::array();
    for (const auto &[pair, weight] : top.edges) {
      if (pair.first != keyword) continue;
      terms.push_back({{"term", pair.second},
                       {"weight", weight},
                       {"mention_rate_pct",
                        RoundHalfAway(MentionRate(top, keyword, pair.second), 2)}});
    }
    rows.push_back({{"keyword", keyword},
                    {"mentions", top.keyword_mentions.at(keyword)},
                    {"terms", terms}});
  }
  return rows;
}

int ClusterCount(const TermGraph &graph) {
  int k = 0;
  for (int c : graph.clusters) k = std::max(k, c);
  return k;
}

void RunIngest(Session &s) {
  s.Write("coverage.json", Dump(CoverageJson(s.Coverage())));
  s.Write("coverage.csv", CoverageCsv(s.Coverage()));
}

void RunExtract(Session &s) {
  const Extraction &x = s.Extract();
  s.Write("terms.csv", CandidateTermsCsv(x.candidates));
  s.Write("hashtags.csv", HashtagsCsv(x.hashtags));
}

void RunTopics(Session &s) { s.Write("topic_sets.csv", TopicSetCsv(s.TopicSets().shares)); }

void RunCompare(Session &s, const PipelineConfig &config) {
  const Topics &t = s.TopicSets();
  SimilarityMatrix matrix = Similarity(t, config.weighted_cosine);
  s.Write("similarity.csv", SimilarityCsv(matrix));
  s.Write("similarity.json", Dump(SimilarityJson(matrix)));
  s.Write("venn.json", Dump(VennJson(VennPartition(t.k, t.t_all, t.h))));
  s.Write("classification.csv", ClassificationCsv(ClassifyTopics(t.k, t.t_all, t.h)));
  auto shifts = RankingShift(CommonTopics(t.k, t.t_all, t.h), t.k_full, t.t_full,
                             t.h_full);
  s.Write("rank_shifts.csv", RankShiftCsv(shifts));
  s.Write("rank_shifts.json", Dump(RankShiftJson(shifts)));
}

void RunMap(Session &s) {
  const Maps &m = s.Map();
  DisplayFn display = [&s](const std::string &label) { return s.Display(label); };
  s.Write("graph_keywords.json", Dump(GraphJson(m.keywords, {}, {}, display)));
  s.Write("edges_keywords.csv", EdgeListCsv(m.keywords));
  s.Write("term_map_keywords.svg", TermMapSvg(m.keywords, display));
  s.Write("graph_terms.json",
          Dump(GraphJson(m.terms, m.overlay_sources, m.overlay, display)));
  s.Write("edges_terms.csv", EdgeListCsv(m.terms));
  s.Write("term_map_terms.svg", TermMapSvg(m.terms, display));
}

void RunLinkage(Session &s) {
  const Linkages &l = s.Linkage();
  s.Write("linkage_terms.json", Dump(LinkageJson(l.top_terms)));
  s.Write("linkage_terms.dot", LinkageDot(l.top_terms, "keywords_terms"));
  s.Write("linkage_hashtags.json", Dump(LinkageJson(l.top_hashtags)));
  s.Write("linkage_hashtags.dot", LinkageDot(l.top_hashtags, "keywords_hashtags"));
}

void RunReport(Session &s, const PipelineConfig &config) {
  const Topics &t = s.TopicSets();
  DisplayFn display = [&s](const std::string &label) { return s.Display(label); };
  Json report;
  report["coverage"] = CoverageJson(s.Coverage());
  Json sizes = Json::object();
  for (TopicGroup group : kCompareOrder) {
    sizes[std::string(GroupName(group))] = t.by_group.at(group).size();
  }
  report["topic_sets"] = sizes;
  report["similarity"] = SimilarityJson(Similarity(t, config.weighted_cosine));
  report["venn"] = VennJson(VennPartition(t.k, t.t_all, t.h));
  Json classes = Json::object();
  for (TopicType type : kAllTopicTypes) classes[std::string(TopicTypeName(type))] = Json::array();
  for (const auto &[label, type] : ClassifyTopics(t.k, t.t_all, t.h)) {
    classes[std::string(TopicTypeName(type))].push_back(label);
  }
  report["classification"] = classes;
  report["rank_shifts"] = RankShiftJson(
      RankingShift(CommonTopics(t.k, t.t_all, t.h), t.k_full, t.t_full, t.h_full));
  const Maps &m = s.Map();
  report["clusters"] = {{"keywords", ClusterCount(m.keywords)},
                        {"terms", ClusterCount(m.terms)},
                        {"resolution", config.cluster.resolution}};
  const Linkages &l = s.Linkage();
  report["linkage"] = {{"terms", LinkageSummary(l.top_terms)},
                       {"hashtags", LinkageSummary(l.top_hashtags)}};
  s.Write("report.json", Dump(report));
  s.Write("term_map.svg", TermMapSvg(m.keywords, display));
  Json cloud = Json::array();
  for (const TopicSet *set : {&t.k, &t.t_all, &t.h}) {
    cloud.push_back(WordCloudJson(*set, display));
  }
  s.Write("wordcloud.json", Dump(cloud));
}

std::vector<std::string> PlatformNames(const std::vector<Platform> &platforms) {
  std::vector<std::string> names;
  for (Platform p : platforms) names.emplace_back(PlatformName(p));
  return names;
}

}  // namespace

PipelineConfig DefaultConfig() {
  PipelineConfig config;
  const std::string data = TOPICSHIFT_DATA_DIR;
  config.noun_stoplist = data + "/lexicon/noun_stoplist.txt";
  config.sentence_abbreviations = data + "/lexicon/sentence_abbreviations.txt";
  config.label_abbreviations = data + "/lexicon/label_abbreviations.tsv";
  return config;
}

Json ConfigToJson(const PipelineConfig &c) {
  return {{"publications", c.publications},
          {"events", c.events},
          {"fixture", c.fixture},
          {"platforms", PlatformNames(c.platforms)},
          {"language", c.language},
          {"top_n", c.top_n},
          {"relevance_fraction", c.relevance_fraction},
          {"min_occurrences", c.min_occurrences},
          {"min_occurrences_keywords", c.min_occurrences_keywords},
          {"resolution", c.cluster.resolution},
          {"min_cluster_size", c.cluster.min_cluster_size},
          {"merge_small", c.cluster.merge_small},
          {"seed", c.cluster.seed},
          {"restarts", c.cluster.restarts},
          {"layout_iterations", c.layout_iterations},
          {"linkage_keywords", c.linkage_keywords},
          {"linkage_terms", c.linkage_terms},
          {"weighted_cosine", c.weighted_cosine},
          {"tagger_lexicon", c.tagger_lexicon},
          {"noun_stoplist", c.noun_stoplist},
          {"sentence_abbreviations", c.sentence_abbreviations},
          {"label_abbreviations", c.label_abbreviations},
          {"output", c.output},
          {"threads", c.threads}};
}

void ApplyConfigJson(const Json &json, PipelineConfig *c) {
  if (!json.is_object()) Fail(ErrorKind::kSchema, "config must be a JSON object");
  const Json known = ConfigToJson(*c);
  for (const auto &[key, value] : json.items()) {
    if (!known.contains(key)) Fail(ErrorKind::kSchema, "unknown config key " + key);
  }
  auto str = [&](const char *key, std::string &field) {
    if (json.contains(key)) field = Get<std::string>(json, key);
  };
  str("publications", c->publications);
  str("events", c->events);
  str("fixture", c->fixture);
  str("language", c->language);
  str("tagger_lexicon", c->tagger_lexicon);
  str("noun_stoplist", c->noun_stoplist);
  str("sentence_abbreviations", c->sentence_abbreviations);
  str("label_abbreviations", c->label_abbreviations);
  str("output", c->output);
  if (json.contains("platforms")) {
    c->platforms.clear();
    for (const std::string &name : Get<std::vector<std::string>>(json, "platforms")) {
      auto platform = ParsePlatform(name);
      if (!platform) Fail(ErrorKind::kSchema, "unknown platform " + name);
      c->platforms.push_back(*platform);
    }
  }
  if (json.contains("top_n")) c->top_n = Get<int>(json, "top_n");
  if (json.contains("relevance_fraction")) {
    c->relevance_fraction = Get<double>(json, "relevance_fraction");
  }
  if (json.contains("min_occurrences")) {
    c->min_occurrences = Get<int64_t>(json, "min_occurrences");
  }
  if (json.contains("min_occurrences_keywords")) {
    c->min_occurrences_keywords = Get<int64_t>(json, "min_occurrences_keywords");
  }
  if (json.contains("resolution")) c->cluster.resolution = Get<double>(json, "resolution");
  if (json.contains("min_cluster_size")) {
    c->cluster.min_cluster_size = Get<int>(json, "min_cluster_size");
  }
  if (json.contains("merge_small")) c->cluster.merge_small = Get<bool>(json, "merge_small");
  if (json.contains("seed")) c->cluster.seed = Get<uint64_t>(json, "seed");
  if (json.contains("restarts")) c->cluster.restarts = Get<int>(json, "restarts");
  if (json.contains("layout_iterations")) {
    c->layout_iterations = Get<int>(json, "layout_iterations");
  }
  if (json.contains("linkage_keywords")) {
    c->linkage_keywords = Get<int>(json, "linkage_keywords");
  }
  if (json.contains("linkage_terms")) c->linkage_terms = Get<int>(json, "linkage_terms");
  if (json.contains("weighted_cosine")) {
    c->weighted_cosine = Get<bool>(json, "weighted_cosine");
  }
  if (json.contains("threads")) c->threads = Get<int>(json, "threads");
}

void ApplyConfigFile(const std::string &path, PipelineConfig *config) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kMissingInput, "cannot read config " + path);
  Json json;
  try {
    json = Json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    Fail(ErrorKind::kSchema, "config " + path + " is not valid JSON: " + e.what());
  }
  ApplyConfigJson(json, config);
}

const std::vector<std::string> &Commands() {
  static const std::vector<std::string> commands = {
      "ingest", "extract", "topics", "compare", "map", "linkage", "report", "all"};
  return commands;
}

void ValidateConfig(const PipelineConfig &c, const std::string &command) {
  const auto &commands = Commands();
  if (std::find(commands.begin(), commands.end(), command) == commands.end()) {
    Fail(ErrorKind::kInvalidArgument, "unknown command " + command);
  }
  auto check = [](bool ok, const char *message) {
    if (!ok) Fail(ErrorKind::kInvalidArgument, message);
  };
  check(c.top_n >= 1, "top_n must be ≥ 1");
  check(c.relevance_fraction > 0.0 && c.relevance_fraction <= 1.0,
        "relevance_fraction must be in (0, 1]");
  check(c.min_occurrences >= 1, "min_occurrences must be ≥ 1");
  check(c.min_occurrences_keywords >= 1, "min_occurrences_keywords must be ≥ 1");
  check(c.cluster.resolution > 0.0, "resolution must be > 0");
  check(c.cluster.min_cluster_size >= 1, "min_cluster_size must be ≥ 1");
  check(c.cluster.restarts >= 1, "restarts must be ≥ 1");
  check(c.layout_iterations >= 1, "layout_iterations must be ≥ 1");
  check(c.linkage_keywords >= 1 && c.linkage_terms >= 1,
        "linkage_keywords and linkage_terms must be ≥ 1");
  check(c.threads >= 0, "threads must be ≥ 0");
  check(!c.platforms.empty(), "platforms must not be empty");
  check(!c.output.empty(), "output must not be empty");

  bool fixture_ok = command == "topics" || command == "compare";
  if (!UsesCorpus(c) && !(fixture_ok && !c.fixture.empty())) {
    Fail(ErrorKind::kMissingInput,
         fixture_ok ? "give --fixture or both --publications and --events"
                    : "this command needs both --publications and --events");
  }
  if (UsesCorpus(c) && (c.publications.empty() || c.events.empty())) {
    Fail(ErrorKind::kMissingInput, "give both --publications and --events");
  }
  if (!c.publications.empty()) RequireReadable(c.publications, "publications");
  if (!c.events.empty()) RequireReadable(c.events, "events");
  if (!c.fixture.empty()) RequireReadable(c.fixture, "fixture");
  if (!c.tagger_lexicon.empty()) RequireReadable(c.tagger_lexicon, "tagger lexicon");
  if (!c.noun_stoplist.empty()) RequireReadable(c.noun_stoplist, "noun stoplist");
  if (!c.sentence_abbreviations.empty()) {
    RequireReadable(c.sentence_abbreviations, "sentence abbreviations");
  }
  if (!c.label_abbreviations.empty()) {
    RequireReadable(c.label_abbreviations, "label abbreviations");
  }
}

std::vector<std::string> RunCommand(const std::string &command,
                                    const PipelineConfig &config,
                                    std::ostream &log) {
  ValidateConfig(config, command);
  kernels::SetThreadCount(config.threads);
  Session session(config, log);
  const bool all = command == "all";
  if (command == "ingest" || all) RunIngest(session);
  if (command == "extract" || all) RunExtract(session);
  if (command == "topics" || all) RunTopics(session);
  if (command == "compare" || all) RunCompare(session, config);
  if (command == "map" || all) RunMap(session);
  if (command == "linkage" || all) RunLinkage(session);
  if (command == "report" || all) RunReport(session, config);
  return session.written();
}

std::string SplitHashtagWords(const std::string &tag) {
  std::vector<CodePoint> cps = DecodeUtf8(tag);
  std::string out;
  for (size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i].value;
    if (c == '_') {
      out += ' ';
      continue;
    }
    bool next_lower = i + 1 < cps.size() && IsLower(cps[i + 1].value);
    if (i > 0 && IsUpper(c) && next_lower) {
      bool after_lower = IsLower(cps[i - 1].value);
      bool after_acronym = i > 1 && IsUpper(cps[i - 1].value) && IsUpper(cps[i - 2].value);
      if (after_lower || after_acronym) out += ' ';
    }
    out.append(tag, cps[i].begin, cps[i].end - cps[i].begin);
  }
  return out;
}

}  // namespace topicshift
