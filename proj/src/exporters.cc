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

#include "topicshift/exporters.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "topicshift/format.h"

namespace topicshift {

namespace {

constexpr const char *kPalette[12] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#ffbb78"};
constexpr const char *kAbsentColor = "#c8c8c8";

constexpr double kCanvas = 800.0;
constexpr double kMargin = 60.0;
constexpr double kMinRadius = 4.0;
constexpr double kMaxRadius = 28.0;

Json Share(double value) { return RoundHalfAway(value, 2); }

std::string XmlEscape(const std::string &text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string DotQuote(const std::string &text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json OptionalRank(const std::optional<int> &rank) {
  return rank ? Json(*rank) : Json(nullptr);
}

std::string RankCell(const std::optional<int> &rank) {
  return rank ? std::to_string(*rank) : "";
}

}  // namespace

std::string Dump(const Json &json) { return json.dump(2) + "\n"; }

Json CoverageJson(const CoverageReport &report) {
  Json platforms = Json::array();
  for (const PlatformCoverage &p : report.platforms) {
    platforms.push_back({{"platform", PlatformName(p.platform)},
                         {"all_events", p.all_events},
                         {"unique_events", p.unique_events},
                         {"mentioned_papers", p.mentioned_papers},
                         {"share_pct", Share(p.share_pct)}});
  }
  Json groups = Json::array();
  for (const GroupCoverage *g : {&report.text_group, &report.twitter_group,
                                 &report.both_groups, &report.grand_total}) {
    groups.push_back({{"group", g->name},
                      {"mentioned_papers", g->mentioned_papers},
                      {"share_pct", Share(g->share_pct)}});
  }
  return {{"publications", report.publications},
          {"platforms", platforms},
          {"groups", groups}};
}

std::string CoverageCsv(const CoverageReport &report) {
  std::ostringstream out;
  out << "platform,all_events,unique_events,mentioned_papers,share_pct\n";
  for (const PlatformCoverage &p : report.platforms) {
    out << PlatformName(p.platform) << ',' << p.all_events << ','
        << p.unique_events << ',' << p.mentioned_papers << ','
        << FormatFixed(p.share_pct, 2) << '\n';
  }
  for (const GroupCoverage *g : {&report.text_group, &report.twitter_group,
                                 &report.both_groups, &report.grand_total}) {
    out << g->name << ",,," << g->mentioned_papers << ','
        << FormatFixed(g->share_pct, 2) << '\n';
  }
  return out.str();
}

std::string TopicSetCsv(const std::vector<GroupShares> &groups) {
  std::ostringstream out;
  out << "group,canonical,frequency,share_pct,share_docs_pct\n";
  for (const GroupShares &g : groups) {
    for (const ShareRow &row : g.rows) {
      out << GroupName(g.group) << ',' << CsvField(row.label) << ','
          << row.frequency << ',' << FormatFixed(row.share_pct, 2) << ','
          << FormatFixed(row.share_docs_pct, 2) << '\n';
    }
  }
  return out.str();
}

std::string SimilarityCsv(const SimilarityMatrix &matrix) {
  std::ostringstream out;
  out << "group";
  for (const std::string &id : matrix.ids) out << ',' << CsvField(id);
  out << '\n';
  for (size_t i = 0; i < matrix.ids.size(); ++i) {
    out << CsvField(matrix.ids[i]);
    for (size_t j = 0; j < matrix.ids.size(); ++j) {
      out << ',' << FormatFixed(matrix.values[i][j], 4);
    }
    out << '\n';
  }
  return out.str();
}

Json SimilarityJson(const SimilarityMatrix &matrix) {
  Json values = Json::array(), intersections = Json::array();
  for (size_t i = 0; i < matrix.ids.size(); ++i) {
    Json value_row = Json::array(), common_row = Json::array();
    for (size_t j = 0; j < matrix.ids.size(); ++j) {
      value_row.push_back(RoundHalfAway(matrix.values[i][j], 4));
      common_row.push_back(matrix.intersections[i][j]);
    }
    values.push_back(value_row);
    intersections.push_back(common_row);
  }
  return {{"groups", matrix.ids},
          {"sizes", matrix.sizes},
          {"values", values},
          {"intersections", intersections}};
}

Json VennJson(const VennCounts &counts) {
  Json regions = Json::object();
  for (TopicType type : kAllTopicTypes) {
    regions[std::string(TopicTypeName(type))] = counts.regions.at(type);
  }
  return {{"regions", regions}, {"union", counts.union_size}};
}

std::string ClassificationCsv(const std::map<std::string, TopicType> &types) {
  std::ostringstream out;
  out << "canonical,type\n";
  for (const auto &[label, type] : types) {
    out << CsvField(label) << ',' << TopicTypeName(type) << '\n';
  }
  return out.str();
}

Json RankShiftJson(const std::vector<RankShift> &shifts) {
  Json rows = Json::array();
  for (const RankShift &s : shifts) {
    rows.push_back({{"topic", s.topic},
                    {"rank_k", OptionalRank(s.rank_k)},
                    {"rank_t", OptionalRank(s.rank_t)},
                    {"rank_h", OptionalRank(s.rank_h)},
                    {"t_direction", DirectionName(s.t_direction)},
                    {"h_direction", DirectionName(s.h_direction)}});
  }
  return rows;
}

std::string RankShiftCsv(const std::vector<RankShift> &shifts) {
  std::ostringstream out;
  out << "topic,rank_k,rank_t,rank_h,t_direction,h_direction\n";
  for (const RankShift &s : shifts) {
    out << CsvField(s.topic) << ',' << RankCell(s.rank_k) << ','
        << RankCell(s.rank_t) << ',' << RankCell(s.rank_h) << ','
        << DirectionName(s.t_direction) << ',' << DirectionName(s.h_direction)
        << '\n';
  }
  return out.str();
}

std::string CandidateTermsCsv(const std::vector<CandidateTerm> &terms) {
  std::ostringstream out;
  out << "label,doc_frequency,relevance,retained\n";
  for (const CandidateTerm &t : terms) {
    out << CsvField(t.label) << ',' << t.doc_frequency << ','
        << FormatFixed(t.relevance, 6) << ',' << (t.retained ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string HashtagsCsv(const std::vector<Hashtag> &hashtags) {
  std::ostringstream out;
  out << "canonical,display,frequency\n";
  for (const Hashtag &h : hashtags) {
    out << CsvField(h.canonical) << ',' << CsvField(h.display) << ','
        << h.frequency << '\n';
  }
  return out.str();
}

Json GraphJson(const TermGraph &graph, const std::vector<std::string> &sources,
               const std::vector<OverlayScore> &overlay, const DisplayFn &display) {
  Json nodes = Json::array();
  for (size_t i = 0; i < graph.nodes.size(); ++i) {
    Json node = {{"id", i},
                 {"label", graph.nodes[i].label},
                 {"display", display(graph.nodes[i].label)},
                 {"occurrences", graph.nodes[i].occurrences}};
    node["cluster"] = graph.clusters.empty() ? Json(nullptr) : Json(graph.clusters[i]);
    if (graph.positions.empty()) {
      node["position"] = nullptr;
    } else {
      node["position"] = {RoundHalfAway(graph.positions[i].x, 6),
                          RoundHalfAway(graph.positions[i].y, 6)};
    }
    if (!overlay.empty()) {
      Json scores = Json::array();
      for (size_t s = 0; s < sources.size(); ++s) {
        scores.push_back({{"source", sources[s]},
                          {"raw", overlay[i].raw[s]},
                          {"score", RoundHalfAway(overlay[i].normalized[s], 6)},
                          {"present", static_cast<bool>(overlay[i].present[s])}});
      }
      node["overlay"] = scores;
    }
    nodes.push_back(node);
  }
  Json edges = Json::array();
  for (const TermEdge &e : graph.edges) {
    edges.push_back({{"source", e.a},
                     {"target", e.b},
                     {"c", e.count},
                     {"s", RoundHalfAway(e.strength, 6)}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

std::string EdgeListCsv(const TermGraph &graph) {
  std::ostringstream out;
  out << "source,target,cooccurrence,strength\n";
  for (const TermEdge &e : graph.edges) {
    out << CsvField(graph.nodes[e.a].label) << ','
        << CsvField(graph.nodes[e.b].label) << ',' << e.count << ','
        << FormatFixed(e.strength, 6) << '\n';
  }
  return out.str();
}

Json LinkageJson(const LinkageNetwork &network) {
  Json edges = Json::array();
  for (const auto &[pair, weight] : network.edges) {
    edges.push_back({{"k", pair.first}, {"t", pair.second}, {"w", weight}});
  }
  Json mentions = Json::object();
  for (const auto &[keyword, count] : network.keyword_mentions) {
    mentions[keyword] = count;
  }
  return {{"left", network.left},
          {"right", network.right},
          {"edges", edges},
          {"keyword_mentions", mentions}};
}

std::string LinkageDot(const LinkageNetwork &network, const std::string &name) {
  std::ostringstream out;
  out << "graph " << DotQuote(name) << " {\n  rankdir=LR;\n";
  for (const std::string &k : network.left) {
    out << "  " << DotQuote("k:" + k) << " [label=" << DotQuote(k)
        << ", shape=box];\n";
  }
  for (const std::string &t : network.right) {
    out << "  " << DotQuote("t:" + t) << " [label=" << DotQuote(t)
        << ", shape=ellipse];\n";
  }
  for (const auto &[pair, weight] : network.edges) {
    out << "  " << DotQuote("k:" + pair.first) << " -- "
        << DotQuote("t:" + pair.second) << " [weight=" << weight
        << ", label=" << weight << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json WordCloudJson(const TopicSet &set, const DisplayFn &display) {
  Json words = Json::array();
  for (const auto &[label, frequency] : RankedMembers(set)) {
    words.push_back(
        {{"label", display(label)}, {"canonical", label}, {"weight", frequency}});
  }
  return {{"group", GroupName(set.group)}, {"words", words}};
}

std::string TermMapSvg(const TermGraph &graph, const DisplayFn &display) {
  const size_t n = graph.nodes.size();
  std::vector<Point> screen(n, Point{kCanvas / 2, kCanvas / 2});
  if (!graph.positions.empty() && n > 1) {
    double min_x = graph.positions[0].x, max_x = min_x;
    double min_y = graph.positions[0].y, max_y = min_y;
    for (const Point &p : graph.positions) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    double scale = (kCanvas - 2 * kMargin) / span;
    for (size_t i = 0; i < n; ++i) {
      screen[i].x = kMargin + (graph.positions[i].x - min_x) * scale;
      screen[i].y = kMargin + (graph.positions[i].y - min_y) * scale;
    }
  }
  int64_t max_occurrences = 1;
  for (const TermNode &node : graph.nodes) {
    max_occurrences = std::max(max_occurrences, node.occurrences);
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n"
      << "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n"
      << "<g stroke=\"#bbbbbb\" stroke-width=\"0.6\" stroke-opacity=\"0.6\">\n";
  for (const TermEdge &e : graph.edges) {
    out << "<line x1=\"" << FormatFixed(screen[e.a].x, 2) << "\" y1=\""
        << FormatFixed(screen[e.a].y, 2) << "\" x2=\""
        << FormatFixed(screen[e.b].x, 2) << "\" y2=\""
        << FormatFixed(screen[e.b].y, 2) << "\"/>\n";
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" "
         "text-anchor=\"middle\">\n";
  for (size_t i = 0; i < n; ++i) {
    double ratio = std::sqrt(static_cast<double>(graph.nodes[i].occurrences) /
                             static_cast<double>(max_occurrences));
    double radius = kMinRadius + (kMaxRadius - kMinRadius) * ratio;
    int cluster = graph.clusters.empty() ? 0 : graph.clusters[i];
    const char *fill =
        cluster >= 1 && cluster <= 12 ? kPalette[cluster - 1] : kAbsentColor;
    out << "<circle cx=\"" << FormatFixed(screen[i].x, 2) << "\" cy=\""
        << FormatFixed(screen[i].y, 2) << "\" r=\"" << FormatFixed(radius, 2)
        << "\" fill=\"" << fill << "\" fill-opacity=\"0.8\"/>\n";
    out << "<text x=\"" << FormatFixed(screen[i].x, 2) << "\" y=\""
        << FormatFixed(screen[i].y + radius + 11, 2) << "\">"
        << XmlEscape(display(graph.nodes[i].label)) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace topicshift
