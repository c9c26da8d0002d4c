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

#include <random>
#include <sstream>

#include "doctest.h"
#include "topicshift/exporters.h"
#include "topicshift/format.h"

namespace ts = topicshift;

namespace {

std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

ts::TopicSet Set(std::vector<std::string> labels) {
  ts::TopicSet s;
  for (auto &l : labels) s.members[l] = 1;
  return s;
}

}  // namespace

TEST_SUITE("exporters") {

TEST_CASE("similarity csv rounds half away from zero to 4 decimals") {
  std::mt19937 rng(9);
  std::vector<ts::NamedTopicSet> sets;
  for (int g = 0; g < 5; ++g) {
    std::vector<std::string> labels;
    for (int k = 1 + rng() % 30; k > 0; --k) labels.push_back("l" + std::to_string(rng() % 40));
    sets.emplace_back("g" + std::to_string(g), Set(labels));
  }
  auto m = ts::PairwiseMatrix(sets);
  auto lines = Lines(ts::SimilarityCsv(m));
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "group,g0,g1,g2,g3,g4");
  for (size_t i = 0; i < 5; ++i) {
    auto cells = ts::SplitCsvLine(lines[i + 1]);
    REQUIRE(cells.size() == 6);
    CHECK(cells[0] == m.ids[i]);
    for (size_t j = 0; j < 5; ++j) {
      CHECK(cells[j + 1] == ts::FormatFixed(m.values[i][j], 4));
      CHECK(std::abs(std::stod(cells[j + 1]) - m.values[i][j]) <= 5e-5 + 1e-12);
    }
  }
  auto json = ts::SimilarityJson(m);
  CHECK(json["groups"].size() == 5);
  CHECK(json["intersections"][0][0] == m.sizes[0]);
}

TEST_CASE("venn and classification") {
  auto k = Set({"a", "b"}), t = Set({"b", "c"}), h = Set({"b", "d"});
  auto venn = ts::VennJson(ts::VennPartition(k, t, h));
  CHECK(venn["regions"]["KTH"] == 1);
  CHECK(venn["regions"]["K"] == 1);
  CHECK(venn["union"] == 4);
  auto lines = Lines(ts::ClassificationCsv(ts::ClassifyTopics(k, t, h)));
  CHECK(lines[0] == "canonical,type");
  CHECK(lines[2] == "b,KTH");
}

TEST_CASE("csv quoting of labels") {
  ts::CandidateTerm term;
  term.label = "a, b";
  term.doc_frequency = 2;
  term.relevance = 0.1234567;
  auto lines = Lines(ts::CandidateTermsCsv({term}));
  CHECK(lines[1] == "\"a, b\",2,0.123457,0");
}

TEST_CASE("graph json and svg") {
  ts::TermGraph g;
  g.nodes = {{"a&b", 4}, {"c", 1}};
  g.edges = {{0, 1, 2, 1.5}};
  g.clusters = {1, 2};
  g.positions = {{-0.5, 0}, {0.5, 0}};
  auto json = ts::GraphJson(g, {}, {}, [](const std::string &l) { return "<" + l + ">"; });
  CHECK(json["nodes"][0]["display"] == "<a&b>");
  CHECK(json["nodes"][0]["cluster"] == 1);
  CHECK(json["edges"][0]["s"] == 1.5);
  auto svg = ts::TermMapSvg(g, [](const std::string &l) { return l; });
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("a&amp;b") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(ts::Dump(json).back() == '\n');
}

TEST_CASE("linkage dot quotes labels") {
  ts::LinkageNetwork net;
  net.left = {"k \"q\""};
  net.right = {"t"};
  net.keyword_mentions = {{"k \"q\"", 1}};
  net.edges = {{{"k \"q\"", "t"}, 1}};
  auto dot = ts::LinkageDot(net, "g");
  CHECK(dot.find("\\\"q\\\"") != std::string::npos);
  auto json = ts::LinkageJson(net);
  CHECK(json["edges"][0]["w"] == 1);
}

}  // TEST_SUITE
