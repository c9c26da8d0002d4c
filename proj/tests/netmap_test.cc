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

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.h"
#include "topicshift/error.h"
#include "topicshift/netmap.h"

namespace ts = topicshift;

namespace {

ts::TopicSet All(const std::vector<std::vector<std::string>> &docs) {
  ts::TopicSet set;
  for (const auto &d : docs) {
    for (const auto &l : d) set.members[l] = 1;
  }
  return set;
}

ts::TermGraph GraphFromMatrix(const std::vector<std::vector<double>> &s) {
  ts::TermGraph g;
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    g.nodes.push_back({"n" + std::string(1, static_cast<char>('a' + i)), 1});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (s[i][j] > 0) g.edges.push_back({i, j, 1, s[i][j]});
    }
  }
  return g;
}

// No single node relocation (to another cluster or a new one) improves V.
bool OneMoveOptimal(const std::vector<std::vector<double>> &s, std::vector<int> a,
                    double gamma) {
  const double base = ts::PartitionQuality(s, a, gamma);
  const int n = static_cast<int>(a.size());
  std::set<int> ids(a.begin(), a.end());
  int fresh = *ids.rbegin() + 1;
  for (int i = 0; i < n; ++i) {
    int original = a[i];
    for (int target : ids) {
      a[i] = target;
      if (ts::PartitionQuality(s, a, gamma) > base + 1e-9) return false;
    }
    a[i] = fresh;
    if (ts::PartitionQuality(s, a, gamma) > base + 1e-9) return false;
    a[i] = original;
  }
  return true;
}

}  // namespace

TEST_SUITE("netmap") {

TEST_CASE("co-occurrence counting") {
  std::vector<std::vector<std::string>> docs = {{"a", "b"}, {"a", "b"}, {"a"}};
  auto g = ts::CooccurrenceGraph(docs, All(docs));
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].count == 2);
  CHECK(g.nodes[g.IndexOf("a")].occurrences == 3);
  CHECK(g.nodes[g.IndexOf("b")].occurrences == 2);
  CHECK(ts::CooccurrenceGraph({{"a"}, {"b"}}, All({{"a"}, {"b"}})).edges.empty());
  CHECK(g.IndexOf("zzz") == -1);
}

TEST_CASE("co-occurrence matches pair enumeration on random documents") {
  std::mt19937 rng(20);
  std::vector<std::vector<std::string>> docs(20);
  for (auto &d : docs) {
    for (int k = rng() % 6; k > 0; --k) d.push_back("t" + std::to_string(rng() % 8));
  }
  ts::TopicSet selected = All(docs);
  selected.members.erase("t0");  // unselected labels are ignored
  auto g = ts::CooccurrenceGraph(docs, selected);
  std::map<std::pair<std::string, std::string>, int64_t> expected;
  for (const auto &d : docs) {
    std::set<std::string> s(d.begin(), d.end());
    s.erase("t0");
    for (const auto &x : s) {
      for (const auto &y : s) {
        if (x < y) ++expected[{x, y}];
      }
    }
  }
  REQUIRE(g.edges.size() == expected.size());
  for (const auto &e : g.edges) {
    CHECK(expected[{g.nodes[e.a].label, g.nodes[e.b].label}] == e.count);
  }
}

TEST_CASE("association strength by hand") {
  // c: ab=2, ac=1, bc=1, cd=1; k = (3, 3, 3, 1); m = 5.
  std::vector<std::vector<std::string>> docs = {
      {"a", "b"}, {"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}};
  auto g = ts::AssociationStrength(ts::CooccurrenceGraph(docs, All(docs)));
  auto s = [&](const char *x, const char *y) {
    return g.FindEdge(g.IndexOf(x), g.IndexOf(y))->strength;
  };
  CHECK(s("a", "b") == doctest::Approx(20.0 / 9.0));
  CHECK(s("a", "c") == doctest::Approx(10.0 / 9.0));
  CHECK(s("b", "c") == doctest::Approx(10.0 / 9.0));
  CHECK(s("c", "d") == doctest::Approx(10.0 / 3.0));

  auto doubled = docs;
  doubled.insert(doubled.end(), docs.begin(), docs.end());
  auto g2 = ts::AssociationStrength(ts::CooccurrenceGraph(doubled, All(doubled)));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    CHECK(g2.edges[e].strength == doctest::Approx(g.edges[e].strength).epsilon(1e-15));
  }
}

TEST_CASE("clustering examples") {
  // Two disjoint triangles.
  std::vector<std::vector<std::string>> docs = {
      {"a", "b"}, {"b", "c"}, {"a", "c"}, {"x", "y"}, {"y", "z"}, {"x", "z"}};
  auto g = ts::Cluster(ts::AssociationStrength(ts::CooccurrenceGraph(docs, All(docs))),
                       {0.1, 1, true, 7, 3});
  std::set<int> ids(g.clusters.begin(), g.clusters.end());
  CHECK(ids.size() == 2);
  CHECK(g.clusters[g.IndexOf("a")] == g.clusters[g.IndexOf("c")]);
  CHECK(g.clusters[g.IndexOf("a")] != g.clusters[g.IndexOf("x")]);
  // Equal sizes: the cluster holding node 0 gets id 1.
  CHECK(g.clusters[0] == 1);

  auto single = ts::Cluster(ts::AssociationStrength(ts::CooccurrenceGraph({{"a"}}, All({{"a"}}))),
                            ts::ClusterParams());
  CHECK(single.clusters == std::vector<int>{1});

  std::mt19937_64 rng(3);
  auto s = fixtures::RandomStrengths(7, 0.8, rng);
  double max_s = 0.0;
  for (const auto &row : s) {
    for (double v : row) max_s = std::max(max_s, v);
  }
  auto a = ts::MaximizeQuality(s, max_s + 0.01, 1, 5);
  CHECK(std::set<int>(a.begin(), a.end()).size() == 7);

  CHECK_THROWS_AS(ts::MaximizeQuality(s, 0.0, 1, 1), ts::Error);
  CHECK_THROWS_AS(ts::Cluster(g, {0.5, 0, true, 1, 1}), ts::Error);
}

TEST_CASE("local moving reaches the exhaustive optimum on small graphs") {
  std::mt19937_64 rng(2024);
  int hits = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto s = fixtures::RandomStrengths(n, 0.6, rng);
    double gamma = 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    ts::ClusterTrace trace;
    auto a = ts::MaximizeQuality(s, gamma, trial, 10, &trace);
    double v = ts::PartitionQuality(s, a, gamma);
    CHECK(v == doctest::Approx(trace.best_quality));
    if (std::abs(v - fixtures::BestPartitionQuality(s, gamma)) < 1e-9) ++hits;
    CHECK(OneMoveOptimal(s, a, gamma));
    for (size_t i = 1; i < trace.quality.size(); ++i) {
      CHECK(trace.quality[i] >= trace.quality[i - 1] - 1e-12);
    }
  }
  CHECK(hits >= 57);
}

TEST_CASE("clustering is seed deterministic and relabeled by size") {
  std::mt19937_64 rng(77);
  auto s = fixtures::RandomStrengths(30, 0.15, rng);
  ts::TermGraph g = GraphFromMatrix(s);
  auto a = ts::Cluster(g, {0.4, 1, true, 9, 4});
  auto b = ts::Cluster(g, {0.4, 1, true, 9, 4});
  CHECK(a.clusters == b.clusters);
  std::map<int, int> sizes;
  for (int c : a.clusters) ++sizes[c];
  for (int c = 2; c <= static_cast<int>(sizes.size()); ++c) {
    CHECK(sizes[c - 1] >= sizes[c]);
  }
}

TEST_CASE("small clusters merge into their strongest neighbor") {
  // A 4-clique, a pair weakly tied to it, and an isolated node.
  std::vector<std::vector<double>> s(7, std::vector<double>(7, 0.0));
  auto link = [&](int i, int j, double v) { s[i][j] = s[j][i] = v; };
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) link(i, j, 3.0);
  }
  link(4, 5, 3.0);
  link(5, 0, 0.2);
  ts::TermGraph g = GraphFromMatrix(s);
  auto unmerged = ts::Cluster(g, {1.0, 3, false, 1, 3});
  CHECK(std::set<int>(unmerged.clusters.begin(), unmerged.clusters.end()).size() == 3);
  auto merged = ts::Cluster(g, {1.0, 3, true, 1, 3});
  CHECK(merged.clusters[4] == merged.clusters[0]);
  CHECK(merged.clusters[5] == merged.clusters[0]);
  // Node 6 has no connection and stays on its own.
  CHECK(merged.clusters[6] != merged.clusters[0]);
}

TEST_CASE("overlay scores") {
  std::vector<ts::NamedFrequencies> sources = {
      {"news", {{"a", 2}, {"b", 4}, {"c", 3}}},
      {"policy", {{"a", 2}}},
      {"blog", {{"a", 2}, {"c", 1}}},
      {"wikipedia", {{"a", 2}}}};
  auto scores = ts::OverlayScores(sources, {"a", "b", "c"});
  CHECK(scores[0].normalized == std::vector<double>{1, 1, 1, 1});
  CHECK(scores[1].normalized[0] == 4.0);
  CHECK(scores[1].present == std::vector<bool>{true, false, false, false});
  CHECK(scores[2].normalized[0] == 3.0);
  CHECK(scores[2].normalized[2] == 1.0);
  CHECK_THROWS_AS(ts::OverlayScores({sources[0]}, {"a"}), ts::Error);
  try {
    ts::OverlayScores(sources, {"zzz"});
    FAIL("expected an error");
  } catch (const ts::Error &e) {
    CHECK(e.kind() == ts::ErrorKind::kDomain);
  }
}

TEST_CASE("layout fixed cases") {
  std::vector<std::vector<std::string>> two = {{"a", "b"}};
  auto g2 = ts::Layout(ts::AssociationStrength(ts::CooccurrenceGraph(two, All(two))), {});
  CHECK(ts::MeanPairwiseDistance(g2.positions) == doctest::Approx(1.0).epsilon(1e-9));

  std::vector<std::vector<std::string>> tri = {{"a", "b"}, {"b", "c"}, {"a", "c"}};
  ts::LayoutTrace trace;
  auto g3 = ts::Layout(ts::AssociationStrength(ts::CooccurrenceGraph(tri, All(tri))), {},
                       &trace);
  auto d = [&](int i, int j) {
    return std::hypot(g3.positions[i].x - g3.positions[j].x,
                      g3.positions[i].y - g3.positions[j].y);
  };
  CHECK(d(0, 1) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(d(1, 2) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(d(0, 2) == doctest::Approx(1.0).epsilon(1e-6));

  auto one = ts::Layout(ts::CooccurrenceGraph({{"a"}}, All({{"a"}})), {});
  CHECK(one.positions.size() == 1);
}

TEST_CASE("layout objective never increases") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = fixtures::RandomStrengths(10, 0.5, rng);
    ts::LayoutTrace trace;
    ts::LayoutOptions options;
    options.seed = trial;
    auto g = ts::Layout(GraphFromMatrix(s), options, &trace);
    for (size_t i = 1; i < trace.objective.size(); ++i) {
      CHECK(trace.objective[i] <= trace.objective[i - 1]);
    }
    CHECK(ts::MeanPairwiseDistance(g.positions) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(ts::LayoutObjective(s, g.positions) == doctest::Approx(trace.objective.back()));
    auto again = ts::Layout(GraphFromMatrix(s), options);
    CHECK(again.positions[3].x == g.positions[3].x);
  }
}

}  // TEST_SUITE
