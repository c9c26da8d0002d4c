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

#include "topicshift/netmap.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "topicshift/error.h"
#include "topicshift/kernels.h"

namespace topicshift {

namespace {

// Improvements below this are treated as ties.
constexpr double kEpsilon = 1e-12;

// Fisher-Yates with a raw engine draw, identical on every standard library.
void Shuffle(std::vector<int> &order, std::mt19937_64 &rng) {
  for (size_t i = order.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
}

// Renumbers ids to 0..k-1 in order of first appearance.
int Compact(std::vector<int> &assignment) {
  std::map<int, int> remap;
  for (int &c : assignment) {
    auto [it, inserted] = remap.emplace(c, static_cast<int>(remap.size()));
    c = it->second;
  }
  return static_cast<int>(remap.size());
}

// One local-moving sweep set: repeat passes over nodes in `order` until no
// move improves V. Returns true if anything moved.
bool LocalMoving(const std::vector<std::vector<double>> &s, double gamma,
                 const std::vector<int> &order, std::vector<int> &assignment,
                 std::vector<double> *trace) {
  const int n = static_cast<int>(assignment.size());
  std::vector<int> size(n, 0);
  for (int c : assignment) ++size[c];
  std::vector<double> link(n, 0.0);
  std::vector<int> touched;
  bool any = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : order) {
      const int current = assignment[i];
      --size[current];
      touched.clear();
      for (int j = 0; j < n; ++j) {
        if (j == i || s[i][j] == 0.0) continue;
        if (link[assignment[j]] == 0.0) touched.push_back(assignment[j]);
        link[assignment[j]] += s[i][j];
      }
      auto gain = [&](int c) { return link[c] - gamma * size[c]; };
      // Staying (or returning to an emptied cluster) is the baseline.
      int best = current;
      double best_gain = size[current] == 0 ? 0.0 : gain(current);
      for (int c : touched) {
        if (size[c] == 0) continue;
        double g = gain(c);
        if (g > best_gain + kEpsilon) {
          best = c;
          best_gain = g;
        }
      }
      if (best_gain < -kEpsilon) {
        // Leaving for an empty cluster (gain 0) beats every option.
        for (int c = 0; c < n; ++c) {
          if (size[c] == 0) {
            best = c;
            break;
          }
        }
      }
      for (int c : touched) link[c] = 0.0;
      ++size[best];
      if (best != current) {
        assignment[i] = best;
        moved = true;
        any = true;
      }
    }
    if (trace != nullptr) trace->push_back(PartitionQuality(s, assignment, gamma));
  }
  return any;
}

// Merges the pair of clusters with the largest positive gain, once.
bool MergeBestPair(const std::vector<std::vector<double>> &s, double gamma,
                   std::vector<int> &assignment) {
  const int k = Compact(assignment);
  const int n = static_cast<int>(assignment.size());
  std::vector<int64_t> size(k, 0);
  for (int c : assignment) ++size[c];
  std::vector<std::vector<double>> between(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (assignment[i] != assignment[j]) {
        between[assignment[i]][assignment[j]] += s[i][j];
        between[assignment[j]][assignment[i]] += s[i][j];
      }
    }
  }
  int best_a = -1, best_b = -1;
  double best_gain = kEpsilon;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      double g = between[a][b] - gamma * static_cast<double>(size[a] * size[b]);
      if (g > best_gain) {
        best_gain = g;
        best_a = a;
        best_b = b;
      }
    }
  }
  if (best_a < 0) return false;
  for (int &c : assignment) {
    if (c == best_b) c = best_a;
  }
  return true;
}

std::vector<int> SingleRun(const std::vector<std::vector<double>> &s,
                           double gamma, uint64_t seed,
                           std::vector<double> *trace) {
  const int n = static_cast<int>(s.size());
  std::vector<int> assignment(n);
  std::iota(assignment.begin(), assignment.end(), 0);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  Shuffle(order, rng);
  LocalMoving(s, gamma, order, assignment, trace);
  while (MergeBestPair(s, gamma, assignment)) {
    if (trace != nullptr) trace->push_back(PartitionQuality(s, assignment, gamma));
    Compact(assignment);
    // Compacted ids stay below n, so LocalMoving's size table still fits.
    LocalMoving(s, gamma, order, assignment, trace);
  }
  Compact(assignment);
  return assignment;
}

// 1..k by descending size, ties by smallest member index.
std::vector<int> Relabel(const std::vector<int> &assignment) {
  std::map<int, std::pair<int, int>> stats;  // id -> (size, first member)
  for (int i = 0; i < static_cast<int>(assignment.size()); ++i) {
    auto [it, inserted] = stats.emplace(assignment[i], std::make_pair(0, i));
    ++it->second.first;
  }
  std::vector<std::pair<int, int>> order;  // (-size, first) per id
  std::map<std::pair<int, int>, int> id_of;
  for (const auto &[id, st] : stats) {
    order.emplace_back(-st.first, st.second);
    id_of[{-st.first, st.second}] = id;
  }
  std::sort(order.begin(), order.end());
  std::map<int, int> remap;
  for (size_t r = 0; r < order.size(); ++r) {
    remap[id_of[order[r]]] = static_cast<int>(r) + 1;
  }
  std::vector<int> out;
  for (int c : assignment) out.push_back(remap[c]);
  return out;
}

void MergeSmall(const std::vector<std::vector<double>> &s, int min_size,
                std::vector<int> &assignment) {
  const int n = static_cast<int>(assignment.size());
  std::set<int> stuck;  // small clusters with no connection to any other
  while (true) {
    std::map<int, int> size;
    for (int c : assignment) ++size[c];
    int victim = -1;
    for (const auto &[c, count] : size) {
      if (count < min_size && !stuck.count(c) &&
          (victim < 0 || count < size[victim])) {
        victim = c;
      }
    }
    if (victim < 0) return;
    std::map<int, double> connection;
    for (int i = 0; i < n; ++i) {
      if (assignment[i] != victim) continue;
      for (int j = 0; j < n; ++j) {
        if (assignment[j] != victim && s[i][j] > 0.0) {
          connection[assignment[j]] += s[i][j];
        }
      }
    }
    int target = -1;
    double best = 0.0;
    for (const auto &[c, total] : connection) {
      if (total > best) {
        best = total;
        target = c;
      }
    }
    if (target < 0) {
      stuck.insert(victim);
      continue;
    }
    for (int &c : assignment) {
      if (c == victim) c = target;
    }
  }
}

double PairDistance(const Point &a, const Point &b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Centers the points and scales them to a mean pairwise distance of 1.
void Project(std::vector<Point> &positions) {
  Point center;
  for (const Point &p : positions) {
    center.x += p.x;
    center.y += p.y;
  }
  center.x /= static_cast<double>(positions.size());
  center.y /= static_cast<double>(positions.size());
  for (Point &p : positions) {
    p.x -= center.x;
    p.y -= center.y;
  }
  double mean = MeanPairwiseDistance(positions);
  if (mean == 0.0) return;
  for (Point &p : positions) {
    p.x /= mean;
    p.y /= mean;
  }
}

}  // namespace

int32_t TermGraph::IndexOf(const std::string &label) const {
  auto it = std::lower_bound(
      nodes.begin(), nodes.end(), label,
      [](const TermNode &node, const std::string &l) { return node.label < l; });
  if (it == nodes.end() || it->label != label) return -1;
  return static_cast<int32_t>(it - nodes.begin());
}

const TermEdge *TermGraph::FindEdge(int32_t a, int32_t b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b),
                             [](const TermEdge &e, const std::pair<int32_t, int32_t> &key) {
                               return std::make_pair(e.a, e.b) < key;
                             });
  if (it == edges.end() || it->a != a || it->b != b) return nullptr;
  return &*it;
}

std::vector<std::vector<double>> TermGraph::StrengthMatrix() const {
  std::vector<std::vector<double>> s(nodes.size(),
                                     std::vector<double>(nodes.size(), 0.0));
  for (const TermEdge &e : edges) {
    s[e.a][e.b] = e.strength;
    s[e.b][e.a] = e.strength;
  }
  return s;
}

TermGraph CooccurrenceGraph(const std::vector<std::vector<std::string>> &documents,
                            const TopicSet &selected) {
  TermGraph graph;
  std::map<std::string, int32_t> ids;
  for (const auto &[label, f] : selected.members) {
    ids.emplace(label, static_cast<int32_t>(graph.nodes.size()));
    graph.nodes.push_back({label, 0});
  }
  std::vector<kernels::IdList> docs(documents.size());
  for (size_t d = 0; d < documents.size(); ++d) {
    for (const std::string &label : documents[d]) {
      auto it = ids.find(label);
      if (it != ids.end()) docs[d].push_back(it->second);
    }
    std::sort(docs[d].begin(), docs[d].end());
    docs[d].erase(std::unique(docs[d].begin(), docs[d].end()), docs[d].end());
  }
  std::vector<int64_t> frequencies = kernels::DocumentFrequencies(
      docs, static_cast<int32_t>(graph.nodes.size()));
  for (size_t i = 0; i < graph.nodes.size(); ++i) {
    graph.nodes[i].occurrences = frequencies[i];
  }
  for (const kernels::PairCount &pair : kernels::CooccurrenceCounts(docs)) {
    graph.edges.push_back({pair.a, pair.b, pair.count, 0.0});
  }
  return graph;
}

TermGraph AssociationStrength(TermGraph graph) {
  std::vector<double> degree(graph.nodes.size(), 0.0);
  double two_m = 0.0;
  for (const TermEdge &e : graph.edges) {
    degree[e.a] += static_cast<double>(e.count);
    degree[e.b] += static_cast<double>(e.count);
    two_m += 2.0 * static_cast<double>(e.count);
  }
  for (TermEdge &e : graph.edges) {
    e.strength = two_m * static_cast<double>(e.count) / (degree[e.a] * degree[e.b]);
  }
  return graph;
}

double PartitionQuality(const std::vector<std::vector<double>> &strength,
                        const std::vector<int> &assignment, double resolution) {
  double v = 0.0;
  for (size_t i = 0; i < assignment.size(); ++i) {
    for (size_t j = i + 1; j < assignment.size(); ++j) {
      if (assignment[i] == assignment[j]) v += strength[i][j] - resolution;
    }
  }
  return v;
}

std::vector<int> MaximizeQuality(const std::vector<std::vector<double>> &strength,
                                 double resolution, uint64_t seed, int restarts,
                                 ClusterTrace *trace) {
  if (!(resolution > 0.0)) {
    Fail(ErrorKind::kInvalidArgument, "resolution must be > 0");
  }
  if (strength.empty()) return {};
  std::vector<int> best;
  double best_quality = 0.0;
  std::vector<double> best_trace;
  for (int r = 0; r < std::max(restarts, 1); ++r) {
    std::vector<double> run_trace;
    std::vector<int> assignment = SingleRun(
        strength, resolution, seed + static_cast<uint64_t>(r), &run_trace);
    double quality = PartitionQuality(strength, assignment, resolution);
    if (best.empty() || quality > best_quality + kEpsilon) {
      best = std::move(assignment);
      best_quality = quality;
      best_trace = std::move(run_trace);
    }
  }
  if (trace != nullptr) {
    trace->quality = std::move(best_trace);
    trace->best_quality = best_quality;
  }
  return best;
}

TermGraph Cluster(TermGraph graph, const ClusterParams &params,
                  ClusterTrace *trace) {
  if (params.min_cluster_size < 1) {
    Fail(ErrorKind::kInvalidArgument, "min_cluster_size must be >= 1");
  }
  const auto s = graph.StrengthMatrix();
  std::vector<int> assignment =
      MaximizeQuality(s, params.resolution, params.seed, params.restarts, trace);
  if (params.merge_small && params.min_cluster_size > 1) {
    MergeSmall(s, params.min_cluster_size, assignment);
  }
  graph.clusters = Relabel(assignment);
  return graph;
}

std::vector<OverlayScore> OverlayScores(const std::vector<NamedFrequencies> &sources,
                                        const std::vector<std::string> &labels) {
  if (sources.size() < 2) {
    Fail(ErrorKind::kInvalidArgument, "overlay needs at least two sources");
  }
  std::vector<OverlayScore> scores;
  for (const std::string &label : labels) {
    OverlayScore score{label, {}, {}, {}};
    int64_t total = 0;
    for (const auto &[name, table] : sources) {
      auto it = table.find(label);
      int64_t raw = it == table.end() ? 0 : it->second;
      score.raw.push_back(raw);
      total += raw;
    }
    if (total <= 0) {
      Fail(ErrorKind::kDomain, "label " + label + " occurs in no source");
    }
    double mean = static_cast<double>(total) / static_cast<double>(sources.size());
    for (int64_t raw : score.raw) {
      score.normalized.push_back(static_cast<double>(raw) / mean);
      score.present.push_back(raw > 0);
    }
    scores.push_back(std::move(score));
  }
  return scores;
}

double LayoutObjective(const std::vector<std::vector<double>> &strength,
                       const std::vector<Point> &positions) {
  double f = 0.0;
  for (size_t i = 0; i < positions.size(); ++i) {
    for (size_t j = i + 1; j < positions.size(); ++j) {
      if (strength[i][j] == 0.0) continue;
      double dx = positions[i].x - positions[j].x;
      double dy = positions[i].y - positions[j].y;
      f += strength[i][j] * (dx * dx + dy * dy);
    }
  }
  return f;
}

double MeanPairwiseDistance(const std::vector<Point> &positions) {
  const size_t n = positions.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) total += PairDistance(positions[i], positions[j]);
  }
  return total / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

TermGraph Layout(TermGraph graph, const LayoutOptions &options,
                 LayoutTrace *trace) {
  const size_t n = graph.nodes.size();
  LayoutTrace local;
  LayoutTrace &t = trace != nullptr ? *trace : local;
  t = LayoutTrace();
  if (n == 0) return graph;
  if (n == 1) {
    graph.positions = {Point{}};
    t.converged = true;
    return graph;
  }
  if (n == 2) {
    graph.positions = {Point{-0.5, 0.0}, Point{0.5, 0.0}};
    t.converged = true;
    return graph;
  }

  const auto s = graph.StrengthMatrix();
  std::mt19937_64 rng(options.seed);
  std::vector<Point> x(n);
  for (Point &p : x) {
    p.x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    p.y = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }
  Project(x);
  double f = LayoutObjective(s, x);
  t.objective.push_back(f);

  const double pairs = static_cast<double>(n * (n - 1) / 2);
  double step = 0.1;
  std::vector<Point> gradient(n), candidate(n);
  for (int iter = 0; iter < options.max_iterations && step > 1e-30; ++iter) {
    // Gradient of f / mean_d^2 at mean_d = 1. The attraction term alone is
    // parallel to x on complete uniform graphs and the projection undoes it.
    for (size_t i = 0; i < n; ++i) {
      gradient[i] = Point{};
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        double dx = x[i].x - x[j].x, dy = x[i].y - x[j].y;
        double d = std::hypot(dx, dy);
        double w = 2.0 * s[i][j] - (d > 0.0 ? 2.0 * f / (pairs * d) : 0.0);
        gradient[i].x += w * dx;
        gradient[i].y += w * dy;
      }
    }
    for (size_t i = 0; i < n; ++i) {
      candidate[i] = Point{x[i].x - step * gradient[i].x,
                           x[i].y - step * gradient[i].y};
    }
    Project(candidate);
    double g = LayoutObjective(s, candidate);
    ++t.iterations;
    if (!(g <= f)) {
      step *= 0.5;
      t.objective.push_back(f);
      continue;
    }
    double displacement = 0.0;
    for (size_t i = 0; i < n; ++i) {
      displacement = std::max(displacement, PairDistance(x[i], candidate[i]));
    }
    double improvement = f > 0.0 ? (f - g) / f : 0.0;
    x.swap(candidate);
    f = g;
    t.objective.push_back(f);
    step *= 1.5;
    if (improvement < options.relative_tolerance &&
        displacement < options.displacement_tolerance) {
      t.converged = true;
      break;
    }
  }
  graph.positions = std::move(x);
  return graph;
}

}  // namespace topicshift
