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

// Term co-occurrence maps.
//
// A TermGraph holds co-occurrence counts c_ij between selected labels, their
// association strengths
//
//   s_ij = 2m c_ij / (k_i k_j),  k_i = sum_j c_ij,  m = sum_i k_i / 2,
//
// a clustering that maximizes
//
//   V = sum over same-cluster pairs i < j of (s_ij - resolution),
//
// and optionally 2-D positions minimizing sum s_ij d_ij^2 subject to a mean
// pairwise distance of 1.

#ifndef TOPICSHIFT_NETMAP_H_
#define TOPICSHIFT_NETMAP_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "topicshift/topicsets.h"

namespace topicshift {

struct TermNode {
  std::string label;
  int64_t occurrences = 0;  // documents containing the label
};

struct TermEdge {
  int32_t a = 0;  // node indices, a < b
  int32_t b = 0;
  int64_t count = 0;      // c_ab >= 1
  double strength = 0.0;  // s_ab, 0 until AssociationStrength()
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct TermGraph {
  std::vector<TermNode> nodes;  // sorted by label
  std::vector<TermEdge> edges;  // sorted by (a, b)
  std::vector<int> clusters;    // per node, ids from 1; empty until Cluster()
  std::vector<Point> positions; // per node; empty until Layout()

  int32_t IndexOf(const std::string &label) const;  // -1 when absent
  const TermEdge *FindEdge(int32_t a, int32_t b) const;

  // Dense symmetric s matrix with a zero diagonal.
  std::vector<std::vector<double>> StrengthMatrix() const;
};

// Nodes are the labels of `selected`; each document adds 1 to c_ij for each
// pair of distinct selected labels it contains. Occurrences count documents.
TermGraph CooccurrenceGraph(const std::vector<std::vector<std::string>> &documents,
                            const TopicSet &selected);

// Fills TermEdge::strength. Scaling every count by a constant changes
// nothing. Isolated nodes have no edges and need no strength.
TermGraph AssociationStrength(TermGraph graph);

struct ClusterParams {
  double resolution = 0.5;
  int min_cluster_size = 1;
  bool merge_small = true;
  uint64_t seed = 1;
  int restarts = 10;  // independent seeded runs; the best V is kept
};

// V for a per-node cluster assignment (any integer ids).
double PartitionQuality(const std::vector<std::vector<double>> &strength,
                        const std::vector<int> &assignment, double resolution);

struct ClusterTrace {
  // V after every local-moving pass and cluster-merge step of the kept run.
  std::vector<double> quality;
  double best_quality = 0.0;  // before merge_small
};

// Local moving from singletons in a seeded random order, alternated with
// pairwise cluster merges while V improves, repeated `restarts` times. Then
// clusters smaller than min_cluster_size join the cluster they are most
// strongly connected to (when merge_small). Ids are 1..k by descending size,
// ties by smallest member index. Throws kInvalidArgument for a nonpositive
// resolution or min_cluster_size < 1.
TermGraph Cluster(TermGraph graph, const ClusterParams &params,
                  ClusterTrace *trace = nullptr);

// The unmerged optimizer on a dense strength matrix; returns raw ids.
std::vector<int> MaximizeQuality(const std::vector<std::vector<double>> &strength,
                                 double resolution, uint64_t seed, int restarts,
                                 ClusterTrace *trace = nullptr);

struct OverlayScore {
  std::string label;
  std::vector<int64_t> raw;         // per source
  std::vector<double> normalized;   // raw / mean(raw)
  std::vector<bool> present;        // raw > 0
};

using NamedFrequencies = std::pair<std::string, FrequencyTable>;

// Throws kInvalidArgument for fewer than two sources and kDomain for a
// label with zero frequency in every source.
std::vector<OverlayScore> OverlayScores(const std::vector<NamedFrequencies> &sources,
                                        const std::vector<std::string> &labels);

struct LayoutOptions {
  int max_iterations = 5000;
  uint64_t seed = 1;
  double relative_tolerance = 1e-6;
  double displacement_tolerance = 1e-9;
};

struct LayoutTrace {
  std::vector<double> objective;  // after projection, then every iteration
  int iterations = 0;
  bool converged = false;
};

// Sum over pairs of s_ij d_ij^2.
double LayoutObjective(const std::vector<std::vector<double>> &strength,
                       const std::vector<Point> &positions);

double MeanPairwiseDistance(const std::vector<Point> &positions);

// Projected gradient descent from seeded random positions on the
// scale-free ratio sum(s_ij d_ij^2) / mean_d^2, which equals the objective
// after every projection. A step is taken
// only when it does not increase the objective; otherwise the step size is
// halved. Stops when the relative improvement and the largest node
// displacement both fall below their tolerances, or at the iteration cap.
// One node sits at the origin; two nodes at (-0.5, 0) and (0.5, 0).
TermGraph Layout(TermGraph graph, const LayoutOptions &options,
                 LayoutTrace *trace = nullptr);

}  // namespace topicshift

#endif  // TOPICSHIFT_NETMAP_H_
