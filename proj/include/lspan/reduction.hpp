// Copyright 2026 The lspan Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lspan/graph.hpp"

namespace lspan {

/// Separation requirements (p_1, ..., p_k): vertices at distance d must
/// receive labels at least p_d apart. Entries are strictly positive; a
/// zero entry raises ZeroSeparation.
class PVector {
 public:
  explicit PVector(std::vector<int> entries);

  /// Parses a comma-separated list such as "2,1".
  static PVector parse(std::string_view csv);

  int k() const { return static_cast<int>(p_.size()); }
  /// Requirement at distance d, 1 <= d <= k.
  int at(int d) const { return p_[d - 1]; }
  int min() const { return min_; }
  int max() const { return max_; }
  const std::vector<int>& entries() const { return p_; }

  /// Copy extended to length new_k with trailing p_min entries.
  PVector padded_to(int new_k) const;
  /// Copy with every entry multiplied by c >= 1.
  PVector scaled(int c) const;

 private:
  std::vector<int> p_;
  int min_ = 0;
  int max_ = 0;
};

/// Complete edge-weighted graph; the reduction target, and the input shape
/// shared by all path-TSP solvers. Weights are non-negative integers with
/// a zero diagonal; instances built from a graph under the ratio
/// precondition additionally satisfy the triangle inequality.
class MetricInstance {
 public:
  /// Takes the full row-major n*n matrix; must be symmetric with zero
  /// diagonal and non-negative entries.
  MetricInstance(int n, std::vector<int> weights);

  int size() const { return n_; }
  int weight(int u, int v) const {
    return w_[static_cast<size_t>(u) * n_ + v];
  }

  /// Checks w(u,v) <= w(u,x) + w(x,v) for all triples, O(n^3).
  bool satisfies_triangle_inequality() const;

 private:
  int n_ = 0;
  std::vector<int> w_;
};

/// A vertex order together with its total weight under some instance.
struct HamiltonianPath {
  std::vector<int> order;
  std::int64_t length = 0;
};

/// Builds a HamiltonianPath from an order, validating that it is a
/// permutation of the instance's vertices and recomputing its length.
HamiltonianPath make_path(const MetricInstance& inst, std::vector<int> order);

/// Vertex labels (non-negative integers) plus the span, the maximum label.
/// Every labeling produced by this library uses 0 as its minimum label.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<std::int64_t> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  std::int64_t at(int v) const { return labels_[v]; }
  std::int64_t span() const { return span_; }
  const std::vector<std::int64_t>& labels() const { return labels_; }

 private:
  std::vector<std::int64_t> labels_;
  std::int64_t span_ = 0;
};

struct PreconditionReport {
  bool diameter_ok = false;  // connected and diam(g) <= k
  bool ratio_ok = false;     // p_max <= 2 * p_min
  bool connected = false;
  std::optional<int> diam;   // nullopt when disconnected
};

/// Reports whether (g, p) meets the reduction's preconditions. Pure
/// report; nothing is enforced here.
PreconditionReport check_preconditions(const Graph& g, const PVector& p);

/// The reduction: a complete instance with w(u,v) = p_{dist(u,v)}.
/// Requires g connected with diam(g) <= k, else throws Disconnected or
/// DiameterExceedsK. When p_max <= 2*p_min the result is metric.
MetricInstance build_instance(const Graph& g, const PVector& p);

/// Labels path.order[i] with the prefix sum of the path's first i edge
/// weights; the span equals the path length. Exactly the minimum-span
/// labeling that is nondecreasing along the order, provided the instance
/// was built under the ratio precondition.
Labeling label_from_path(const MetricInstance& inst,
                         const HamiltonianPath& path);

/// The minimum-span labeling among all labelings nondecreasing along
/// `order`. Valid for any graph and any p: pairs at distance > k are
/// unconstrained, and disconnected pairs likewise.
Labeling greedy_label_for_order(const Graph& g, const PVector& p,
                                const std::vector<int>& order);

/// Same, with distances precomputed (hot path for the oracles).
Labeling greedy_label_for_order(const DistanceMatrix& dist, const PVector& p,
                                const std::vector<int>& order);

}  // namespace lspan
