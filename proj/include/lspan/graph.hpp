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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lspan {

/// Simple undirected graph over dense vertex ids 0..n-1.
///
/// Immutable after construction. Duplicate edges are collapsed; self-loops
/// and out-of-range endpoints are rejected. Adjacency lists are sorted.
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  /// All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

/// Hop distances between every vertex pair.
///
/// Unreachable pairs hold the sentinel value n (one past the largest
/// achievable hop count, n-1); callers test with reachable().
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> values);

  int size() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return at(u, v) < n_; }
  int unreachable_value() const { return n_; }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

/// Parses the edge-list format: a header line "n m" followed by m lines
/// "u v". Blank lines and lines starting with '#' are ignored. Duplicate
/// edges are deduplicated; self-loops and bad ids raise ParseError with
/// the offending line number.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph: header plus one sorted "u v" line per edge.
std::string format_graph(const Graph& g);

/// Exact hop distances via one BFS per vertex, O(nm) total.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Largest finite distance, or nullopt when some pair is unreachable.
std::optional<int> diameter(const DistanceMatrix& d);

/// Graph on the same vertices whose edges are exactly the non-edges of g.
Graph complement(const Graph& g);

/// k-th power: connects every pair at distance 1..k in g.
Graph graph_power(const Graph& g, int k);

}  // namespace lspan
