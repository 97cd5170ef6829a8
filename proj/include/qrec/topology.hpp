// Copyright 2026 The qrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QREC_TOPOLOGY_HPP_
#define QREC_TOPOLOGY_HPP_

#include <utility>
#include <vector>

namespace qrec {

/// Undirected device coupling graph: vertices are qubits, edges are pairs
/// that can run a two-qubit gate directly.
///
/// Edges are normalized on construction (endpoints ordered, duplicates
/// dropped); self-loops and out-of-range endpoints are rejected. Immutable
/// after construction, safe to share across threads.
class Topology {
  public:
    using Edge = std::pair<int, int>;

    Topology(int num_qubits, const std::vector<Edge>& edges);

    int num_qubits() const { return num_qubits_; }

    /// Normalized edge list: first < second, sorted, deduplicated.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int qubit) const;

  private:
    int num_qubits_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// All-pairs minimum hop counts. Disconnected pairs hold the kUnreachable
/// sentinel rather than a large finite distance, so downstream consumers must
/// (and can) treat them explicitly.
class DistanceMatrix {
  public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix() = default;

    /// Identity distances: zero diagonal, everything else unreachable.
    explicit DistanceMatrix(int size);

    int size() const { return size_; }

    int at(int i, int j) const;
    void set(int i, int j, int distance);

    bool reachable(int i, int j) const { return at(i, j) != kUnreachable; }

  private:
    void check_index(int i, int j) const;

    int size_ = 0;
    std::vector<int> cells_;
};

/// Minimum number of coupling edges between every pair of qubits, computed
/// with one breadth-first search per source (unit edge weights make this
/// identical to Dijkstra).
DistanceMatrix min_distances(const Topology& topology);

}  // namespace qrec

#endif  // QREC_TOPOLOGY_HPP_
