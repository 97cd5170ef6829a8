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

#include "qrec/topology.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace qrec {

namespace {

std::string edge_text(const Topology::Edge& e) {
    return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

}  // namespace

Topology::Topology(int num_qubits, const std::vector<Edge>& edges) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("num_qubits must be at least 1, got " +
                                    std::to_string(num_qubits));
    }
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.first < 0 || e.first >= num_qubits || e.second < 0 || e.second >= num_qubits) {
            throw std::invalid_argument("edge endpoint out of range [0, " +
                                        std::to_string(num_qubits) + "): " + edge_text(e));
        }
        if (e.first == e.second) {
            throw std::invalid_argument("self-loop edge not allowed: " + edge_text(e));
        }
        edges_.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.assign(static_cast<std::size_t>(num_qubits), {});
    for (const Edge& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.first)].push_back(e.second);
        adjacency_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
}

const std::vector<int>& Topology::neighbors(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range [0, " +
                                std::to_string(num_qubits_) + ")");
    }
    return adjacency_[static_cast<std::size_t>(qubit)];
}

DistanceMatrix::DistanceMatrix(int size) : size_(size) {
    if (size < 0) throw std::invalid_argument("distance matrix size must be non-negative");
    cells_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), kUnreachable);
    for (int i = 0; i < size; ++i) set(i, i, 0);
}

int DistanceMatrix::at(int i, int j) const {
    check_index(i, j);
    return cells_[static_cast<std::size_t>(i) * size_ + static_cast<std::size_t>(j)];
}

void DistanceMatrix::set(int i, int j, int distance) {
    check_index(i, j);
    cells_[static_cast<std::size_t>(i) * size_ + static_cast<std::size_t>(j)] = distance;
}

void DistanceMatrix::check_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= size_ || j >= size_) {
        throw std::out_of_range("distance index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") out of range for size " +
                                std::to_string(size_));
    }
}

DistanceMatrix min_distances(const Topology& topology) {
    const int n = topology.num_qubits();
    DistanceMatrix result(n);
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (int source = 0; source < n; ++source) {
        std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
        dist[static_cast<std::size_t>(source)] = 0;
        std::queue<int> frontier;
        frontier.push(source);
        while (!frontier.empty()) {
            const int current = frontier.front();
            frontier.pop();
            for (int next : topology.neighbors(current)) {
                if (dist[static_cast<std::size_t>(next)] == DistanceMatrix::kUnreachable) {
                    dist[static_cast<std::size_t>(next)] =
                        dist[static_cast<std::size_t>(current)] + 1;
                    frontier.push(next);
                }
            }
        }
        for (int target = 0; target < n; ++target) {
            result.set(source, target, dist[static_cast<std::size_t>(target)]);
        }
    }
    return result;
}

}  // namespace qrec
