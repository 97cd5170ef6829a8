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

#include "qrec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qrec/format.hpp"

namespace qrec {

HistogramResult histogram(std::span<const double> values, std::vector<double> edges) {
    if (edges.size() < 2) throw std::invalid_argument("histogram needs at least two edges");
    for (std::size_t k = 1; k < edges.size(); ++k) {
        if (!(edges[k - 1] < edges[k])) {
            throw std::invalid_argument("histogram edges must be strictly increasing (edge " +
                                        std::to_string(k) + ")");
        }
    }
    HistogramResult result;
    result.counts.assign(edges.size() - 1, 0);
    for (double v : values) {
        if (v < edges.front()) {
            ++result.underflow;
        } else if (v >= edges.back()) {
            ++result.overflow;
        } else {
            const auto it = std::upper_bound(edges.begin(), edges.end(), v);
            ++result.counts[static_cast<std::size_t>(it - edges.begin()) - 1];
        }
    }
    result.edges = std::move(edges);
    return result;
}

std::vector<double> log_spaced_edges(double lo, double hi, int bins) {
    if (!(lo > 0.0) || !(hi > lo)) {
        throw std::invalid_argument("log edges need 0 < lo < hi");
    }
    if (bins < 1) throw std::invalid_argument("need at least one bin");
    std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
    const double log_lo = std::log10(lo);
    const double step = (std::log10(hi) - log_lo) / bins;
    for (int k = 0; k <= bins; ++k) {
        edges[static_cast<std::size_t>(k)] = std::pow(10.0, log_lo + step * k);
    }
    edges.front() = lo;
    edges.back() = hi;
    return edges;
}

std::vector<double> linear_edges(double lo, double hi, int bins) {
    if (!(hi > lo)) throw std::invalid_argument("linear edges need lo < hi");
    if (bins < 1) throw std::invalid_argument("need at least one bin");
    std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
    const double step = (hi - lo) / bins;
    for (int k = 0; k <= bins; ++k) edges[static_cast<std::size_t>(k)] = lo + step * k;
    edges.back() = hi;
    return edges;
}

double interpolated_quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile fraction must be in [0, 1]");
    const std::size_t m = sorted.size();
    const double h = static_cast<double>(m - 1) * p + 1.0;
    const auto lo = static_cast<std::size_t>(h);  // 1-based floor; h >= 1 always
    const double frac = h - static_cast<double>(lo);
    if (lo >= m) return sorted[m - 1];
    return sorted[lo - 1] + frac * (sorted[lo] - sorted[lo - 1]);
}

DistanceSummary bin_by_distance(const SquareMatrix& values, const DistanceMatrix& distances) {
    if (values.size() != distances.size()) {
        throw std::invalid_argument("matrix size " + std::to_string(values.size()) +
                                    " does not match distance matrix size " +
                                    std::to_string(distances.size()));
    }
    const int n = values.size();
    std::map<int, std::vector<double>> by_distance;
    DistanceSummary summary;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (values.masked(i, j) || !distances.reachable(i, j)) {
                ++summary.excluded_pairs;
                continue;
            }
            by_distance[distances.at(i, j)].push_back(std::abs(values.at(i, j)));
        }
    }
    for (auto& [distance, sample] : by_distance) {
        std::sort(sample.begin(), sample.end());
        DistanceBin bin;
        bin.distance = distance;
        bin.count = sample.size();
        bin.min = sample.front();
        bin.q1 = interpolated_quantile(sample, 0.25);
        bin.median = interpolated_quantile(sample, 0.5);
        bin.q3 = interpolated_quantile(sample, 0.75);
        bin.max = sample.back();
        summary.bins.push_back(bin);
    }
    return summary;
}

std::int8_t FloorClassification::a_at(int i, int j) const {
    return a_flags[static_cast<std::size_t>(i) * num_qubits + static_cast<std::size_t>(j)];
}

std::int8_t FloorClassification::c_at(int i, int j) const {
    return c_flags[static_cast<std::size_t>(i) * num_qubits + static_cast<std::size_t>(j)];
}

FloorClassification noise_floor_classification(const CorrelatorSet& correlators,
                                               double multiplier) {
    if (!(multiplier >= 0.0)) {
        throw std::invalid_argument("floor multiplier must be non-negative");
    }
    const int n = correlators.num_qubits;
    FloorClassification flags;
    flags.num_qubits = n;
    flags.multiplier = multiplier;
    flags.a_flags.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    flags.c_flags = flags.a_flags;
    const double a_floor = multiplier * correlators.bounds.eps_or_a;
    const double c_floor = multiplier * correlators.bounds.c;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto cell = static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j);
            // Strictly above the floor counts as significant; exactly at the
            // floor does not.
            flags.a_flags[cell] = std::abs(correlators.a.at(i, j)) > a_floor ? 1 : 0;
            flags.c_flags[cell] = std::abs(correlators.c.at(i, j)) > c_floor ? 1 : 0;
        }
    }
    return flags;
}

std::vector<double> collect_off_diagonal(const SquareMatrix& matrix, bool absolute) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(matrix.size()) *
                   static_cast<std::size_t>(matrix.size()));
    for (int i = 0; i < matrix.size(); ++i) {
        for (int j = 0; j < matrix.size(); ++j) {
            if (i == j || matrix.masked(i, j)) continue;
            values.push_back(absolute ? std::abs(matrix.at(i, j)) : matrix.at(i, j));
        }
    }
    return values;
}

std::string matrix_to_csv(const SquareMatrix& matrix) {
    std::string out;
    for (int i = 0; i < matrix.size(); ++i) {
        for (int j = 0; j < matrix.size(); ++j) {
            if (j > 0) out += ',';
            if (!matrix.masked(i, j)) out += format_double(matrix.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string distance_matrix_to_csv(const DistanceMatrix& distances) {
    std::string out;
    for (int i = 0; i < distances.size(); ++i) {
        for (int j = 0; j < distances.size(); ++j) {
            if (j > 0) out += ',';
            if (distances.reachable(i, j)) out += std::to_string(distances.at(i, j));
        }
        out += '\n';
    }
    return out;
}

MatrixReport matrix_report(const SquareMatrix& a, const DistanceMatrix& distances) {
    if (a.size() != distances.size()) {
        throw std::invalid_argument("num_qubits mismatch: correlators have " +
                                    std::to_string(a.size()) + ", distance matrix has " +
                                    std::to_string(distances.size()));
    }
    MatrixReport report;
    report.a_csv = matrix_to_csv(a);
    report.distance_csv = distance_matrix_to_csv(distances);
    return report;
}

}  // namespace qrec
