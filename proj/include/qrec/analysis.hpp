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

#ifndef QREC_ANALYSIS_HPP_
#define QREC_ANALYSIS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qrec/estimators.hpp"
#include "qrec/matrix.hpp"
#include "qrec/topology.hpp"

namespace qrec {

/// Binned counts with underflow and overflow tracked separately; the first
/// bin never absorbs values below the lowest edge.
struct HistogramResult {
    std::vector<double> edges;
    std::vector<std::uint64_t> counts;
    std::uint64_t underflow = 0;
    std::uint64_t overflow = 0;
};

/// Bins values with the half-open convention edges[k] <= v < edges[k+1].
/// Values below edges.front() count as underflow, values >= edges.back() as
/// overflow. Edges must be strictly increasing with at least two entries.
HistogramResult histogram(std::span<const double> values, std::vector<double> edges);

/// `bins` logarithmically spaced bins between lo and hi (bins + 1 edges).
std::vector<double> log_spaced_edges(double lo, double hi, int bins);

/// `bins` equal-width bins between lo and hi (bins + 1 edges).
std::vector<double> linear_edges(double lo, double hi, int bins);

/// Quantile by linear interpolation between closest ranks: with m sorted
/// values, rank h = (m - 1) p + 1 and Q = x_floor(h) + (h - floor(h)) *
/// (x_floor(h)+1 - x_floor(h)) using 1-based indexing. `sorted` must be
/// non-empty and ascending.
double interpolated_quantile(std::span<const double> sorted, double p);

/// Five-number summary of |a(i, j)| over the ordered pairs at one distance.
struct DistanceBin {
    int distance = 0;
    std::size_t count = 0;
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

/// Distance-binned statistics. Empty distances are simply absent. Ordered
/// pairs (i, j) and (j, i) contribute separately because the spectator
/// matrix is not symmetric; unreachable and masked off-diagonal pairs are
/// excluded and counted in excluded_pairs.
struct DistanceSummary {
    std::vector<DistanceBin> bins;  // ascending distance
    std::size_t excluded_pairs = 0;
};

DistanceSummary bin_by_distance(const SquareMatrix& values, const DistanceMatrix& distances);

/// Per-entry comparison against the sampling noise floor. 1 = magnitude
/// strictly above multiplier * floor, 0 = at or below (consistent with
/// sampling noise), -1 = masked diagonal.
struct FloorClassification {
    int num_qubits = 0;
    double multiplier = 1.0;
    std::vector<std::int8_t> a_flags;  // row-major n x n
    std::vector<std::int8_t> c_flags;

    std::int8_t a_at(int i, int j) const;
    std::int8_t c_at(int i, int j) const;
};

FloorClassification noise_floor_classification(const CorrelatorSet& correlators,
                                               double multiplier = 1.0);

/// Aligned full-matrix dump of the spectator matrix and the distance matrix,
/// ready for heat-map plotting. Masked cells are empty; unreachable
/// distances are empty; the distance diagonal stays 0.
struct MatrixReport {
    std::string a_csv;
    std::string distance_csv;
};

MatrixReport matrix_report(const SquareMatrix& a, const DistanceMatrix& distances);

inline MatrixReport matrix_report(const CorrelatorSet& correlators,
                                  const DistanceMatrix& distances) {
    return matrix_report(correlators.a, distances);
}

/// Unmasked off-diagonal entries in row-major order, optionally as
/// magnitudes; the value lists that feed histograms.
std::vector<double> collect_off_diagonal(const SquareMatrix& matrix, bool absolute);

/// CSV grid of a correlator matrix: one row per i, empty cell where masked.
std::string matrix_to_csv(const SquareMatrix& matrix);

/// CSV grid of a distance matrix: empty cell for unreachable pairs.
std::string distance_matrix_to_csv(const DistanceMatrix& distances);

}  // namespace qrec

#endif  // QREC_ANALYSIS_HPP_
