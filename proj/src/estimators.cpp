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

#include "qrec/estimators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qrec {

namespace {

std::uint64_t histogram_total(const Histogram& histogram) {
    if (histogram.empty()) throw std::invalid_argument("histogram is empty");
    std::uint64_t total = 0;
    for (const auto& [bits, count] : histogram) total += count;
    if (total == 0) throw std::invalid_argument("histogram has zero total count");
    return total;
}

void check_qubit_against_keys(const Histogram& histogram, int qubit) {
    const std::size_t width = histogram.begin()->first.size();
    for (const auto& [bits, count] : histogram) {
        if (bits.size() != width) {
            throw std::invalid_argument("histogram bitstrings have inconsistent lengths (" +
                                        std::to_string(width) + " and " +
                                        std::to_string(bits.size()) + ")");
        }
    }
    if (qubit < 0 || static_cast<std::size_t>(qubit) >= width) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range for bitstrings of length " +
                                std::to_string(width));
    }
}

/// Read-1 frequency of every qubit in one pass over the histogram.
std::vector<double> all_one_marginals(const Histogram& histogram, int num_qubits) {
    std::vector<std::uint64_t> ones(static_cast<std::size_t>(num_qubits), 0);
    std::uint64_t total = 0;
    for (const auto& [bits, count] : histogram) {
        total += count;
        for (int i = 0; i < num_qubits; ++i) {
            if (bits[static_cast<std::size_t>(i)] == '1') ones[static_cast<std::size_t>(i)] += count;
        }
    }
    std::vector<double> marg(static_cast<std::size_t>(num_qubits));
    for (int i = 0; i < num_qubits; ++i) {
        marg[static_cast<std::size_t>(i)] =
            static_cast<double>(ones[static_cast<std::size_t>(i)]) / static_cast<double>(total);
    }
    return marg;
}

}  // namespace

SamplingBounds sampling_bounds(std::uint64_t shots) {
    if (shots == 0) throw std::invalid_argument("shots must be at least 1");
    const double n = static_cast<double>(shots);
    SamplingBounds b;
    b.single_prob = 1.0 / (2.0 * std::sqrt(n));
    b.eps_or_a = 1.0 / std::sqrt(2.0 * n);
    b.c = b.single_prob;
    b.global = b.eps_or_a;
    return b;
}

double marginal_one_prob(const Histogram& histogram, int qubit) {
    const std::uint64_t total = histogram_total(histogram);
    check_qubit_against_keys(histogram, qubit);
    std::uint64_t ones = 0;
    for (const auto& [bits, count] : histogram) {
        if (bits[static_cast<std::size_t>(qubit)] == '1') ones += count;
    }
    return static_cast<double>(ones) / static_cast<double>(total);
}

double joint_zero_prob(const Histogram& histogram, int qubit_i, int qubit_j) {
    const std::uint64_t total = histogram_total(histogram);
    check_qubit_against_keys(histogram, qubit_i);
    check_qubit_against_keys(histogram, qubit_j);
    std::uint64_t zeros = 0;
    for (const auto& [bits, count] : histogram) {
        if (bits[static_cast<std::size_t>(qubit_i)] == '0' &&
            bits[static_cast<std::size_t>(qubit_j)] == '0') {
            zeros += count;
        }
    }
    return static_cast<double>(zeros) / static_cast<double>(total);
}

std::vector<double> estimate_epsilon(const CountsTable& counts) {
    const int n = counts.num_qubits();
    const std::vector<double> ground_one = all_one_marginals(counts.ground_histogram(), n);
    std::vector<double> epsilon(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double excited_zero = 1.0 - marginal_one_prob(counts.excited_histogram(i), i);
        epsilon[static_cast<std::size_t>(i)] =
            0.5 * (ground_one[static_cast<std::size_t>(i)] + excited_zero);
    }
    return epsilon;
}

SquareMatrix estimate_a(const CountsTable& counts) {
    const int n = counts.num_qubits();
    const std::vector<double> ground_one = all_one_marginals(counts.ground_histogram(), n);
    SquareMatrix a = SquareMatrix::with_masked_diagonal(n);
    for (int j = 0; j < n; ++j) {
        const std::vector<double> excited_one = all_one_marginals(counts.excited_histogram(j), n);
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            a.set(i, j,
                  ground_one[static_cast<std::size_t>(i)] - excited_one[static_cast<std::size_t>(i)]);
        }
    }
    return a;
}

SquareMatrix estimate_c(const CountsTable& counts) {
    const int n = counts.num_qubits();
    const Histogram& ground = counts.ground_histogram();
    const std::vector<double> ground_one = all_one_marginals(ground, n);

    // Joint read-0 counts for every unordered pair in one histogram pass.
    SquareMatrix joint(n, 0.0);
    std::uint64_t total = 0;
    std::vector<int> zero_bits;
    zero_bits.reserve(static_cast<std::size_t>(n));
    for (const auto& [bits, count] : ground) {
        total += count;
        zero_bits.clear();
        for (int i = 0; i < n; ++i) {
            if (bits[static_cast<std::size_t>(i)] == '0') zero_bits.push_back(i);
        }
        for (std::size_t a = 0; a < zero_bits.size(); ++a) {
            for (std::size_t b = a + 1; b < zero_bits.size(); ++b) {
                joint.set(zero_bits[a], zero_bits[b],
                          joint.at(zero_bits[a], zero_bits[b]) + static_cast<double>(count));
            }
        }
    }

    SquareMatrix c = SquareMatrix::with_masked_diagonal(n);
    for (int i = 0; i < n; ++i) {
        const double zero_i = 1.0 - ground_one[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const double zero_j = 1.0 - ground_one[static_cast<std::size_t>(j)];
            const double joint_freq = joint.at(i, j) / static_cast<double>(total);
            const double cov = joint_freq - zero_i * zero_j;
            c.set(i, j, cov);
            c.set(j, i, cov);
        }
    }
    return c;
}

CorrelatorSet characterize(const CountsTable& counts) {
    CorrelatorSet result;
    result.num_qubits = counts.num_qubits();
    result.shots = counts.shots();
    result.epsilon = estimate_epsilon(counts);
    result.a = estimate_a(counts);
    result.c = estimate_c(counts);
    result.bounds = sampling_bounds(counts.shots());
    return result;
}

}  // namespace qrec
