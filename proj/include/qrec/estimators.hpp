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

#ifndef QREC_ESTIMATORS_HPP_
#define QREC_ESTIMATORS_HPP_

#include <cstdint>
#include <vector>

#include "qrec/bitstring.hpp"
#include "qrec/matrix.hpp"
#include "qrec/protocol.hpp"

namespace qrec {

/// Worst-case standard errors at N shots per preparation.
///
/// single_prob bounds one estimated outcome probability; eps_or_a bounds the
/// epsilon and spectator (A) estimators, which each combine two estimated
/// probabilities; c bounds the covariance (C) estimator. Correlators below
/// these floors are consistent with pure sampling noise.
struct SamplingBounds {
    double single_prob = 0.0;  // (2 sqrt(N))^-1
    double eps_or_a = 0.0;     // (sqrt(2N))^-1
    double c = 0.0;            // (2 sqrt(N))^-1
    double global = 0.0;       // (sqrt(2N))^-1, valid for all three estimators
};

SamplingBounds sampling_bounds(std::uint64_t shots);

/// Estimated correlators plus the sampling-error bounds they came with.
///
/// a(i, j) is the read-1 probability of qubit i in the ground preparation
/// minus the same probability with spectator j excited; it is not symmetric
/// and a(i, j) / a(j, i) are independent estimates. c is exactly symmetric by
/// construction. Both diagonals are masked. Estimates are reported unclipped;
/// sampling noise may push them slightly past their ideal ranges.
struct CorrelatorSet {
    int num_qubits = 0;
    std::uint64_t shots = 0;
    std::vector<double> epsilon;
    SquareMatrix a;
    SquareMatrix c;
    SamplingBounds bounds;
};

/// Fraction of shots in which bit `qubit` reads 1.
double marginal_one_prob(const Histogram& histogram, int qubit);

/// Fraction of shots in which bits `qubit_i` and `qubit_j` both read 0.
double joint_zero_prob(const Histogram& histogram, int qubit_i, int qubit_j);

/// Symmetrized per-qubit readout error: the average of qubit i's read-1
/// frequency in the ground preparation and its read-0 frequency in its own
/// excited preparation.
std::vector<double> estimate_epsilon(const CountsTable& counts);

/// Spectator sensitivity matrix A.
SquareMatrix estimate_a(const CountsTable& counts);

/// Read-0 covariance matrix C, estimated from the ground preparation only.
SquareMatrix estimate_c(const CountsTable& counts);

/// All three estimators plus sampling_bounds(counts.shots()).
CorrelatorSet characterize(const CountsTable& counts);

}  // namespace qrec

#endif  // QREC_ESTIMATORS_HPP_
