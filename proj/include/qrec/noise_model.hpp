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

#ifndef QREC_NOISE_MODEL_HPP_
#define QREC_NOISE_MODEL_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "qrec/bitstring.hpp"
#include "qrec/matrix.hpp"

namespace qrec {

/// Additive shift `delta` to the flip probability of qubit `target` that is
/// active whenever spectator qubit `spectator` was prepared in state 1.
struct SpectatorTerm {
    int target = 0;
    int spectator = 0;
    double delta = 0.0;
};

/// Per-shot joint flip: with probability `prob`, both readout bits of qubits
/// `low` and `high` are flipped together.
struct PairFlipTerm {
    int low = 0;
    int high = 0;
    double prob = 0.0;
};

/// Generative model of correlated readout noise for a classical true state.
///
/// Per shot, each qubit's readout bit flips independently with an effective
/// probability p01[i] or p10[i] (by true bit) plus any spectator shifts whose
/// spectator qubit is in true state 1, clamped to [0, 1]. On top of that,
/// every pair-flip term fires independently and XORs both of its readout
/// bits. Spectator shifts produce readout sensitivity to other qubits'
/// states; pair flips produce readout covariance.
///
/// Immutable after construction.
class NoiseModel {
  public:
    NoiseModel(int num_qubits, std::vector<double> p01, std::vector<double> p10,
               std::vector<SpectatorTerm> spectator01 = {},
               std::vector<SpectatorTerm> spectator10 = {},
               std::vector<PairFlipTerm> pairflip = {});

    int num_qubits() const { return num_qubits_; }
    const std::vector<double>& p01() const { return p01_; }
    const std::vector<double>& p10() const { return p10_; }
    const std::vector<SpectatorTerm>& spectator01() const { return spectator01_; }
    const std::vector<SpectatorTerm>& spectator10() const { return spectator10_; }
    /// Normalized: low < high, sorted, unique pairs.
    const std::vector<PairFlipTerm>& pairflip() const { return pairflip_; }

    /// Spectator shifts acting on `target` as (spectator, delta) pairs.
    const std::vector<std::pair<int, double>>& shifts01_for(int target) const {
        return shifts01_[static_cast<std::size_t>(target)];
    }
    const std::vector<std::pair<int, double>>& shifts10_for(int target) const {
        return shifts10_[static_cast<std::size_t>(target)];
    }

  private:
    int num_qubits_ = 0;
    std::vector<double> p01_;
    std::vector<double> p10_;
    std::vector<SpectatorTerm> spectator01_;
    std::vector<SpectatorTerm> spectator10_;
    std::vector<PairFlipTerm> pairflip_;
    std::vector<std::vector<std::pair<int, double>>> shifts01_;
    std::vector<std::vector<std::pair<int, double>>> shifts10_;
};

/// Per-qubit flip probabilities for one prepared state, plus the number of
/// entries that had to be clamped back into [0, 1]. User-supplied shifts may
/// be unphysical; clamping with a visible counter beats failing silently.
struct FlipProbs {
    std::vector<double> probs;
    int clamped = 0;
};

FlipProbs effective_flip_probs(const NoiseModel& model, const BitVec& true_state);

/// Draws `shots` readouts of `true_state` and returns the bitstring counts.
/// Identical (model, state, shots, seed) give bit-identical histograms.
Histogram sample_readout(const NoiseModel& model, const BitVec& true_state, std::uint64_t shots,
                         std::uint64_t seed);

/// Exact outcome distribution over all 2^n bitstrings; probs[x] indexes
/// outcomes with bit k of x holding qubit k's readout.
struct ExactDistribution {
    int num_qubits = 0;
    std::vector<double> probs;
};

/// Largest allowed enumeration size 2^(n + pairflip terms).
inline constexpr std::uint64_t kDefaultEnumerationLimit = 1ULL << 24;

/// Exact readout distribution by summing over every combination of pair-flip
/// events, with the independent per-qubit flips folded in analytically.
/// Matches sample_readout in the infinite-shot limit.
ExactDistribution exact_distribution(const NoiseModel& model, const BitVec& true_state,
                                     std::uint64_t max_enumeration = kDefaultEnumerationLimit);

/// Ground-truth correlators in the infinite-shot limit.
///
/// epsilon[i] averages the two misread probabilities of qubit i. a(i, j) is
/// the drop in qubit i's read-1 probability when spectator j is excited
/// versus ground. c(i, j) is the covariance of the read-0 indicators of
/// qubits i and j in the all-zero preparation. Diagonals of `a` and `c` are
/// masked.
struct CorrelatorMatrices {
    int num_qubits = 0;
    std::vector<double> epsilon;
    SquareMatrix a;
    SquareMatrix c;
};

/// Evaluates the correlator definitions on exact distributions of the ground
/// state and each single-excitation state.
CorrelatorMatrices exact_correlators(const NoiseModel& model,
                                     std::uint64_t max_enumeration = kDefaultEnumerationLimit);

}  // namespace qrec

#endif  // QREC_NOISE_MODEL_HPP_
