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

#ifndef QREC_PROTOCOL_HPP_
#define QREC_PROTOCOL_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qrec/bitstring.hpp"
#include "qrec/noise_model.hpp"

namespace qrec {

/// One prepared state of the characterization protocol: either the all-zero
/// ground state or the state with exactly one qubit excited.
class Preparation {
  public:
    static Preparation ground() { return Preparation(-1); }
    static Preparation excited(int qubit);

    bool is_ground() const { return excited_qubit_ < 0; }

    /// Excited qubit index, or -1 for the ground preparation.
    int excited_qubit() const { return excited_qubit_; }

    /// "ground" or "x_<k>"; the keys used in counts files.
    std::string label() const;

    BitVec true_state(int num_qubits) const;

    friend bool operator==(const Preparation& a, const Preparation& b) {
        return a.excited_qubit_ == b.excited_qubit_;
    }

  private:
    explicit Preparation(int excited_qubit) : excited_qubit_(excited_qubit) {}
    int excited_qubit_;
};

/// The n+1 preparations needed to estimate all correlators: ground first,
/// then each single-qubit excitation in qubit order.
std::vector<Preparation> preparation_set(int num_qubits);

/// Measured histograms for all n+1 preparations at a uniform shot count.
///
/// Index 0 holds the ground histogram, index k+1 the histogram for the
/// preparation exciting qubit k. Construction validates completeness, the
/// uniform shot total, and every bitstring.
class CountsTable {
  public:
    CountsTable(int num_qubits, std::uint64_t shots, std::vector<Histogram> histograms);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t shots() const { return shots_; }

    const Histogram& histogram(const Preparation& prep) const;
    const Histogram& ground_histogram() const { return histograms_[0]; }
    const Histogram& excited_histogram(int qubit) const;

    /// Histograms in preparation order (ground, x_0, ..., x_{n-1}).
    const std::vector<Histogram>& histograms() const { return histograms_; }

    friend bool operator==(const CountsTable& a, const CountsTable& b) {
        return a.num_qubits_ == b.num_qubits_ && a.shots_ == b.shots_ &&
               a.histograms_ == b.histograms_;
    }

  private:
    int num_qubits_ = 0;
    std::uint64_t shots_ = 0;
    std::vector<Histogram> histograms_;
};

/// Anything that can measure a prepared classical state `shots` times.
/// The seed argument is the stream handed to this preparation; file-backed
/// or hardware-backed implementations may ignore it.
using Backend = std::function<Histogram(const BitVec& true_state, std::uint64_t shots,
                                        std::uint64_t seed)>;

/// Backend that samples the given noise model.
Backend simulator_backend(NoiseModel model);

/// Runs every preparation against the backend and assembles the table.
/// Each preparation gets the sub-seed derive_subseed(seed, index), so the
/// result does not depend on execution order. A backend failure aborts with
/// the preparation label in the error.
CountsTable run_protocol(const Backend& backend, int num_qubits, std::uint64_t shots,
                         std::uint64_t seed);

}  // namespace qrec

#endif  // QREC_PROTOCOL_HPP_
