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

#include "qrec/protocol.hpp"

#include <stdexcept>
#include <utility>

#include "qrec/random.hpp"

namespace qrec {

Preparation Preparation::excited(int qubit) {
    if (qubit < 0) {
        throw std::invalid_argument("excited qubit index must be non-negative, got " +
                                    std::to_string(qubit));
    }
    return Preparation(qubit);
}

std::string Preparation::label() const {
    return is_ground() ? "ground" : "x_" + std::to_string(excited_qubit_);
}

BitVec Preparation::true_state(int num_qubits) const {
    if (!is_ground() && excited_qubit_ >= num_qubits) {
        throw std::invalid_argument("preparation " + label() + " does not fit in " +
                                    std::to_string(num_qubits) + " qubits");
    }
    BitVec state(static_cast<std::size_t>(num_qubits), 0);
    if (!is_ground()) state[static_cast<std::size_t>(excited_qubit_)] = 1;
    return state;
}

std::vector<Preparation> preparation_set(int num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("num_qubits must be at least 1, got " +
                                    std::to_string(num_qubits));
    }
    std::vector<Preparation> preps;
    preps.reserve(static_cast<std::size_t>(num_qubits) + 1);
    preps.push_back(Preparation::ground());
    for (int k = 0; k < num_qubits; ++k) preps.push_back(Preparation::excited(k));
    return preps;
}

CountsTable::CountsTable(int num_qubits, std::uint64_t shots, std::vector<Histogram> histograms)
    : num_qubits_(num_qubits), shots_(shots), histograms_(std::move(histograms)) {
    if (num_qubits_ < 1) {
        throw std::invalid_argument("num_qubits must be at least 1, got " +
                                    std::to_string(num_qubits_));
    }
    if (shots_ == 0) throw std::invalid_argument("shots must be at least 1");
    const auto expected = static_cast<std::size_t>(num_qubits_) + 1;
    if (histograms_.size() != expected) {
        throw std::invalid_argument("counts table needs " + std::to_string(expected) +
                                    " preparations, got " + std::to_string(histograms_.size()));
    }
    const auto preps = preparation_set(num_qubits_);
    for (std::size_t p = 0; p < histograms_.size(); ++p) {
        std::uint64_t total = 0;
        for (const auto& [bits, count] : histograms_[p]) {
            validate_bitstring(bits, num_qubits_);
            total += count;
        }
        if (total != shots_) {
            throw std::invalid_argument("count total mismatch for preparation \"" +
                                        preps[p].label() + "\": histogram sums to " +
                                        std::to_string(total) + ", declared shots " +
                                        std::to_string(shots_));
        }
    }
}

const Histogram& CountsTable::histogram(const Preparation& prep) const {
    return prep.is_ground() ? ground_histogram() : excited_histogram(prep.excited_qubit());
}

const Histogram& CountsTable::excited_histogram(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::out_of_range("excited qubit index " + std::to_string(qubit) +
                                " out of range [0, " + std::to_string(num_qubits_) + ")");
    }
    return histograms_[static_cast<std::size_t>(qubit) + 1];
}

Backend simulator_backend(NoiseModel model) {
    return [model = std::move(model)](const BitVec& true_state, std::uint64_t shots,
                                      std::uint64_t seed) {
        return sample_readout(model, true_state, shots, seed);
    };
}

CountsTable run_protocol(const Backend& backend, int num_qubits, std::uint64_t shots,
                         std::uint64_t seed) {
    if (!backend) throw std::invalid_argument("backend must be callable");
    if (shots == 0) throw std::invalid_argument("shots must be at least 1");
    const auto preps = preparation_set(num_qubits);
    std::vector<Histogram> histograms;
    histograms.reserve(preps.size());
    for (std::size_t index = 0; index < preps.size(); ++index) {
        const BitVec state = preps[index].true_state(num_qubits);
        try {
            histograms.push_back(backend(state, shots, derive_subseed(seed, index)));
        } catch (const std::exception& e) {
            throw std::runtime_error("backend failed for preparation \"" + preps[index].label() +
                                     "\": " + e.what());
        }
    }
    return CountsTable(num_qubits, shots, std::move(histograms));
}

}  // namespace qrec
