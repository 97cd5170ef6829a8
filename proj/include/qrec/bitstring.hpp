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

#ifndef QREC_BITSTRING_HPP_
#define QREC_BITSTRING_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrec {

/// Classical n-qubit state, one 0/1 entry per qubit.
using BitVec = std::vector<std::uint8_t>;

/// Measured bitstring counts. Keys use the canonical order: character k is
/// the readout of qubit k, so the leftmost character is qubit 0.
using Histogram = std::map<std::string, std::uint64_t>;

/// Canonical bitstring for an outcome index whose bit k is qubit k's readout.
inline std::string index_to_bitstring(std::uint64_t index, int num_qubits) {
    std::string s(static_cast<std::size_t>(num_qubits), '0');
    for (int k = 0; k < num_qubits; ++k) {
        if ((index >> k) & 1ULL) s[static_cast<std::size_t>(k)] = '1';
    }
    return s;
}

/// Outcome index for a classical state; bit k of the result is state[k].
inline std::uint64_t state_to_index(const BitVec& state) {
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < state.size(); ++k) {
        if (state[k]) index |= 1ULL << k;
    }
    return index;
}

/// Throws unless `bits` has length `num_qubits` and contains only '0'/'1'.
inline void validate_bitstring(const std::string& bits, int num_qubits) {
    if (bits.size() != static_cast<std::size_t>(num_qubits)) {
        throw std::invalid_argument("bitstring \"" + bits + "\" has length " +
                                    std::to_string(bits.size()) + ", expected " +
                                    std::to_string(num_qubits));
    }
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring \"" + bits + "\" contains character '" +
                                        std::string(1, c) + "'");
        }
    }
}

/// Throws unless every entry of `state` is 0 or 1 and the length matches.
inline void validate_state(const BitVec& state, int num_qubits) {
    if (state.size() != static_cast<std::size_t>(num_qubits)) {
        throw std::invalid_argument("state has length " + std::to_string(state.size()) +
                                    ", expected " + std::to_string(num_qubits));
    }
    for (auto b : state) {
        if (b > 1) throw std::invalid_argument("state entries must be 0 or 1");
    }
}

}  // namespace qrec

#endif  // QREC_BITSTRING_HPP_
