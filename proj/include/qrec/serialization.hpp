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

#ifndef QREC_SERIALIZATION_HPP_
#define QREC_SERIALIZATION_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrec/analysis.hpp"
#include "qrec/estimators.hpp"
#include "qrec/noise_model.hpp"
#include "qrec/protocol.hpp"
#include "qrec/topology.hpp"

namespace qrec {

/// Insertion-ordered JSON so written files keep a stable, readable key order.
using Json = nlohmann::ordered_json;

/// Convention for reading the bitstrings of a counts file.
///
/// kMsb is canonical: character k is qubit k, so the leftmost character
/// (the most significant position) is qubit 0. kLsb is the mirrored
/// convention common in hardware exports: the rightmost character is
/// qubit 0. Ingestion never guesses; the order is always declared.
enum class BitOrder { kMsb, kLsb };

std::string to_string(BitOrder order);
BitOrder bit_order_from_string(const std::string& text);

// --- Topology files: {"num_qubits": n, "edges": [[i, j], ...]} ---
Json topology_to_json(const Topology& topology);
Topology topology_from_json(const Json& j);

// --- Noise model files ---
Json noise_model_to_json(const NoiseModel& model);
NoiseModel noise_model_from_json(const Json& j);

// --- Counts files ---
/// Always writes canonical bit order ("msb").
Json counts_to_json(const CountsTable& counts);
/// Reads a counts file, normalizing bitstrings to canonical order. The
/// file's declared "bit_order" is used unless an override is supplied.
CountsTable counts_from_json(const Json& j, std::optional<BitOrder> order_override = {});

// --- Correlator files (estimated or exact) ---

/// Parsed correlator file. Estimated files carry shots and bounds; exact
/// files (written by the oracle) carry "exact": true instead.
struct CorrelatorFile {
    int num_qubits = 0;
    bool exact = false;
    std::optional<std::uint64_t> shots;
    std::vector<double> epsilon;
    SquareMatrix a;
    SquareMatrix c;
    std::optional<SamplingBounds> bounds;
};

Json correlator_set_to_json(const CorrelatorSet& correlators);
Json exact_correlators_to_json(const CorrelatorMatrices& correlators);
CorrelatorFile correlators_from_json(const Json& j);

/// Correlator matrix as an array of rows with null on masked cells.
Json matrix_to_json(const SquareMatrix& matrix);
SquareMatrix matrix_from_json(const Json& j, const std::string& what);

/// Distance matrix as rows of hop counts with null for unreachable pairs.
Json distance_matrix_to_json(const DistanceMatrix& distances);

// --- Analysis summary files ---

/// Everything cmd_analyze computes, ready for serialization.
struct AnalysisSummary {
    int num_qubits = 0;
    bool exact = false;
    std::optional<std::uint64_t> shots;
    std::vector<std::pair<std::string, HistogramResult>> histograms;
    DistanceSummary distance_summary;
    std::optional<FloorClassification> floor_flags;
    SquareMatrix a;
    DistanceMatrix distances;
};

Json summary_to_json(const AnalysisSummary& summary);
std::string distance_summary_to_csv(const DistanceSummary& summary);
std::string histograms_to_csv(
    const std::vector<std::pair<std::string, HistogramResult>>& histograms);

// --- File helpers ---

std::string read_text_file(const std::filesystem::path& path);

/// Parses JSON text; parse failures become validation errors prefixed with
/// `origin` and keep the parser's line/column information.
Json parse_json_text(const std::string& text, const std::string& origin);
Json parse_json_file(const std::filesystem::path& path);

/// Canonical dump: two-space indent, trailing newline, full-precision
/// round-trip doubles. Equal values always produce byte-identical text.
std::string dump_json(const Json& j);

/// Writes via a temp file in the same directory plus an atomic rename.
void write_text_file_atomic(const std::filesystem::path& path, const std::string& content);
void write_json_file_atomic(const std::filesystem::path& path, const Json& j);

}  // namespace qrec

#endif  // QREC_SERIALIZATION_HPP_
