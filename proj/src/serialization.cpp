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

#include "qrec/serialization.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <stdexcept>

#include "qrec/format.hpp"

namespace qrec {

namespace {

void check_keys(const Json& obj, std::initializer_list<const char*> allowed,
                const std::string& what) {
    if (!obj.is_object()) throw std::invalid_argument(what + " must be a JSON object");
    for (const auto& [key, value] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return key == k; }) == allowed.end()) {
            throw std::invalid_argument("unknown key \"" + key + "\" in " + what);
        }
    }
}

const Json& require(const Json& obj, const char* key, const std::string& what) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw std::invalid_argument(what + " is missing required key \"" + key + "\"");
    }
    return *it;
}

int get_positive_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
        throw std::invalid_argument(what + " must be a positive integer");
    }
    const auto v = j.get<std::int64_t>();
    if (v > 1000000) throw std::invalid_argument(what + " is implausibly large");
    return static_cast<int>(v);
}

std::uint64_t get_uint(const Json& j, const std::string& what) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(j.get<std::int64_t>());
    }
    throw std::invalid_argument(what + " must be a non-negative integer");
}

double get_number(const Json& j, const std::string& what) {
    if (!j.is_number()) throw std::invalid_argument(what + " must be a number");
    return j.get<double>();
}

int get_index(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw std::invalid_argument(what + " must be an integer");
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v > 1000000) throw std::invalid_argument(what + " out of range");
    return static_cast<int>(v);
}

std::vector<double> get_number_array(const Json& j, const std::string& what) {
    if (!j.is_array()) throw std::invalid_argument(what + " must be an array");
    std::vector<double> values;
    values.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        values.push_back(get_number(j[k], what + "[" + std::to_string(k) + "]"));
    }
    return values;
}

}  // namespace

std::string to_string(BitOrder order) { return order == BitOrder::kMsb ? "msb" : "lsb"; }

BitOrder bit_order_from_string(const std::string& text) {
    if (text == "msb") return BitOrder::kMsb;
    if (text == "lsb") return BitOrder::kLsb;
    throw std::invalid_argument("bit_order must be \"msb\" or \"lsb\", got \"" + text + "\"");
}

Json topology_to_json(const Topology& topology) {
    Json j;
    j["num_qubits"] = topology.num_qubits();
    Json edges = Json::array();
    for (const auto& [a, b] : topology.edges()) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    return j;
}

Topology topology_from_json(const Json& j) {
    check_keys(j, {"num_qubits", "edges"}, "topology");
    const int n = get_positive_int(require(j, "num_qubits", "topology"), "topology num_qubits");
    const Json& edges_json = require(j, "edges", "topology");
    if (!edges_json.is_array()) throw std::invalid_argument("topology edges must be an array");
    std::vector<Topology::Edge> edges;
    edges.reserve(edges_json.size());
    for (std::size_t k = 0; k < edges_json.size(); ++k) {
        const Json& e = edges_json[k];
        const std::string what = "topology edge " + std::to_string(k);
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument(what + " must be a pair [i, j]");
        }
        edges.emplace_back(get_index(e[0], what), get_index(e[1], what));
    }
    return Topology(n, edges);
}

Json noise_model_to_json(const NoiseModel& model) {
    Json j;
    j["num_qubits"] = model.num_qubits();
    j["p01"] = model.p01();
    j["p10"] = model.p10();
    auto spectator_json = [](const std::vector<SpectatorTerm>& terms) {
        Json arr = Json::array();
        for (const auto& t : terms) arr.push_back(Json::array({t.target, t.spectator, t.delta}));
        return arr;
    };
    j["spectator01"] = spectator_json(model.spectator01());
    j["spectator10"] = spectator_json(model.spectator10());
    Json pairs = Json::array();
    for (const auto& t : model.pairflip()) pairs.push_back(Json::array({t.low, t.high, t.prob}));
    j["pairflip"] = pairs;
    return j;
}

NoiseModel noise_model_from_json(const Json& j) {
    check_keys(j, {"num_qubits", "p01", "p10", "spectator01", "spectator10", "pairflip"},
               "noise model");
    const int n = get_positive_int(require(j, "num_qubits", "noise model"), "num_qubits");
    auto p01 = get_number_array(require(j, "p01", "noise model"), "p01");
    auto p10 = get_number_array(require(j, "p10", "noise model"), "p10");

    auto read_triples = [&](const char* key) {
        std::vector<std::array<double, 3>> out;
        const auto it = j.find(key);
        if (it == j.end()) return out;  // missing sparse sections default to empty
        if (!it->is_array()) {
            throw std::invalid_argument(std::string(key) + " must be an array");
        }
        for (std::size_t k = 0; k < it->size(); ++k) {
            const Json& e = (*it)[k];
            const std::string what = std::string(key) + " entry " + std::to_string(k);
            if (!e.is_array() || e.size() != 3) {
                throw std::invalid_argument(what + " must be a triple [i, j, value]");
            }
            out.push_back({static_cast<double>(get_index(e[0], what)),
                           static_cast<double>(get_index(e[1], what)),
                           get_number(e[2], what)});
        }
        return out;
    };

    std::vector<SpectatorTerm> spectator01;
    for (const auto& t : read_triples("spectator01")) {
        spectator01.push_back({static_cast<int>(t[0]), static_cast<int>(t[1]), t[2]});
    }
    std::vector<SpectatorTerm> spectator10;
    for (const auto& t : read_triples("spectator10")) {
        spectator10.push_back({static_cast<int>(t[0]), static_cast<int>(t[1]), t[2]});
    }
    std::vector<PairFlipTerm> pairflip;
    for (const auto& t : read_triples("pairflip")) {
        pairflip.push_back({static_cast<int>(t[0]), static_cast<int>(t[1]), t[2]});
    }
    return NoiseModel(n, std::move(p01), std::move(p10), std::move(spectator01),
                      std::move(spectator10), std::move(pairflip));
}

Json counts_to_json(const CountsTable& counts) {
    Json j;
    j["num_qubits"] = counts.num_qubits();
    j["shots"] = counts.shots();
    j["bit_order"] = to_string(BitOrder::kMsb);
    Json preparations = Json::object();
    const auto preps = preparation_set(counts.num_qubits());
    for (std::size_t p = 0; p < preps.size(); ++p) {
        Json hist = Json::object();
        for (const auto& [bits, count] : counts.histograms()[p]) hist[bits] = count;
        preparations[preps[p].label()] = std::move(hist);
    }
    j["preparations"] = preparations;
    return j;
}

CountsTable counts_from_json(const Json& j, std::optional<BitOrder> order_override) {
    check_keys(j, {"num_qubits", "shots", "bit_order", "preparations"}, "counts file");
    const int n = get_positive_int(require(j, "num_qubits", "counts file"), "num_qubits");
    const std::uint64_t shots = get_uint(require(j, "shots", "counts file"), "shots");
    const Json& declared = require(j, "bit_order", "counts file");
    if (!declared.is_string()) throw std::invalid_argument("bit_order must be a string");
    const BitOrder order =
        order_override ? *order_override : bit_order_from_string(declared.get<std::string>());

    const Json& preparations = require(j, "preparations", "counts file");
    if (!preparations.is_object()) {
        throw std::invalid_argument("preparations must be an object keyed by label");
    }
    const auto preps = preparation_set(n);
    for (const auto& [label, value] : preparations.items()) {
        if (std::none_of(preps.begin(), preps.end(),
                         [&](const Preparation& p) { return p.label() == label; })) {
            throw std::invalid_argument("unexpected preparation \"" + label + "\" in counts file");
        }
    }

    std::vector<Histogram> histograms;
    histograms.reserve(preps.size());
    for (const auto& prep : preps) {
        const auto it = preparations.find(prep.label());
        if (it == preparations.end()) {
            throw std::invalid_argument("missing preparation \"" + prep.label() +
                                        "\" in counts file");
        }
        if (!it->is_object()) {
            throw std::invalid_argument("preparation \"" + prep.label() +
                                        "\" must be an object of bitstring counts");
        }
        Histogram hist;
        for (const auto& [bits, count] : it->items()) {
            validate_bitstring(bits, n);
            std::string canonical = bits;
            if (order == BitOrder::kLsb) std::reverse(canonical.begin(), canonical.end());
            hist[canonical] = get_uint(count, "count for \"" + bits + "\" in preparation \"" +
                                                  prep.label() + "\"");
        }
        histograms.push_back(std::move(hist));
    }
    return CountsTable(n, shots, std::move(histograms));
}

Json matrix_to_json(const SquareMatrix& matrix) {
    Json rows = Json::array();
    for (int i = 0; i < matrix.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < matrix.size(); ++j) {
            if (matrix.masked(i, j)) {
                row.push_back(nullptr);
            } else {
                row.push_back(matrix.at(i, j));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SquareMatrix matrix_from_json(const Json& j, const std::string& what) {
    if (!j.is_array()) throw std::invalid_argument(what + " must be an array of rows");
    const int n = static_cast<int>(j.size());
    SquareMatrix matrix = SquareMatrix::with_masked_diagonal(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw std::invalid_argument(what + " row " + std::to_string(i) + " must have " +
                                        std::to_string(n) + " entries");
        }
        for (int k = 0; k < n; ++k) {
            const Json& cell = row[static_cast<std::size_t>(k)];
            if (i == k) {
                if (!cell.is_null()) {
                    throw std::invalid_argument(what + " diagonal entry (" + std::to_string(i) +
                                                ", " + std::to_string(i) + ") must be null");
                }
            } else {
                matrix.set(i, k, get_number(cell, what + " entry (" + std::to_string(i) + ", " +
                                                      std::to_string(k) + ")"));
            }
        }
    }
    return matrix;
}

Json distance_matrix_to_json(const DistanceMatrix& distances) {
    Json rows = Json::array();
    for (int i = 0; i < distances.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < distances.size(); ++j) {
            if (distances.reachable(i, j)) {
                row.push_back(distances.at(i, j));
            } else {
                row.push_back(nullptr);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

Json bounds_to_json(const SamplingBounds& bounds) {
    Json j;
    j["single_prob"] = bounds.single_prob;
    j["eps_or_A"] = bounds.eps_or_a;
    j["C"] = bounds.c;
    j["global"] = bounds.global;
    return j;
}

SamplingBounds bounds_from_json(const Json& j) {
    check_keys(j, {"single_prob", "eps_or_A", "C", "global"}, "bounds");
    SamplingBounds b;
    b.single_prob = get_number(require(j, "single_prob", "bounds"), "bounds single_prob");
    b.eps_or_a = get_number(require(j, "eps_or_A", "bounds"), "bounds eps_or_A");
    b.c = get_number(require(j, "C", "bounds"), "bounds C");
    b.global = get_number(require(j, "global", "bounds"), "bounds global");
    return b;
}

void check_epsilon(const std::vector<double>& epsilon, int n) {
    if (static_cast<int>(epsilon.size()) != n) {
        throw std::invalid_argument("epsilon must have one entry per qubit");
    }
    for (double e : epsilon) {
        if (!(e >= 0.0 && e <= 1.0)) {
            throw std::invalid_argument("epsilon entries must lie in [0, 1]");
        }
    }
}

void check_symmetric(const SquareMatrix& c) {
    for (int i = 0; i < c.size(); ++i) {
        for (int j = i + 1; j < c.size(); ++j) {
            if (c.at(i, j) != c.at(j, i)) {
                throw std::invalid_argument("C matrix must be exactly symmetric; entry (" +
                                            std::to_string(i) + ", " + std::to_string(j) +
                                            ") differs from its transpose");
            }
        }
    }
}

}  // namespace

Json correlator_set_to_json(const CorrelatorSet& correlators) {
    Json j;
    j["num_qubits"] = correlators.num_qubits;
    j["shots"] = correlators.shots;
    j["epsilon"] = correlators.epsilon;
    j["A"] = matrix_to_json(correlators.a);
    j["C"] = matrix_to_json(correlators.c);
    j["bounds"] = bounds_to_json(correlators.bounds);
    return j;
}

Json exact_correlators_to_json(const CorrelatorMatrices& correlators) {
    Json j;
    j["num_qubits"] = correlators.num_qubits;
    j["exact"] = true;
    j["epsilon"] = correlators.epsilon;
    j["A"] = matrix_to_json(correlators.a);
    j["C"] = matrix_to_json(correlators.c);
    return j;
}

CorrelatorFile correlators_from_json(const Json& j) {
    check_keys(j, {"num_qubits", "shots", "epsilon", "A", "C", "bounds", "exact"},
               "correlator file");
    CorrelatorFile file;
    file.num_qubits =
        get_positive_int(require(j, "num_qubits", "correlator file"), "num_qubits");
    if (const auto it = j.find("exact"); it != j.end()) {
        if (!it->is_boolean()) throw std::invalid_argument("exact must be a boolean");
        file.exact = it->get<bool>();
    }
    file.epsilon = get_number_array(require(j, "epsilon", "correlator file"), "epsilon");
    check_epsilon(file.epsilon, file.num_qubits);
    file.a = matrix_from_json(require(j, "A", "correlator file"), "A matrix");
    file.c = matrix_from_json(require(j, "C", "correlator file"), "C matrix");
    if (file.a.size() != file.num_qubits || file.c.size() != file.num_qubits) {
        throw std::invalid_argument("matrix sizes must match num_qubits");
    }
    check_symmetric(file.c);
    if (file.exact) {
        if (j.contains("shots") || j.contains("bounds")) {
            throw std::invalid_argument("exact correlator files carry no shots or bounds");
        }
        return file;
    }
    file.shots = get_uint(require(j, "shots", "correlator file"), "shots");
    if (*file.shots == 0) throw std::invalid_argument("shots must be at least 1");
    file.bounds = bounds_from_json(require(j, "bounds", "correlator file"));
    return file;
}

namespace {

Json histogram_to_json(const HistogramResult& hist) {
    Json j;
    j["edges"] = hist.edges;
    j["counts"] = hist.counts;
    j["underflow"] = hist.underflow;
    j["overflow"] = hist.overflow;
    return j;
}

Json flags_matrix_to_json(const std::vector<std::int8_t>& flags, int n) {
    Json rows = Json::array();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < n; ++j) {
            const std::int8_t f = flags[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
            if (f < 0) {
                row.push_back(nullptr);
            } else {
                row.push_back(f == 1);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t count_above(const std::vector<std::int8_t>& flags) {
    std::uint64_t above = 0;
    for (const std::int8_t f : flags) {
        if (f == 1) ++above;
    }
    return above;
}

}  // namespace

Json summary_to_json(const AnalysisSummary& summary) {
    Json j;
    j["num_qubits"] = summary.num_qubits;
    if (summary.shots) {
        j["shots"] = *summary.shots;
    } else {
        j["shots"] = nullptr;
    }
    j["exact"] = summary.exact;

    Json histograms = Json::object();
    for (const auto& [name, hist] : summary.histograms) {
        histograms[name] = histogram_to_json(hist);
    }
    j["histograms"] = histograms;

    Json bins = Json::array();
    for (const DistanceBin& bin : summary.distance_summary.bins) {
        Json b;
        b["distance"] = bin.distance;
        b["count"] = bin.count;
        b["min"] = bin.min;
        b["q1"] = bin.q1;
        b["median"] = bin.median;
        b["q3"] = bin.q3;
        b["max"] = bin.max;
        bins.push_back(std::move(b));
    }
    j["distance_summary"] = bins;
    j["excluded_pairs"] = summary.distance_summary.excluded_pairs;

    if (summary.floor_flags) {
        const FloorClassification& flags = *summary.floor_flags;
        Json f;
        f["multiplier"] = flags.multiplier;
        f["A"] = flags_matrix_to_json(flags.a_flags, flags.num_qubits);
        f["C"] = flags_matrix_to_json(flags.c_flags, flags.num_qubits);
        Json above;
        above["A"] = count_above(flags.a_flags);
        above["C"] = count_above(flags.c_flags);
        f["above_floor"] = above;
        j["floor_flags"] = f;
    } else {
        j["floor_flags"] = nullptr;
    }

    Json matrices;
    matrices["A"] = matrix_to_json(summary.a);
    matrices["distance"] = distance_matrix_to_json(summary.distances);
    j["matrices"] = matrices;
    return j;
}

std::string distance_summary_to_csv(const DistanceSummary& summary) {
    std::string out = "distance,count,min,q1,median,q3,max\n";
    for (const DistanceBin& bin : summary.bins) {
        out += std::to_string(bin.distance) + ',' + std::to_string(bin.count) + ',' +
               format_double(bin.min) + ',' + format_double(bin.q1) + ',' +
               format_double(bin.median) + ',' + format_double(bin.q3) + ',' +
               format_double(bin.max) + '\n';
    }
    return out;
}

std::string histograms_to_csv(
    const std::vector<std::pair<std::string, HistogramResult>>& histograms) {
    std::string out = "quantity,bin,lower_edge,upper_edge,count\n";
    for (const auto& [name, hist] : histograms) {
        for (std::size_t k = 0; k < hist.counts.size(); ++k) {
            out += name + ',' + std::to_string(k) + ',' + format_double(hist.edges[k]) + ',' +
                   format_double(hist.edges[k + 1]) + ',' + std::to_string(hist.counts[k]) + '\n';
        }
        out += name + ",underflow,,," + std::to_string(hist.underflow) + '\n';
        out += name + ",overflow,,," + std::to_string(hist.overflow) + '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("failed reading file: " + path.string());
    return text;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // The parser message already carries line and column information.
        throw std::invalid_argument(origin + ": " + e.what());
    }
}

Json parse_json_file(const std::filesystem::path& path) {
    return parse_json_text(read_text_file(path), path.string());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path parent = path.parent_path();
    if (!parent.empty() && !std::filesystem::exists(parent)) {
        throw std::runtime_error("output directory does not exist: " + parent.string());
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open file for writing: " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("failed writing file: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_json_file_atomic(const std::filesystem::path& path, const Json& j) {
    write_text_file_atomic(path, dump_json(j));
}

}  // namespace qrec
