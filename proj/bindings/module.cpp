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

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qrec/analysis.hpp"
#include "qrec/estimators.hpp"
#include "qrec/noise_model.hpp"
#include "qrec/protocol.hpp"
#include "qrec/random.hpp"
#include "qrec/serialization.hpp"
#include "qrec/topology.hpp"

namespace py = pybind11;

namespace {

py::list matrix_to_pylists(const qrec::SquareMatrix& matrix) {
    py::list rows;
    for (int i = 0; i < matrix.size(); ++i) {
        py::list row;
        for (int j = 0; j < matrix.size(); ++j) {
            if (matrix.masked(i, j)) {
                row.append(py::none());
            } else {
                row.append(matrix.at(i, j));
            }
        }
        rows.append(std::move(row));
    }
    return rows;
}

qrec::SquareMatrix pylists_to_matrix(const py::sequence& rows) {
    const int n = static_cast<int>(py::len(rows));
    qrec::SquareMatrix matrix = qrec::SquareMatrix::with_masked_diagonal(n);
    for (int i = 0; i < n; ++i) {
        const py::sequence row = rows[i].cast<py::sequence>();
        if (static_cast<int>(py::len(row)) != n) {
            throw std::invalid_argument("matrix rows must all have length " + std::to_string(n));
        }
        for (int j = 0; j < n; ++j) {
            const py::object cell = row[j];
            if (cell.is_none()) continue;
            matrix.set(i, j, cell.cast<double>());
        }
    }
    return matrix;
}

py::list distance_to_pylists(const qrec::DistanceMatrix& distances) {
    py::list rows;
    for (int i = 0; i < distances.size(); ++i) {
        py::list row;
        for (int j = 0; j < distances.size(); ++j) {
            if (distances.reachable(i, j)) {
                row.append(distances.at(i, j));
            } else {
                row.append(py::none());
            }
        }
        rows.append(std::move(row));
    }
    return rows;
}

py::dict bounds_to_pydict(const qrec::SamplingBounds& bounds) {
    py::dict d;
    d["single_prob"] = bounds.single_prob;
    d["eps_or_A"] = bounds.eps_or_a;
    d["C"] = bounds.c;
    d["global"] = bounds.global;
    return d;
}

py::dict correlator_matrices_to_pydict(const qrec::CorrelatorMatrices& m) {
    py::dict d;
    d["epsilon"] = m.epsilon;
    d["A"] = matrix_to_pylists(m.a);
    d["C"] = matrix_to_pylists(m.c);
    return d;
}

qrec::Preparation parse_label(const std::string& label) {
    if (label == "ground") return qrec::Preparation::ground();
    if (label.rfind("x_", 0) == 0) {
        return qrec::Preparation::excited(std::stoi(label.substr(2)));
    }
    throw std::invalid_argument("unknown preparation label \"" + label + "\"");
}

std::optional<qrec::BitOrder> parse_bit_order(const std::optional<std::string>& text) {
    if (!text) return {};
    return qrec::bit_order_from_string(*text);
}

std::vector<qrec::SpectatorTerm> spectator_terms(
    const std::vector<std::tuple<int, int, double>>& terms) {
    std::vector<qrec::SpectatorTerm> out;
    out.reserve(terms.size());
    for (const auto& [target, spectator, delta] : terms) out.push_back({target, spectator, delta});
    return out;
}

std::vector<qrec::PairFlipTerm> pairflip_terms(
    const std::vector<std::tuple<int, int, double>>& terms) {
    std::vector<qrec::PairFlipTerm> out;
    out.reserve(terms.size());
    for (const auto& [a, b, prob] : terms) out.push_back({a, b, prob});
    return out;
}

}  // namespace

PYBIND11_MODULE(_qrec, m) {
    m.doc() = "Correlated readout-error characterization toolkit";

    py::class_<qrec::Topology>(m, "Topology",
                               "Device coupling graph with normalized undirected edges.")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("num_qubits"),
             py::arg("edges"))
        .def_property_readonly("num_qubits", &qrec::Topology::num_qubits)
        .def_property_readonly("edges", &qrec::Topology::edges)
        .def("neighbors", &qrec::Topology::neighbors, py::arg("qubit"))
        .def_static(
            "from_json",
            [](const std::string& text) {
                return qrec::topology_from_json(qrec::parse_json_text(text, "topology"));
            },
            py::arg("text"))
        .def("to_json",
             [](const qrec::Topology& t) { return qrec::dump_json(qrec::topology_to_json(t)); });

    py::class_<qrec::DistanceMatrix>(m, "DistanceMatrix",
                                     "All-pairs minimum hop counts; unreachable pairs are None "
                                     "in to_lists() and UNREACHABLE from at().")
        .def_property_readonly("size", &qrec::DistanceMatrix::size)
        .def("at", &qrec::DistanceMatrix::at, py::arg("i"), py::arg("j"))
        .def("reachable", &qrec::DistanceMatrix::reachable, py::arg("i"), py::arg("j"))
        .def("to_lists", &distance_to_pylists)
        .def_readonly_static("UNREACHABLE", &qrec::DistanceMatrix::kUnreachable);

    m.def("min_distances", &qrec::min_distances, py::arg("topology"),
          "Minimum coupling-edge counts between every qubit pair.");

    py::class_<qrec::NoiseModel>(m, "NoiseModel",
                                 "Correlated readout-noise model: per-qubit flip probabilities, "
                                 "spectator shifts, and joint pair-flip events.")
        .def(py::init([](int num_qubits, std::vector<double> p01, std::vector<double> p10,
                         const std::vector<std::tuple<int, int, double>>& spectator01,
                         const std::vector<std::tuple<int, int, double>>& spectator10,
                         const std::vector<std::tuple<int, int, double>>& pairflip) {
                 return qrec::NoiseModel(num_qubits, std::move(p01), std::move(p10),
                                         spectator_terms(spectator01),
                                         spectator_terms(spectator10), pairflip_terms(pairflip));
             }),
             py::arg("num_qubits"), py::arg("p01"), py::arg("p10"),
             py::arg("spectator01") = std::vector<std::tuple<int, int, double>>{},
             py::arg("spectator10") = std::vector<std::tuple<int, int, double>>{},
             py::arg("pairflip") = std::vector<std::tuple<int, int, double>>{})
        .def_property_readonly("num_qubits", &qrec::NoiseModel::num_qubits)
        .def_property_readonly("p01", &qrec::NoiseModel::p01)
        .def_property_readonly("p10", &qrec::NoiseModel::p10)
        .def_static(
            "from_json",
            [](const std::string& text) {
                return qrec::noise_model_from_json(qrec::parse_json_text(text, "noise model"));
            },
            py::arg("text"))
        .def("to_json", [](const qrec::NoiseModel& model) {
            return qrec::dump_json(qrec::noise_model_to_json(model));
        });

    m.def(
        "effective_flip_probs",
        [](const qrec::NoiseModel& model, const qrec::BitVec& true_state) {
            const qrec::FlipProbs fp = qrec::effective_flip_probs(model, true_state);
            return py::make_tuple(fp.probs, fp.clamped);
        },
        py::arg("model"), py::arg("true_state"),
        "Per-qubit flip probabilities for a prepared state, plus the clamp count.");

    m.def("sample_readout", &qrec::sample_readout, py::arg("model"), py::arg("true_state"),
          py::arg("shots"), py::arg("seed"),
          "Histogram of measured bitstrings; deterministic in (model, state, shots, seed).");

    m.def(
        "exact_distribution",
        [](const qrec::NoiseModel& model, const qrec::BitVec& true_state,
           std::uint64_t max_enumeration) {
            return qrec::exact_distribution(model, true_state, max_enumeration).probs;
        },
        py::arg("model"), py::arg("true_state"),
        py::arg("max_enumeration") = qrec::kDefaultEnumerationLimit,
        "Exact outcome probabilities indexed so that bit k of the index is qubit k.");

    m.def(
        "exact_correlators",
        [](const qrec::NoiseModel& model, std::uint64_t max_enumeration) {
            return correlator_matrices_to_pydict(qrec::exact_correlators(model, max_enumeration));
        },
        py::arg("model"), py::arg("max_enumeration") = qrec::kDefaultEnumerationLimit,
        "Ground-truth epsilon/A/C in the infinite-shot limit (diagonals are None).");

    py::class_<qrec::Preparation>(m, "Preparation")
        .def_static("ground", &qrec::Preparation::ground)
        .def_static("excited", &qrec::Preparation::excited, py::arg("qubit"))
        .def_property_readonly("is_ground", &qrec::Preparation::is_ground)
        .def_property_readonly("excited_qubit", &qrec::Preparation::excited_qubit)
        .def_property_readonly("label", &qrec::Preparation::label)
        .def("true_state", &qrec::Preparation::true_state, py::arg("num_qubits"));

    m.def("preparation_set", &qrec::preparation_set, py::arg("num_qubits"),
          "The n+1 protocol preparations: ground, then each single-qubit excitation.");

    py::class_<qrec::CountsTable>(m, "CountsTable",
                                  "Histograms for all n+1 preparations at a uniform shot count.")
        .def_property_readonly("num_qubits", &qrec::CountsTable::num_qubits)
        .def_property_readonly("shots", &qrec::CountsTable::shots)
        .def(
            "histogram",
            [](const qrec::CountsTable& counts, const std::string& label) {
                return counts.histogram(parse_label(label));
            },
            py::arg("label"))
        .def("labels",
             [](const qrec::CountsTable& counts) {
                 std::vector<std::string> labels;
                 for (const auto& p : qrec::preparation_set(counts.num_qubits())) {
                     labels.push_back(p.label());
                 }
                 return labels;
             })
        .def_static(
            "from_json",
            [](const std::string& text, const std::optional<std::string>& bit_order) {
                return qrec::counts_from_json(qrec::parse_json_text(text, "counts"),
                                              parse_bit_order(bit_order));
            },
            py::arg("text"), py::arg("bit_order") = std::nullopt)
        .def("to_json", [](const qrec::CountsTable& counts) {
            return qrec::dump_json(qrec::counts_to_json(counts));
        })
        .def(py::self == py::self);

    m.def(
        "run_protocol",
        [](const py::function& backend, int num_qubits, std::uint64_t shots, std::uint64_t seed) {
            const qrec::Backend wrapped = [&backend](const qrec::BitVec& state,
                                                     std::uint64_t backend_shots,
                                                     std::uint64_t backend_seed) {
                return backend(state, backend_shots, backend_seed).cast<qrec::Histogram>();
            };
            return qrec::run_protocol(wrapped, num_qubits, shots, seed);
        },
        py::arg("backend"), py::arg("num_qubits"), py::arg("shots"), py::arg("seed"),
        "Run every preparation against backend(state, shots, seed) -> {bitstring: count}.");

    m.def(
        "simulate_protocol",
        [](const qrec::NoiseModel& model, std::uint64_t shots, std::uint64_t seed) {
            return qrec::run_protocol(qrec::simulator_backend(model), model.num_qubits(), shots,
                                      seed);
        },
        py::arg("model"), py::arg("shots"), py::arg("seed"),
        "Run the full preparation protocol against the simulated noise model.");

    py::class_<qrec::CorrelatorSet>(m, "CorrelatorSet",
                                    "Estimated correlators plus sampling-error bounds.")
        .def_property_readonly("num_qubits",
                               [](const qrec::CorrelatorSet& c) { return c.num_qubits; })
        .def_property_readonly("shots", [](const qrec::CorrelatorSet& c) { return c.shots; })
        .def_property_readonly("epsilon", [](const qrec::CorrelatorSet& c) { return c.epsilon; })
        .def("a_matrix", [](const qrec::CorrelatorSet& c) { return matrix_to_pylists(c.a); })
        .def("c_matrix", [](const qrec::CorrelatorSet& c) { return matrix_to_pylists(c.c); })
        .def_property_readonly("bounds",
                               [](const qrec::CorrelatorSet& c) { return bounds_to_pydict(c.bounds); })
        .def("to_json", [](const qrec::CorrelatorSet& c) {
            return qrec::dump_json(qrec::correlator_set_to_json(c));
        });

    m.def("characterize", &qrec::characterize, py::arg("counts"),
          "Estimate epsilon, A, and C from a counts table, with sampling bounds.");
    m.def("estimate_epsilon", &qrec::estimate_epsilon, py::arg("counts"));
    m.def(
        "estimate_a",
        [](const qrec::CountsTable& counts) { return matrix_to_pylists(qrec::estimate_a(counts)); },
        py::arg("counts"));
    m.def(
        "estimate_c",
        [](const qrec::CountsTable& counts) { return matrix_to_pylists(qrec::estimate_c(counts)); },
        py::arg("counts"));
    m.def("marginal_one_prob", &qrec::marginal_one_prob, py::arg("histogram"), py::arg("qubit"),
          "Fraction of shots whose bit `qubit` reads 1.");
    m.def(
        "sampling_bounds",
        [](std::uint64_t shots) { return bounds_to_pydict(qrec::sampling_bounds(shots)); },
        py::arg("shots"), "Worst-case standard errors at N shots per preparation.");

    m.def(
        "histogram",
        [](const std::vector<double>& values, const std::vector<double>& edges) {
            const qrec::HistogramResult h = qrec::histogram(values, edges);
            py::dict d;
            d["edges"] = h.edges;
            d["counts"] = h.counts;
            d["underflow"] = h.underflow;
            d["overflow"] = h.overflow;
            return d;
        },
        py::arg("values"), py::arg("edges"),
        "Half-open binning with separate underflow/overflow counters.");
    m.def("log_spaced_edges", &qrec::log_spaced_edges, py::arg("lo"), py::arg("hi"),
          py::arg("bins"));
    m.def("linear_edges", &qrec::linear_edges, py::arg("lo"), py::arg("hi"), py::arg("bins"));
    m.def(
        "interpolated_quantile",
        [](std::vector<double> sorted, double p) { return qrec::interpolated_quantile(sorted, p); },
        py::arg("sorted_values"), py::arg("p"),
        "Linear-interpolation quantile of an ascending sample.");

    m.def(
        "bin_by_distance",
        [](const py::sequence& matrix, const qrec::DistanceMatrix& distances) {
            const qrec::DistanceSummary summary =
                qrec::bin_by_distance(pylists_to_matrix(matrix), distances);
            py::list bins;
            for (const qrec::DistanceBin& bin : summary.bins) {
                py::dict b;
                b["distance"] = bin.distance;
                b["count"] = bin.count;
                b["min"] = bin.min;
                b["q1"] = bin.q1;
                b["median"] = bin.median;
                b["q3"] = bin.q3;
                b["max"] = bin.max;
                bins.append(std::move(b));
            }
            py::dict d;
            d["bins"] = bins;
            d["excluded_pairs"] = summary.excluded_pairs;
            return d;
        },
        py::arg("matrix"), py::arg("distances"),
        "Five-number summaries of |matrix[i][j]| per coupling distance (None masks a cell).");

    m.def(
        "noise_floor_classification",
        [](const qrec::CorrelatorSet& correlators, double multiplier) {
            const qrec::FloorClassification flags =
                qrec::noise_floor_classification(correlators, multiplier);
            auto to_lists = [&](const std::vector<std::int8_t>& cells) {
                py::list rows;
                for (int i = 0; i < flags.num_qubits; ++i) {
                    py::list row;
                    for (int j = 0; j < flags.num_qubits; ++j) {
                        const std::int8_t f =
                            cells[static_cast<std::size_t>(i) * flags.num_qubits +
                                  static_cast<std::size_t>(j)];
                        if (f < 0) {
                            row.append(py::none());
                        } else {
                            row.append(f == 1);
                        }
                    }
                    rows.append(std::move(row));
                }
                return rows;
            };
            py::dict d;
            d["multiplier"] = flags.multiplier;
            d["A"] = to_lists(flags.a_flags);
            d["C"] = to_lists(flags.c_flags);
            return d;
        },
        py::arg("correlators"), py::arg("multiplier") = 1.0,
        "True where a correlator magnitude is strictly above multiplier * noise floor.");

    m.def("derive_subseed", &qrec::derive_subseed, py::arg("seed"), py::arg("index"),
          "Deterministic per-preparation sub-seed.");

    m.attr("DEFAULT_ENUMERATION_LIMIT") = qrec::kDefaultEnumerationLimit;
#ifdef QREC_VERSION
    m.attr("__version__") = QREC_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
