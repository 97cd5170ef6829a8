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

// qrec: characterize correlated readout errors on n-qubit devices.
//
// Four subcommands form a file-based pipeline; any stage can be fed files
// produced elsewhere (for example hardware counts) as long as the formats
// match:
//
//   simulate      noise model -> counts file (n+1 preparations)
//   characterize  counts file -> correlator file (epsilon, A, C, bounds)
//   analyze       correlator + topology files -> summary + CSV tables
//   oracle        noise model -> exact correlator file (enumeration)
//
// Exit codes: 0 success, 1 usage, 2 validation, 3 runtime.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qrec/analysis.hpp"
#include "qrec/estimators.hpp"
#include "qrec/noise_model.hpp"
#include "qrec/protocol.hpp"
#include "qrec/serialization.hpp"
#include "qrec/topology.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

struct SimulateOptions {
    std::string model_path;
    std::string out_path;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

struct CharacterizeOptions {
    std::string counts_path;
    std::string out_path;
    std::string bit_order;  // empty: use the order declared in the file
};

struct AnalyzeOptions {
    std::string correlators_path;
    std::string topology_path;
    std::string out_path;
    std::vector<double> edges;
    double floor_multiplier = 1.0;
};

struct OracleOptions {
    std::string model_path;
    std::string out_path;
    std::uint64_t max_enumeration = qrec::kDefaultEnumerationLimit;
};

// Output parents are validated before any work starts, so a long simulation
// cannot fail at the final write.
void check_output_path(const std::string& out_path) {
    const std::filesystem::path parent = std::filesystem::path(out_path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent)) {
        throw std::invalid_argument("output directory does not exist: " + parent.string());
    }
}

void run_simulate(const SimulateOptions& opt) {
    check_output_path(opt.out_path);
    const qrec::NoiseModel model =
        qrec::noise_model_from_json(qrec::parse_json_file(opt.model_path));

    // Surface clamped spectator shifts before spending time on shots.
    int clamped = 0;
    for (const auto& prep : qrec::preparation_set(model.num_qubits())) {
        clamped += qrec::effective_flip_probs(model, prep.true_state(model.num_qubits())).clamped;
    }
    if (clamped > 0) {
        std::cerr << "qrec: warning: " << clamped
                  << " effective flip probabilities clamped to [0, 1]\n";
    }

    const qrec::CountsTable counts = qrec::run_protocol(
        qrec::simulator_backend(model), model.num_qubits(), opt.shots, opt.seed);
    qrec::write_json_file_atomic(opt.out_path, qrec::counts_to_json(counts));
}

void run_characterize(const CharacterizeOptions& opt) {
    check_output_path(opt.out_path);
    std::optional<qrec::BitOrder> order;
    if (!opt.bit_order.empty()) order = qrec::bit_order_from_string(opt.bit_order);
    const qrec::CountsTable counts =
        qrec::counts_from_json(qrec::parse_json_file(opt.counts_path), order);
    const qrec::CorrelatorSet correlators = qrec::characterize(counts);
    qrec::write_json_file_atomic(opt.out_path, qrec::correlator_set_to_json(correlators));
}

std::filesystem::path sibling_path(const std::filesystem::path& out, const std::string& suffix) {
    std::filesystem::path p = out;
    p.replace_extension();
    p += suffix;
    return p;
}

void run_analyze(const AnalyzeOptions& opt) {
    check_output_path(opt.out_path);
    const qrec::CorrelatorFile correlators =
        qrec::correlators_from_json(qrec::parse_json_file(opt.correlators_path));
    const qrec::Topology topology =
        qrec::topology_from_json(qrec::parse_json_file(opt.topology_path));
    if (topology.num_qubits() != correlators.num_qubits) {
        throw std::invalid_argument(
            "num_qubits mismatch: correlator file has " + std::to_string(correlators.num_qubits) +
            ", topology has " + std::to_string(topology.num_qubits()));
    }

    const qrec::DistanceMatrix distances = qrec::min_distances(topology);

    qrec::AnalysisSummary summary;
    summary.num_qubits = correlators.num_qubits;
    summary.exact = correlators.exact;
    summary.shots = correlators.shots;

    // Magnitude histograms use the configured edges; signed histograms keep a
    // fixed linear binning so negative correlators stay visible.
    const std::vector<double> abs_edges =
        opt.edges.empty() ? qrec::log_spaced_edges(1e-5, 1.0, 20) : opt.edges;
    const std::vector<double> signed_edges = qrec::linear_edges(-1.0, 1.0, 20);
    const auto abs_a = qrec::collect_off_diagonal(correlators.a, true);
    const auto abs_c = qrec::collect_off_diagonal(correlators.c, true);
    const auto signed_a = qrec::collect_off_diagonal(correlators.a, false);
    const auto signed_c = qrec::collect_off_diagonal(correlators.c, false);
    summary.histograms.emplace_back("epsilon", qrec::histogram(correlators.epsilon, abs_edges));
    summary.histograms.emplace_back("A_abs", qrec::histogram(abs_a, abs_edges));
    summary.histograms.emplace_back("C_abs", qrec::histogram(abs_c, abs_edges));
    summary.histograms.emplace_back("A_signed", qrec::histogram(signed_a, signed_edges));
    summary.histograms.emplace_back("C_signed", qrec::histogram(signed_c, signed_edges));

    summary.distance_summary = qrec::bin_by_distance(correlators.a, distances);

    if (correlators.bounds) {
        qrec::CorrelatorSet set;
        set.num_qubits = correlators.num_qubits;
        set.shots = *correlators.shots;
        set.epsilon = correlators.epsilon;
        set.a = correlators.a;
        set.c = correlators.c;
        set.bounds = *correlators.bounds;
        summary.floor_flags = qrec::noise_floor_classification(set, opt.floor_multiplier);
    }

    summary.a = correlators.a;
    summary.distances = distances;

    const qrec::MatrixReport report = qrec::matrix_report(correlators.a, distances);
    qrec::write_json_file_atomic(opt.out_path, qrec::summary_to_json(summary));
    const std::filesystem::path out(opt.out_path);
    qrec::write_text_file_atomic(sibling_path(out, "_distance_summary.csv"),
                                 qrec::distance_summary_to_csv(summary.distance_summary));
    qrec::write_text_file_atomic(sibling_path(out, "_histograms.csv"),
                                 qrec::histograms_to_csv(summary.histograms));
    qrec::write_text_file_atomic(sibling_path(out, "_A_matrix.csv"), report.a_csv);
    qrec::write_text_file_atomic(sibling_path(out, "_C_matrix.csv"),
                                 qrec::matrix_to_csv(correlators.c));
    qrec::write_text_file_atomic(sibling_path(out, "_distance_matrix.csv"), report.distance_csv);
}

void run_oracle(const OracleOptions& opt) {
    check_output_path(opt.out_path);
    const qrec::NoiseModel model =
        qrec::noise_model_from_json(qrec::parse_json_file(opt.model_path));
    const qrec::CorrelatorMatrices exact = qrec::exact_correlators(model, opt.max_enumeration);
    qrec::write_json_file_atomic(opt.out_path, qrec::exact_correlators_to_json(exact));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlated readout-error characterization toolkit"};
    app.require_subcommand(1);

    SimulateOptions simulate_opt;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run the n+1 preparation protocol against a simulated noise model");
    simulate->add_option("--model", simulate_opt.model_path, "Noise model JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    simulate->add_option("--shots", simulate_opt.shots, "Shots per preparation")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", simulate_opt.seed, "Random seed (required: runs are reproducible)")
        ->required();
    simulate->add_option("--out", simulate_opt.out_path, "Output counts JSON file")->required();

    CharacterizeOptions characterize_opt;
    CLI::App* characterize =
        app.add_subcommand("characterize", "Estimate epsilon, A, and C from a counts file");
    characterize->add_option("--counts", characterize_opt.counts_path, "Counts JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    characterize->add_option("--out", characterize_opt.out_path, "Output correlator JSON file")
        ->required();
    characterize
        ->add_option("--bit-order", characterize_opt.bit_order,
                     "Override the bit order declared in the counts file (msb|lsb)")
        ->check(CLI::IsMember({"msb", "lsb"}));

    AnalyzeOptions analyze_opt;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Histogram correlators, bin them by coupling distance, flag the noise floor");
    analyze->add_option("--correlators", analyze_opt.correlators_path, "Correlator JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    analyze->add_option("--topology", analyze_opt.topology_path, "Topology JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    analyze->add_option("--out", analyze_opt.out_path, "Output summary JSON file")->required();
    analyze
        ->add_option("--edges", analyze_opt.edges,
                     "Histogram bin edges for magnitude histograms (comma separated, "
                     "strictly increasing)")
        ->delimiter(',');
    analyze
        ->add_option("--floor-multiplier", analyze_opt.floor_multiplier,
                     "Significance multiplier k for the noise floor comparison")
        ->check(CLI::NonNegativeNumber);

    OracleOptions oracle_opt;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Compute exact correlators for a noise model by enumeration");
    oracle->add_option("--model", oracle_opt.model_path, "Noise model JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    oracle->add_option("--out", oracle_opt.out_path, "Output exact correlator JSON file")
        ->required();
    oracle->add_option("--max-enum", oracle_opt.max_enumeration,
                       "Enumeration size limit on 2^(num_qubits + pairflip terms)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "qrec: usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) run_simulate(simulate_opt);
        if (characterize->parsed()) run_characterize(characterize_opt);
        if (analyze->parsed()) run_analyze(analyze_opt);
        if (oracle->parsed()) run_oracle(oracle_opt);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "qrec: error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qrec: error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        std::cerr << "qrec: error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "qrec: error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
