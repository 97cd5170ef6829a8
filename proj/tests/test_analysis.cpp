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

#include "qrec/analysis.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "qrec/estimators.hpp"
#include "qrec/random.hpp"

using qrec::DistanceMatrix;
using qrec::SquareMatrix;

TEST_CASE("histogram basics") {
    const auto single = qrec::histogram(std::vector<double>{0.5}, {0.0, 1.0});
    CHECK(single.counts == std::vector<std::uint64_t>{1});
    CHECK(single.underflow == 0);
    CHECK(single.overflow == 0);

    const auto under = qrec::histogram(std::vector<double>{-0.1}, {0.0, 1.0});
    CHECK(under.counts == std::vector<std::uint64_t>{0});
    CHECK(under.underflow == 1);

    const auto half_open = qrec::histogram(std::vector<double>{0.0, 0.999, 1.0}, {0.0, 1.0});
    CHECK(half_open.counts == std::vector<std::uint64_t>{2});
    CHECK(half_open.overflow == 1);

    CHECK_THROWS_AS(qrec::histogram(std::vector<double>{}, {1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(qrec::histogram(std::vector<double>{}, {1.0}), std::invalid_argument);
}

TEST_CASE("histogram conserves its inputs") {
    qrec::Rng rng(0x4157);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> values;
        const int count = 1 + static_cast<int>(rng.uniform() * 300);
        for (int k = 0; k < count; ++k) values.push_back(rng.uniform() * 3.0 - 1.0);
        const auto edges = qrec::linear_edges(0.0, 1.0, 1 + static_cast<int>(rng.uniform() * 10));
        const auto result = qrec::histogram(values, edges);
        std::uint64_t binned = result.underflow + result.overflow;
        for (auto c : result.counts) binned += c;
        CHECK(binned == values.size());
    }
}

TEST_CASE("log spaced default edges span five decades") {
    const auto edges = qrec::log_spaced_edges(1e-5, 1.0, 20);
    REQUIRE(edges.size() == 21);
    CHECK(edges.front() == 1e-5);
    CHECK(edges.back() == 1.0);
    for (std::size_t k = 1; k < edges.size(); ++k) CHECK(edges[k] > edges[k - 1]);
}

TEST_CASE("linear interpolation quantiles") {
    const std::vector<double> sample{0.01, 0.02, 0.03, 0.04};
    CHECK(qrec::interpolated_quantile(sample, 0.0) == 0.01);
    CHECK(qrec::interpolated_quantile(sample, 0.25) == doctest::Approx(0.0175).epsilon(1e-15));
    CHECK(qrec::interpolated_quantile(sample, 0.5) == doctest::Approx(0.025).epsilon(1e-15));
    CHECK(qrec::interpolated_quantile(sample, 0.75) == doctest::Approx(0.0325).epsilon(1e-15));
    CHECK(qrec::interpolated_quantile(sample, 1.0) == 0.04);
    CHECK(qrec::interpolated_quantile(std::vector<double>{0.7}, 0.5) == 0.7);
}

namespace {

SquareMatrix constant_offdiag(int n, double value) {
    SquareMatrix m = SquareMatrix::with_masked_diagonal(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) m.set(i, j, value);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("distance bins of an all-zero matrix report zeros") {
    const auto topo = qrec_tests::path_topology(3);
    const auto summary =
        qrec::bin_by_distance(constant_offdiag(3, 0.0), qrec::min_distances(topo));
    REQUIRE(summary.bins.size() == 2);
    CHECK(summary.bins[0].distance == 1);
    CHECK(summary.bins[0].count == 4);
    CHECK(summary.bins[1].distance == 2);
    CHECK(summary.bins[1].count == 2);
    for (const auto& bin : summary.bins) {
        CHECK(bin.min == 0.0);
        CHECK(bin.q1 == 0.0);
        CHECK(bin.median == 0.0);
        CHECK(bin.q3 == 0.0);
        CHECK(bin.max == 0.0);
    }
    CHECK(summary.excluded_pairs == 0);
}

TEST_CASE("a constant matrix reports the constant in every bin") {
    const auto topo = qrec_tests::path_topology(6);
    const auto summary =
        qrec::bin_by_distance(constant_offdiag(6, -0.125), qrec::min_distances(topo));
    for (const auto& bin : summary.bins) {
        CHECK(bin.min == 0.125);
        CHECK(bin.q1 == 0.125);
        CHECK(bin.median == 0.125);
        CHECK(bin.q3 == 0.125);
        CHECK(bin.max == 0.125);
    }
}

TEST_CASE("quartile ordering holds for random matrices") {
    qrec::Rng rng(0xB14);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform() * 7);
        const qrec::Topology topo(n, qrec_tests::random_edges(n, 0.4, rng));
        SquareMatrix m = SquareMatrix::with_masked_diagonal(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) m.set(i, j, rng.uniform() * 2.0 - 1.0);
            }
        }
        const auto summary = qrec::bin_by_distance(m, qrec::min_distances(topo));
        std::size_t pooled = summary.excluded_pairs;
        for (const auto& bin : summary.bins) {
            CHECK(bin.min <= bin.q1);
            CHECK(bin.q1 <= bin.median);
            CHECK(bin.median <= bin.q3);
            CHECK(bin.q3 <= bin.max);
            pooled += bin.count;
        }
        CHECK(pooled == static_cast<std::size_t>(n) * (n - 1));
    }
}

TEST_CASE("unreachable pairs are excluded and counted, not binned as zeros") {
    // Two disconnected segments: 0-1 and 2-3.
    const qrec::Topology topo(4, {{0, 1}, {2, 3}});
    const auto summary =
        qrec::bin_by_distance(constant_offdiag(4, 0.5), qrec::min_distances(topo));
    REQUIRE(summary.bins.size() == 1);
    CHECK(summary.bins[0].distance == 1);
    CHECK(summary.bins[0].count == 4);
    CHECK(summary.excluded_pairs == 8);
}

TEST_CASE("distance-decaying couplings give strictly decreasing medians") {
    const int n = 10;
    const auto topo = qrec_tests::path_topology(n);
    const auto distances = qrec::min_distances(topo);
    std::vector<qrec::SpectatorTerm> spectators;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            spectators.push_back({i, j, 0.05 * std::pow(2.0, -distances.at(i, j))});
        }
    }
    const qrec::NoiseModel model(n, std::vector<double>(n, 0.01), std::vector<double>(n, 0.01),
                                 spectators);
    const auto exact = qrec::exact_correlators(model);
    const auto summary = qrec::bin_by_distance(exact.a, distances);
    REQUIRE(summary.bins.size() == static_cast<std::size_t>(n - 1));
    for (std::size_t k = 1; k < summary.bins.size(); ++k) {
        CHECK(summary.bins[k].median < summary.bins[k - 1].median);
    }
}

TEST_CASE("mismatched dimensions are rejected") {
    const auto distances = qrec::min_distances(qrec_tests::path_topology(3));
    CHECK_THROWS_AS(qrec::bin_by_distance(constant_offdiag(4, 0.0), distances),
                    std::invalid_argument);
    CHECK_THROWS_AS(qrec::matrix_report(constant_offdiag(4, 0.0), distances),
                    std::invalid_argument);
}

namespace {

qrec::CorrelatorSet correlators_with(double a_value, double c_value, std::uint64_t shots) {
    qrec::CorrelatorSet set;
    set.num_qubits = 2;
    set.shots = shots;
    set.epsilon = {0.0, 0.0};
    set.a = constant_offdiag(2, a_value);
    set.c = constant_offdiag(2, c_value);
    set.bounds = qrec::sampling_bounds(shots);
    return set;
}

}  // namespace

TEST_CASE("noise floor classification") {
    const auto melbourne = correlators_with(0.01, 0.01, 81920);
    const auto flags = qrec::noise_floor_classification(melbourne);
    CHECK(flags.a_at(0, 1) == 1);  // 0.01 > 2.5e-3
    CHECK(flags.c_at(0, 1) == 1);
    CHECK(flags.a_at(0, 0) == -1);

    const auto manhattan = correlators_with(5e-4, 5e-4, 819200);
    const auto quiet = qrec::noise_floor_classification(manhattan);
    CHECK(quiet.a_at(0, 1) == 0);  // 5e-4 < 7.8e-4

    // Exactly at the floor stays below: the comparison is strict.
    qrec::CorrelatorSet at_floor = correlators_with(0.0, 0.0, 10000);
    at_floor.a.set(0, 1, at_floor.bounds.eps_or_a);
    at_floor.c.set(0, 1, at_floor.bounds.c);
    const auto boundary = qrec::noise_floor_classification(at_floor);
    CHECK(boundary.a_at(0, 1) == 0);
    CHECK(boundary.c_at(0, 1) == 0);
}

TEST_CASE("floor flags are monotone in magnitude") {
    qrec::Rng rng(0xF100);
    const auto bounds = qrec::sampling_bounds(10000);
    for (int trial = 0; trial < 200; ++trial) {
        const double value = (rng.uniform() - 0.5) * 4.0 * bounds.eps_or_a;
        const double scale = 1.0 + rng.uniform();
        const auto flags =
            qrec::noise_floor_classification(correlators_with(value, value, 10000));
        const auto raised = qrec::noise_floor_classification(
            correlators_with(value * scale, value * scale, 10000));
        if (flags.a_at(0, 1) == 1) CHECK(raised.a_at(0, 1) == 1);
        if (flags.c_at(0, 1) == 1) CHECK(raised.c_at(0, 1) == 1);
    }
}

TEST_CASE("a larger multiplier can only demote flags") {
    const auto set = correlators_with(3e-3, 1e-3, 81920);
    const auto k1 = qrec::noise_floor_classification(set, 1.0);
    const auto k3 = qrec::noise_floor_classification(set, 3.0);
    CHECK(k1.a_at(0, 1) == 1);
    CHECK(k3.a_at(0, 1) == 0);
}

TEST_CASE("matrix report emits aligned grids with empty diagonals") {
    const auto distances = qrec::min_distances(qrec_tests::path_topology(3));
    SquareMatrix a = SquareMatrix::with_masked_diagonal(3);
    a.set(0, 1, 0.5);
    a.set(1, 0, -0.25);
    a.set(0, 2, 0.0);
    a.set(2, 0, 1.0);
    a.set(1, 2, 0.125);
    a.set(2, 1, -1.0);
    const auto report = qrec::matrix_report(a, distances);
    CHECK(report.a_csv == ",0.5,0\n-0.25,,0.125\n1,-1,\n");
    CHECK(report.distance_csv == "0,1,2\n1,0,1\n2,1,0\n");
}

TEST_CASE("matrix CSV round-trips through parsing") {
    qrec::Rng rng(0xC54);
    SquareMatrix m = SquareMatrix::with_masked_diagonal(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) m.set(i, j, rng.uniform() * 2.0 - 1.0);
        }
    }
    const auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                cells.push_back(line.substr(start));
                break;
            }
            cells.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        return cells;
    };
    const std::string csv = qrec::matrix_to_csv(m);
    std::istringstream lines(csv);
    std::string line;
    int i = 0;
    while (std::getline(lines, line)) {
        const auto cells = split(line);
        REQUIRE(cells.size() == 4);
        for (int j = 0; j < 4; ++j) {
            if (cells[static_cast<std::size_t>(j)].empty()) {
                CHECK(m.masked(i, j));
            } else {
                // Exact: the writer emits the shortest round-trip form.
                CHECK(std::stod(cells[static_cast<std::size_t>(j)]) == m.at(i, j));
            }
        }
        ++i;
    }
    CHECK(i == 4);
}
