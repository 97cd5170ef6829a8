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

#include "qrec/estimators.hpp"

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qrec/random.hpp"

using qrec::CountsTable;
using qrec::Histogram;
using qrec::NoiseModel;

namespace {

Histogram flipped(const Histogram& hist) {
    Histogram out;
    for (const auto& [bits, count] : hist) {
        std::string inverted = bits;
        for (char& c : inverted) c ^= 1;
        out[inverted] += count;
    }
    return out;
}

}  // namespace

TEST_CASE("marginal one-probability") {
    Histogram hist;
    hist["00"] = 90;
    hist["01"] = 10;
    CHECK(qrec::marginal_one_prob(hist, 1) == doctest::Approx(0.10).epsilon(1e-15));
    CHECK(qrec::marginal_one_prob(hist, 0) == 0.0);

    Histogram degenerate;
    degenerate["11"] = 5;
    CHECK(qrec::marginal_one_prob(degenerate, 0) == 1.0);

    CHECK_THROWS_AS(qrec::marginal_one_prob(hist, 2), std::out_of_range);
    CHECK_THROWS_AS(qrec::marginal_one_prob(Histogram{}, 0), std::invalid_argument);
}

TEST_CASE("marginals of a histogram and its bit-flipped image sum to one") {
    qrec::Rng rng(0xE57);
    const NoiseModel model = qrec_tests::random_dyadic_model(3, rng);
    const Histogram hist = qrec::sample_readout(model, {0, 1, 0}, 5000, 11);
    const Histogram inverted = flipped(hist);
    for (int q = 0; q < 3; ++q) {
        const double sum = qrec::marginal_one_prob(hist, q) + qrec::marginal_one_prob(inverted, q);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("epsilon averages the ground and excited misread frequencies") {
    // Qubit 0: reads 1 in 10% of ground shots, reads 0 in 5% of its excited
    // shots -> epsilon 0.075.
    Histogram ground;
    ground["00"] = 90;
    ground["10"] = 10;
    Histogram x0;
    x0["10"] = 95;
    x0["00"] = 5;
    Histogram x1;
    x1["01"] = 100;
    const CountsTable counts(2, 100, {ground, x0, x1});
    const auto epsilon = qrec::estimate_epsilon(counts);
    CHECK(epsilon[0] == doctest::Approx(0.075).epsilon(1e-15));
    CHECK(epsilon[1] == 0.0);
}

TEST_CASE("noiseless counts give zero epsilon and zero correlators") {
    const NoiseModel model(3, {0, 0, 0}, {0, 0, 0});
    const CountsTable counts = qrec::run_protocol(qrec::simulator_backend(model), 3, 64, 1);
    const qrec::CorrelatorSet set = qrec::characterize(counts);
    for (double e : set.epsilon) CHECK(e == 0.0);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            CHECK(set.a.at(i, j) == 0.0);
            CHECK(set.c.at(i, j) == 0.0);
        }
    }
    CHECK(set.shots == 64);
}

TEST_CASE("A entries subtract the excited-spectator frequency from the ground one") {
    Histogram ground;
    ground["00"] = 98;
    ground["01"] = 2;  // qubit 1 reads 1 in 2% of ground shots
    Histogram x0;
    x0["10"] = 95;
    x0["11"] = 5;  // with qubit 0 excited, qubit 1 reads 1 in 5%
    Histogram x1;
    x1["01"] = 100;
    const CountsTable counts(2, 100, {ground, x0, x1});
    const qrec::SquareMatrix a = qrec::estimate_a(counts);
    CHECK(a.at(1, 0) == doctest::Approx(-0.03).epsilon(1e-15));
    CHECK(a.at(0, 1) == 0.0);
    CHECK(a.masked(0, 0));
    CHECK(a.masked(1, 1));
}

TEST_CASE("A is not forced symmetric") {
    Histogram ground;
    ground["00"] = 100;
    Histogram x0;
    x0["11"] = 10;  // exciting qubit 0 drags qubit 1 up
    x0["10"] = 90;
    Histogram x1;
    x1["01"] = 100;  // exciting qubit 1 leaves qubit 0 alone
    const CountsTable counts(2, 100, {ground, x0, x1});
    const qrec::SquareMatrix a = qrec::estimate_a(counts);
    CHECK(a.at(1, 0) == doctest::Approx(-0.10).epsilon(1e-15));
    CHECK(a.at(0, 1) == 0.0);
    CHECK(a.at(1, 0) != a.at(0, 1));
}

TEST_CASE("C of a factorized ground histogram is zero") {
    Histogram ground;
    ground["00"] = 810;
    ground["01"] = 90;
    ground["10"] = 90;
    ground["11"] = 10;
    Histogram x0;
    x0["10"] = 1000;
    Histogram x1;
    x1["01"] = 1000;
    const CountsTable counts(2, 1000, {ground, x0, x1});
    const qrec::SquareMatrix c = qrec::estimate_c(counts);
    CHECK(c.at(0, 1) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("perfectly correlated indicators reach the covariance ceiling") {
    Histogram ground;
    ground["00"] = 500;
    ground["11"] = 500;
    Histogram x0;
    x0["10"] = 1000;
    Histogram x1;
    x1["01"] = 1000;
    const CountsTable counts(2, 1000, {ground, x0, x1});
    const qrec::SquareMatrix c = qrec::estimate_c(counts);
    CHECK(c.at(0, 1) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(c.at(1, 0) == c.at(0, 1));
}

TEST_CASE("sampling bounds match the worst-case formulas") {
    const auto melbourne = qrec::sampling_bounds(81920);
    CHECK(melbourne.global == doctest::Approx(2.5e-3).epsilon(0.02));
    CHECK(melbourne.eps_or_a == melbourne.global);
    const auto manhattan = qrec::sampling_bounds(819200);
    CHECK(manhattan.global == doctest::Approx(7.8e-4).epsilon(0.02));
    const auto tiny = qrec::sampling_bounds(100);
    CHECK(tiny.single_prob == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(tiny.c == tiny.single_prob);
    CHECK_THROWS_AS(qrec::sampling_bounds(0), std::invalid_argument);
}

TEST_CASE("single-qubit estimates track the oracle at a million shots") {
    const NoiseModel model(1, {0.03}, {0.05});
    const std::uint64_t shots = 1000000;
    const CountsTable counts = qrec::run_protocol(qrec::simulator_backend(model), 1, shots, 17);
    const auto epsilon = qrec::estimate_epsilon(counts);
    const double tolerance = 3.0 / std::sqrt(2.0 * static_cast<double>(shots));
    CHECK(std::abs(epsilon[0] - 0.04) <= tolerance);
}

TEST_CASE("spectator estimate tracks the exact A entry") {
    const NoiseModel model(2, {0.05, 0.02}, {0.04, 0.03}, {{1, 0, 0.02}});
    const std::uint64_t shots = 1000000;
    const CountsTable counts = qrec::run_protocol(qrec::simulator_backend(model), 2, shots, 23);
    const qrec::SquareMatrix a = qrec::estimate_a(counts);
    const double tolerance = 3.0 / std::sqrt(2.0 * static_cast<double>(shots));
    CHECK(std::abs(a.at(1, 0) - (-0.02)) <= tolerance);
}

TEST_CASE("covariance estimate tracks the closed-form oracle") {
    const NoiseModel model(2, {0.1, 0.2}, {0.3, 0.4}, {}, {}, {{0, 1, 0.3}});
    const std::uint64_t shots = 1000000;
    const CountsTable counts = qrec::run_protocol(qrec::simulator_backend(model), 2, shots, 31);
    const qrec::SquareMatrix c = qrec::estimate_c(counts);
    const double oracle = qrec::exact_correlators(model).c.at(0, 1);
    const double tolerance = 3.0 / (2.0 * std::sqrt(static_cast<double>(shots)));
    CHECK(oracle == doctest::Approx(0.1008).epsilon(1e-12));
    CHECK(std::abs(c.at(0, 1) - oracle) <= tolerance);
}

TEST_CASE("plug-in estimates on expected counts reproduce the oracle") {
    qrec::Rng rng(0xFACADE);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform() * 3);
        const NoiseModel model = qrec_tests::random_dyadic_model(n, rng);
        const CountsTable counts = qrec_tests::expected_counts_table(model);
        const qrec::CorrelatorSet estimated = qrec::characterize(counts);
        const qrec::CorrelatorMatrices exact = qrec::exact_correlators(model);
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(estimated.epsilon[static_cast<std::size_t>(i)] -
                           exact.epsilon[static_cast<std::size_t>(i)]) <= 1e-12);
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                CHECK(std::abs(estimated.a.at(i, j) - exact.a.at(i, j)) <= 1e-12);
                CHECK(std::abs(estimated.c.at(i, j) - exact.c.at(i, j)) <= 1e-12);
            }
        }
    }
}
