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

#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "qrec/random.hpp"

using qrec::CountsTable;
using qrec::Histogram;
using qrec::NoiseModel;
using qrec::Preparation;

TEST_CASE("preparation set is ground plus one excitation per qubit") {
    const auto preps = qrec::preparation_set(1);
    REQUIRE(preps.size() == 2);
    CHECK(preps[0].is_ground());
    CHECK(preps[0].label() == "ground");
    CHECK(preps[1].excited_qubit() == 0);
    CHECK(preps[1].label() == "x_0");

    CHECK(qrec::preparation_set(15).size() == 16);
    CHECK(qrec::preparation_set(65).size() == 66);
    CHECK_THROWS_AS(qrec::preparation_set(0), std::invalid_argument);
}

TEST_CASE("excited preparations have exactly one bit set") {
    for (const auto& prep : qrec::preparation_set(6)) {
        const auto state = prep.true_state(6);
        int ones = 0;
        for (auto b : state) ones += b;
        CHECK(ones == (prep.is_ground() ? 0 : 1));
        if (!prep.is_ground()) CHECK(state[static_cast<std::size_t>(prep.excited_qubit())] == 1);
    }
}

TEST_CASE("noiseless protocol concentrates every histogram") {
    const NoiseModel model(2, {0, 0}, {0, 0});
    const CountsTable counts =
        qrec::run_protocol(qrec::simulator_backend(model), 2, 10, 5);
    CHECK(counts.ground_histogram().at("00") == 10);
    CHECK(counts.excited_histogram(0).at("10") == 10);
    CHECK(counts.excited_histogram(1).at("01") == 10);
}

TEST_CASE("identical seeds give identical tables") {
    qrec::Rng rng(0x9E0);
    const NoiseModel model = qrec_tests::random_dyadic_model(3, rng);
    const auto backend = qrec::simulator_backend(model);
    const CountsTable first = qrec::run_protocol(backend, 3, 2000, 123);
    const CountsTable second = qrec::run_protocol(backend, 3, 2000, 123);
    CHECK(first == second);
    const CountsTable different = qrec::run_protocol(backend, 3, 2000, 124);
    CHECK_FALSE(first == different);
}

TEST_CASE("each preparation's histogram depends only on its own sub-seed") {
    // Equivalent to order independence: the table entry for preparation k is
    // exactly what sampling that preparation alone would produce.
    qrec::Rng rng(0x9E1);
    const NoiseModel model = qrec_tests::random_dyadic_model(3, rng);
    const CountsTable table =
        qrec::run_protocol(qrec::simulator_backend(model), 3, 500, 777);
    const auto preps = qrec::preparation_set(3);
    for (std::size_t index = 0; index < preps.size(); ++index) {
        const Histogram direct = qrec::sample_readout(
            model, preps[index].true_state(3), 500, qrec::derive_subseed(777, index));
        CHECK(table.histogram(preps[index]) == direct);
    }
}

TEST_CASE("backend failures name the preparation") {
    const qrec::Backend failing = [](const qrec::BitVec& state, std::uint64_t,
                                     std::uint64_t) -> Histogram {
        if (state.size() > 3 && state[3]) throw std::runtime_error("device offline");
        Histogram h;
        std::string bits(state.size(), '0');
        for (std::size_t i = 0; i < state.size(); ++i) bits[i] = state[i] ? '1' : '0';
        h[bits] = 10;
        return h;
    };
    CHECK_THROWS_WITH_AS(qrec::run_protocol(failing, 5, 10, 0), doctest::Contains("x_3"),
                         std::runtime_error);
}

TEST_CASE("counts tables enforce completeness and uniform totals") {
    Histogram good;
    good["00"] = 10;
    Histogram bad;
    bad["00"] = 9;

    CHECK_NOTHROW(CountsTable(2, 10, {good, good, good}));
    CHECK_THROWS_WITH_AS(CountsTable(2, 10, {good, good}), doctest::Contains("3"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(CountsTable(2, 10, {good, bad, good}),
                         doctest::Contains("count total mismatch"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(CountsTable(2, 10, {good, bad, good}), doctest::Contains("x_0"),
                         std::invalid_argument);

    Histogram wrong_width;
    wrong_width["000"] = 10;
    CHECK_THROWS_AS(CountsTable(2, 10, {good, good, wrong_width}), std::invalid_argument);
}
