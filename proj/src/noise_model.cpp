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

#include "qrec/noise_model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "qrec/random.hpp"

namespace qrec {

namespace {

void check_probability(double p, const std::string& what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(what + " must lie in [0, 1], got " + std::to_string(p));
    }
}

void check_qubit(int q, int n, const std::string& what) {
    if (q < 0 || q >= n) {
        throw std::invalid_argument(what + " index " + std::to_string(q) +
                                    " out of range [0, " + std::to_string(n) + ")");
    }
}

}  // namespace

NoiseModel::NoiseModel(int num_qubits, std::vector<double> p01, std::vector<double> p10,
                       std::vector<SpectatorTerm> spectator01,
                       std::vector<SpectatorTerm> spectator10, std::vector<PairFlipTerm> pairflip)
    : num_qubits_(num_qubits),
      p01_(std::move(p01)),
      p10_(std::move(p10)),
      spectator01_(std::move(spectator01)),
      spectator10_(std::move(spectator10)),
      pairflip_(std::move(pairflip)) {
    if (num_qubits_ < 1) {
        throw std::invalid_argument("num_qubits must be at least 1, got " +
                                    std::to_string(num_qubits_));
    }
    const auto n = static_cast<std::size_t>(num_qubits_);
    if (p01_.size() != n || p10_.size() != n) {
        throw std::invalid_argument("p01 and p10 must each have one entry per qubit");
    }
    for (std::size_t i = 0; i < n; ++i) {
        check_probability(p01_[i], "p01[" + std::to_string(i) + "]");
        check_probability(p10_[i], "p10[" + std::to_string(i) + "]");
    }

    shifts01_.assign(n, {});
    shifts10_.assign(n, {});
    std::set<std::pair<int, int>> seen01;
    std::set<std::pair<int, int>> seen10;
    auto add_terms = [&](const std::vector<SpectatorTerm>& terms,
                         std::set<std::pair<int, int>>& seen,
                         std::vector<std::vector<std::pair<int, double>>>& shifts,
                         const std::string& what) {
        for (const SpectatorTerm& t : terms) {
            check_qubit(t.target, num_qubits_, what + " target");
            check_qubit(t.spectator, num_qubits_, what + " spectator");
            if (t.target == t.spectator) {
                throw std::invalid_argument(what + " term (" + std::to_string(t.target) + ", " +
                                            std::to_string(t.spectator) +
                                            ") may not couple a qubit to itself");
            }
            if (!seen.insert({t.target, t.spectator}).second) {
                throw std::invalid_argument("duplicate " + what + " term (" +
                                            std::to_string(t.target) + ", " +
                                            std::to_string(t.spectator) + ")");
            }
            shifts[static_cast<std::size_t>(t.target)].emplace_back(t.spectator, t.delta);
        }
    };
    add_terms(spectator01_, seen01, shifts01_, "spectator01");
    add_terms(spectator10_, seen10, shifts10_, "spectator10");

    std::set<std::pair<int, int>> seen_pairs;
    for (PairFlipTerm& t : pairflip_) {
        check_qubit(t.low, num_qubits_, "pairflip");
        check_qubit(t.high, num_qubits_, "pairflip");
        if (t.low == t.high) {
            throw std::invalid_argument("pairflip pair may not repeat a qubit: (" +
                                        std::to_string(t.low) + ", " + std::to_string(t.high) +
                                        ")");
        }
        if (t.low > t.high) std::swap(t.low, t.high);
        check_probability(t.prob, "pairflip probability for (" + std::to_string(t.low) + ", " +
                                      std::to_string(t.high) + ")");
        if (!seen_pairs.insert({t.low, t.high}).second) {
            throw std::invalid_argument("duplicate pairflip pair (" + std::to_string(t.low) +
                                        ", " + std::to_string(t.high) + ")");
        }
    }
    std::sort(pairflip_.begin(), pairflip_.end(), [](const PairFlipTerm& a, const PairFlipTerm& b) {
        return std::make_pair(a.low, a.high) < std::make_pair(b.low, b.high);
    });
}

FlipProbs effective_flip_probs(const NoiseModel& model, const BitVec& true_state) {
    validate_state(true_state, model.num_qubits());
    FlipProbs result;
    result.probs.resize(true_state.size());
    for (int i = 0; i < model.num_qubits(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const bool excited = true_state[idx] != 0;
        double p = excited ? model.p10()[idx] : model.p01()[idx];
        const auto& shifts = excited ? model.shifts10_for(i) : model.shifts01_for(i);
        for (const auto& [spectator, delta] : shifts) {
            if (true_state[static_cast<std::size_t>(spectator)]) p += delta;
        }
        if (p < 0.0) {
            p = 0.0;
            ++result.clamped;
        } else if (p > 1.0) {
            p = 1.0;
            ++result.clamped;
        }
        result.probs[idx] = p;
    }
    return result;
}

Histogram sample_readout(const NoiseModel& model, const BitVec& true_state, std::uint64_t shots,
                         std::uint64_t seed) {
    validate_state(true_state, model.num_qubits());
    if (shots == 0) throw std::invalid_argument("shots must be at least 1");

    const int n = model.num_qubits();
    const FlipProbs flip = effective_flip_probs(model, true_state);
    const auto& pairs = model.pairflip();

    std::string base(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (true_state[static_cast<std::size_t>(i)]) base[static_cast<std::size_t>(i)] = '1';
    }

    // Fixed draw order (qubits 0..n-1, then pair terms in normalized order)
    // pins the random stream for a given model.
    Rng rng(seed);
    Histogram hist;
    std::string read;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        read = base;
        for (int i = 0; i < n; ++i) {
            if (rng.bernoulli(flip.probs[static_cast<std::size_t>(i)])) {
                read[static_cast<std::size_t>(i)] ^= 1;  // '0' <-> '1'
            }
        }
        for (const PairFlipTerm& t : pairs) {
            if (rng.bernoulli(t.prob)) {
                read[static_cast<std::size_t>(t.low)] ^= 1;
                read[static_cast<std::size_t>(t.high)] ^= 1;
            }
        }
        ++hist[read];
    }
    return hist;
}

namespace {

void check_enumeration_guard(int num_qubits, std::size_t num_pairs, std::uint64_t limit) {
    const auto bits = static_cast<unsigned>(num_qubits) + static_cast<unsigned>(num_pairs);
    if (bits >= 63 || (1ULL << bits) > limit) {
        const std::string size_text =
            bits >= 63 ? ("2^" + std::to_string(bits)) : std::to_string(1ULL << bits);
        throw std::invalid_argument(
            "oracle too large: 2^" + std::to_string(num_qubits) + " outcomes x 2^" +
            std::to_string(num_pairs) + " pair-flip combinations = " + size_text +
            " exceeds the enumeration limit " + std::to_string(limit));
    }
}

}  // namespace

ExactDistribution exact_distribution(const NoiseModel& model, const BitVec& true_state,
                                     std::uint64_t max_enumeration) {
    validate_state(true_state, model.num_qubits());
    const int n = model.num_qubits();
    const auto& pairs = model.pairflip();
    check_enumeration_guard(n, pairs.size(), max_enumeration);

    const FlipProbs flip = effective_flip_probs(model, true_state);

    // Product distribution over independent per-qubit flip patterns.
    const std::uint64_t outcomes = 1ULL << n;
    std::vector<double> flip_dist(outcomes, 0.0);
    flip_dist[0] = 1.0;
    std::uint64_t filled = 1;
    for (int i = 0; i < n; ++i) {
        const double f = flip.probs[static_cast<std::size_t>(i)];
        for (std::uint64_t y = 0; y < filled; ++y) {
            const double p = flip_dist[y];
            flip_dist[y] = p * (1.0 - f);
            flip_dist[y | filled] = p * f;
        }
        filled <<= 1;
    }

    std::vector<std::uint64_t> pair_masks(pairs.size());
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        pair_masks[t] = (1ULL << pairs[t].low) | (1ULL << pairs[t].high);
    }

    const std::uint64_t base = state_to_index(true_state);
    ExactDistribution result;
    result.num_qubits = n;
    result.probs.assign(outcomes, 0.0);
    const std::uint64_t subsets = 1ULL << pairs.size();
    for (std::uint64_t subset = 0; subset < subsets; ++subset) {
        double weight = 1.0;
        std::uint64_t mask = 0;
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            if ((subset >> t) & 1ULL) {
                weight *= pairs[t].prob;
                mask ^= pair_masks[t];
            } else {
                weight *= 1.0 - pairs[t].prob;
            }
        }
        if (weight == 0.0) continue;
        const std::uint64_t offset = base ^ mask;
        for (std::uint64_t y = 0; y < outcomes; ++y) {
            result.probs[offset ^ y] += weight * flip_dist[y];
        }
    }
    return result;
}

namespace {

std::vector<double> one_marginals(const ExactDistribution& dist) {
    const int n = dist.num_qubits;
    std::vector<double> marg(static_cast<std::size_t>(n), 0.0);
    for (std::uint64_t x = 0; x < dist.probs.size(); ++x) {
        const double p = dist.probs[x];
        if (p == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            if ((x >> i) & 1ULL) marg[static_cast<std::size_t>(i)] += p;
        }
    }
    return marg;
}

}  // namespace

CorrelatorMatrices exact_correlators(const NoiseModel& model, std::uint64_t max_enumeration) {
    const int n = model.num_qubits();

    const BitVec ground(static_cast<std::size_t>(n), 0);
    const ExactDistribution ground_dist = exact_distribution(model, ground, max_enumeration);
    const std::vector<double> ground_one = one_marginals(ground_dist);

    // P(read 0 on i and read 0 on j) in the ground preparation.
    SquareMatrix joint_zero(n, 0.0);
    std::vector<int> zero_bits;
    zero_bits.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t x = 0; x < ground_dist.probs.size(); ++x) {
        const double p = ground_dist.probs[x];
        if (p == 0.0) continue;
        zero_bits.clear();
        for (int i = 0; i < n; ++i) {
            if (((x >> i) & 1ULL) == 0) zero_bits.push_back(i);
        }
        for (std::size_t a = 0; a < zero_bits.size(); ++a) {
            for (std::size_t b = a + 1; b < zero_bits.size(); ++b) {
                joint_zero.set(zero_bits[a], zero_bits[b],
                               joint_zero.at(zero_bits[a], zero_bits[b]) + p);
            }
        }
    }

    CorrelatorMatrices result;
    result.num_qubits = n;
    result.epsilon.resize(static_cast<std::size_t>(n));
    result.a = SquareMatrix::with_masked_diagonal(n);
    result.c = SquareMatrix::with_masked_diagonal(n);

    for (int j = 0; j < n; ++j) {
        BitVec excited(static_cast<std::size_t>(n), 0);
        excited[static_cast<std::size_t>(j)] = 1;
        const std::vector<double> excited_one =
            one_marginals(exact_distribution(model, excited, max_enumeration));
        result.epsilon[static_cast<std::size_t>(j)] =
            0.5 * (ground_one[static_cast<std::size_t>(j)] +
                   (1.0 - excited_one[static_cast<std::size_t>(j)]));
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            result.a.set(i, j, ground_one[static_cast<std::size_t>(i)] -
                                   excited_one[static_cast<std::size_t>(i)]);
        }
    }

    for (int i = 0; i < n; ++i) {
        const double zero_i = 1.0 - ground_one[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const double zero_j = 1.0 - ground_one[static_cast<std::size_t>(j)];
            const double cov = joint_zero.at(i, j) - zero_i * zero_j;
            result.c.set(i, j, cov);
            result.c.set(j, i, cov);
        }
    }
    return result;
}

}  // namespace qrec
