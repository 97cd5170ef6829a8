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

#ifndef QREC_RANDOM_HPP_
#define QREC_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace qrec {

/// splitmix64 finalizer. Fully specified, so derived seeds are identical on
/// every platform.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic sub-seed for stream `index` of a run seeded with `seed`.
/// Used to give every prepared state its own random stream, so the order in
/// which preparations execute cannot change any histogram.
inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ULL * index);
}

/// mt19937_64 wrapper producing uniform doubles in [0, 1).
///
/// The engine and the 53-bit conversion are both fully specified by the
/// standard, so identical seeds give bit-identical streams everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Bernoulli draw; p <= 0 never fires, p >= 1 always fires.
    bool bernoulli(double p) { return uniform() < p; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qrec

#endif  // QREC_RANDOM_HPP_
