// Copyright 2026 The hopfcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef HOPFCONE_CHECK_HPP
#define HOPFCONE_CHECK_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hopfcone/rational.hpp"

namespace hopfcone {

/// Outcome of an exhaustive or randomized identity check.
struct CheckReport {
    bool pass = true;
    long checked = 0;
    /// Empty on success.
    std::string counterexample;

    void fail(std::string what) {
        if (pass) counterexample = std::move(what);
        pass = false;
    }
    void merge(const CheckReport& o) {
        checked += o.checked;
        if (!o.pass) fail(o.counterexample);
    }
};

/// splitmix64 finalizer, used to derive per-shard and per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

inline long uniform_long(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Integers in [lo, hi] as rationals.
inline std::vector<Rational> random_integer_point(Rng& rng, int n, long lo, long hi) {
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.emplace_back(uniform_long(rng, lo, hi));
    return p;
}

/// Numerators in [-bound, bound], denominators in [1, den].
inline std::vector<Rational> random_rational_point(Rng& rng, int n, long bound, long den) {
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.emplace_back(uniform_long(rng, -bound, bound), uniform_long(rng, 1, den));
    return p;
}

inline constexpr long kSampleBound = 10000;
inline constexpr int kPoleRetries = 100;

}  // namespace hopfcone

#endif  // HOPFCONE_CHECK_HPP
