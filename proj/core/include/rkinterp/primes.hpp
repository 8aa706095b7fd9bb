// Copyright 2026 The rkinterp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "rkinterp/random.hpp"

namespace rkinterp {

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t m);

/// Smallest prime p >= x. Throws std::overflow_error past 2^63.
std::uint64_t next_prime(std::uint64_t x);

/// Real-valued variant of next_prime: smallest prime p >= x. Throws std::overflow_error past 2^63.
std::uint64_t least_prime_geq(double x);

/// All primes in [ceil(lo), floor(hi)], ascending.
std::vector<std::uint64_t> primes_in(double lo, double hi);

/// Uniform draw over the primes in [ceil(lo), floor(hi)] by integer
/// rejection sampling. Throws std::invalid_argument if the range holds no
/// prime.
std::uint64_t sample_prime_in(double lo, double hi, Rng& rng);

}  // namespace rkinterp
