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

#include "rkinterp/primes.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rkinterp {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// ceil/floor that tolerate values computed as 16.000000000000004 and the like.
u64 ceil_to_u64(double x) {
  if (x <= 0) return 0;
  double c = std::ceil(x);
  if (c - x > 1.0 - 1e-9) c -= 1.0;
  if (c >= 9.2e18) throw std::overflow_error("prime bound out of range");
  return static_cast<u64>(c);
}

u64 floor_to_u64(double x) {
  if (x < 0) return 0;
  double f = std::floor(x);
  if (x - f > 1.0 - 1e-9) f += 1.0;
  if (f >= 9.2e18) throw std::overflow_error("prime bound out of range");
  return static_cast<u64>(f);
}

}  // namespace

bool is_prime(u64 m) {
  if (m < 2) return false;
  static constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kWitnesses) {
    if (m % p == 0) return m == p;
  }
  u64 d = m - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime(u64 x) {
  u64 p = std::max<u64>(2, x);
  while (!is_prime(p)) {
    if (p >= (u64{1} << 63)) {
      throw std::overflow_error("no prime below 2^63 at or above bound");
    }
    ++p;
  }
  return p;
}

u64 least_prime_geq(double x) { return next_prime(ceil_to_u64(x)); }

std::vector<u64> primes_in(double lo, double hi) {
  std::vector<u64> out;
  const u64 a = ceil_to_u64(lo);
  const u64 b = floor_to_u64(hi);
  for (u64 m = a; m <= b && m >= a; ++m) {
    if (is_prime(m)) out.push_back(m);
  }
  return out;
}

u64 sample_prime_in(double lo, double hi, Rng& rng) {
  const u64 a = ceil_to_u64(lo);
  const u64 b = floor_to_u64(hi);
  if (a > b || next_prime(a) > b) {
    throw std::invalid_argument("no prime in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  std::uniform_int_distribution<u64> dist(a, b);
  for (;;) {
    u64 m = dist(rng);
    if (is_prime(m)) return m;
  }
}

}  // namespace rkinterp
