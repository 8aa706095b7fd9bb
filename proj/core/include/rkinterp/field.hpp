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

#include <cfloat>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rkinterp {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// An element of a prime field, stored reduced in [0, q). The modulus lives
/// in the owning PrimeField; elements from different fields must not mix.
struct Fe {
  u64 v = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

/// Raised when a field is too small for the requested computation.
class FieldTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic modulo a word-sized prime q < 2^63.
class PrimeField {
 public:
  static constexpr u64 kMaxModulus = (u64{1} << 63) - 1;

  /// Throws std::invalid_argument if q is not a prime below 2^63.
  explicit PrimeField(u64 q);

  u64 modulus() const { return q_; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1 % q_}; }
  Fe from_uint(u64 x) const { return Fe{x % q_}; }
  Fe from_int(i64 x) const;
  /// Reduces an arbitrary-length decimal string (optional leading '-').
  Fe from_decimal(const std::string& text) const;

  Fe add(Fe a, Fe b) const {
    u64 s = a.v + b.v;
    return Fe{s >= q_ ? s - q_ : s};
  }
  Fe sub(Fe a, Fe b) const { return Fe{a.v >= b.v ? a.v - b.v : a.v + q_ - b.v}; }
  Fe neg(Fe a) const { return Fe{a.v == 0 ? 0 : q_ - a.v}; }
  Fe mul(Fe a, Fe b) const {
#if LDBL_MANT_DIG >= 64
    if (q_ < kFastModulus) {
      // The long double quotient estimate is off by at most one.
      const u64 c = static_cast<u64>(inv_q_ * a.v * b.v);
      const i64 r = static_cast<i64>(a.v * b.v - c * q_);
      return Fe{static_cast<u64>(r < 0 ? r + static_cast<i64>(q_)
                                       : (r >= static_cast<i64>(q_) ? r - static_cast<i64>(q_) : r))};
    }
#endif
    return Fe{static_cast<u64>(static_cast<unsigned __int128>(a.v) * b.v % q_)};
  }
  Fe pow(Fe a, u64 e) const;
  /// Throws std::domain_error on zero.
  Fe inv(Fe a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  static constexpr u64 kFastModulus = u64{1} << 62;

  u64 q_;
  long double inv_q_;
};

}  // namespace rkinterp
