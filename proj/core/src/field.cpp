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

#include "rkinterp/field.hpp"

#include <cctype>

#include "rkinterp/primes.hpp"

namespace rkinterp {

PrimeField::PrimeField(u64 q) : q_(q), inv_q_(1.0L / static_cast<long double>(q)) {
  if (q > kMaxModulus) {
    throw std::invalid_argument("field modulus must be below 2^63");
  }
  if (!is_prime(q)) {
    throw std::invalid_argument("field modulus " + std::to_string(q) + " is not prime");
  }
}

Fe PrimeField::from_int(i64 x) const {
  if (x >= 0) return from_uint(static_cast<u64>(x));
  // -(x + 1) avoids overflow at INT64_MIN.
  u64 mag = static_cast<u64>(-(x + 1)) + 1;
  return neg(from_uint(mag));
}

Fe PrimeField::from_decimal(const std::string& text) const {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("empty decimal literal");
  }
  Fe acc = zero();
  const Fe ten = from_uint(10);
  for (; pos < text.size(); ++pos) {
    auto c = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(c)) {
      throw std::invalid_argument("invalid decimal literal '" + text + "'");
    }
    acc = add(mul(acc, ten), from_uint(c - '0'));
  }
  return negative ? neg(acc) : acc;
}

Fe PrimeField::pow(Fe a, u64 e) const {
  Fe result = one();
  Fe base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Fe PrimeField::inv(Fe a) const {
  if (a.v == 0) {
    throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  }
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 r0 = q_, r1 = a.v, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 quot = r0 / r1;
    __int128 tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += q_;
  return Fe{static_cast<u64>(t0)};
}

}  // namespace rkinterp
