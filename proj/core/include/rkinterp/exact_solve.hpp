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
#include <optional>
#include <vector>

namespace rkinterp {

using IntRow = std::vector<std::uint64_t>;

enum class SolveStatus {
  integral,
  non_integral,
  singular,
  /// Integral, but some component does not fit in int64.
  overflow,
};

struct IntegerSolve {
  SolveStatus status = SolveStatus::singular;
  std::vector<std::int64_t> x;
};

/// Solves A x = b over the rationals for square A with Cramer's rule, every
/// determinant computed by fraction-free (Bareiss) elimination over
/// arbitrary-precision integers.
IntegerSolve solve_integer_system(const std::vector<IntRow>& a, const IntRow& b);

/// det(A) == 0 over the integers, via Bareiss.
bool is_singular(const std::vector<IntRow>& a);

/// Greedily scans `rows` in order and returns the indices of the first
/// `want` rows that are linearly independent, over F_p when modulus = p is
/// prime, or over Q when modulus = 0. nullopt if the rows have rank < want.
std::optional<std::vector<std::size_t>> independent_rows(const std::vector<IntRow>& rows,
                                                         std::size_t want,
                                                         std::uint64_t modulus);

}  // namespace rkinterp
