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

#include <cstddef>
#include <span>
#include <vector>

#include "rkinterp/field.hpp"
#include "rkinterp/random.hpp"

namespace rkinterp {

/// Exponent of one term, one entry per variable.
using ExponentVec = std::vector<u64>;

/// Per-variable partial-degree bounds: every exponent in variable j is < bounds[j].
using DegreeBounds = std::vector<u64>;

struct Term {
  Fe coeff;
  ExponentVec exps;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over a prime field in canonical form:
/// nonzero coefficients, pairwise distinct exponents, terms sorted in
/// descending lexicographic exponent order. Immutable once built.
class SparsePoly {
 public:
  /// The zero polynomial in `nvars` variables.
  SparsePoly(PrimeField field, std::size_t nvars);

  /// Canonicalizes `terms`: zero coefficients are dropped and the rest sorted.
  /// Throws std::invalid_argument on a wrong-length exponent or a repeated
  /// exponent vector.
  static SparsePoly from_terms(PrimeField field, std::size_t nvars, std::vector<Term> terms);

  /// Like from_terms but sums repeated exponents instead of rejecting them.
  static SparsePoly from_terms_combining(PrimeField field, std::size_t nvars,
                                         std::vector<Term> terms);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Throws std::invalid_argument if point.size() != nvars().
  Fe evaluate(std::span<const Fe> point) const;

  /// Throws std::invalid_argument unless all exponents respect `bounds`.
  void check_bounds(const DegreeBounds& bounds) const;

  friend SparsePoly operator+(const SparsePoly& f, const SparsePoly& g);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  SparsePoly(PrimeField field, std::size_t nvars, std::vector<Term> canonical)
      : field_(field), nvars_(nvars), terms_(std::move(canonical)) {}

  PrimeField field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Exactly `T` terms with distinct exponents drawn uniformly from
/// [0, bounds[0]) x ... x [0, bounds[n-1]) and uniform nonzero coefficients.
/// Throws std::invalid_argument if T exceeds the number of exponent vectors.
SparsePoly random_sparse(PrimeField field, const DegreeBounds& bounds, std::size_t T, Rng& rng);

/// Same with a common bound D for all n variables.
SparsePoly random_sparse(PrimeField field, std::size_t n, std::size_t T, u64 D, Rng& rng);

}  // namespace rkinterp
