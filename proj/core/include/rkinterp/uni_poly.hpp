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

#include <optional>
#include <vector>

#include "rkinterp/field.hpp"

namespace rkinterp {

struct UniTerm {
  Fe coeff;
  u64 degree;

  friend bool operator==(const UniTerm&, const UniTerm&) = default;
};

/// Sparse univariate polynomial: nonzero coefficients, strictly increasing
/// degrees, every degree <= deg_bound().
class UniPoly {
 public:
  explicit UniPoly(PrimeField field) : field_(field) {}

  /// Sums repeated degrees and drops zeros. deg_bound defaults to the
  /// actual degree. Throws std::invalid_argument if a degree exceeds it.
  static UniPoly from_terms(PrimeField field, std::vector<UniTerm> terms,
                            std::optional<u64> deg_bound = std::nullopt);

  /// Dense coefficients c[0] + c[1] z + ...; deg_bound = c.size() - 1.
  static UniPoly from_dense(PrimeField field, const std::vector<Fe>& coeffs);

  const PrimeField& field() const { return field_; }
  const std::vector<UniTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<u64> degree() const;
  u64 deg_bound() const { return deg_bound_; }

  Fe evaluate(Fe z) const;

  /// Equality ignores deg_bound.
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  PrimeField field_;
  std::vector<UniTerm> terms_;
  u64 deg_bound_ = 0;
};

}  // namespace rkinterp
