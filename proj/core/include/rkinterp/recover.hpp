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
#include <span>
#include <vector>

#include "rkinterp/kronecker.hpp"
#include "rkinterp/selection.hpp"
#include "rkinterp/sparse_poly.hpp"
#include "rkinterp/uni_poly.hpp"

namespace rkinterp {

/// One univariate image g_i together with the substitution that produced it.
struct Image {
  SubstitutionVector s;
  UniPoly g;
};

struct BucketEntry {
  std::size_t image;  // index into the image list
  u64 degree;

  friend bool operator==(const BucketEntry&, const BucketEntry&) = default;
};

/// All image terms sharing one coefficient value, presumed to be the images
/// of a single term of the diversified polynomial. Entries are in image order.
struct RecoveryBucket {
  Fe coeff;
  std::vector<BucketEntry> entries;
  /// The coefficient occurred twice inside one image.
  bool ambiguous = false;

  /// Number of distinct images holding the coefficient.
  std::size_t support() const;
};

/// Groups the nonzero terms of all images by coefficient value. Buckets whose
/// support is below images.size() / 2 are dropped. Result is sorted by
/// coefficient.
std::vector<RecoveryBucket> bucket_by_coefficient(std::span<const Image> images);

/// Picks n of the first min(2n, |S|) vectors of S that are linearly
/// independent: modulo lambda in multivariate mode, over the integers in
/// bivariate mode. Returns indices into S, or nullopt when rank-deficient.
std::optional<std::vector<std::size_t>> select_independent(
    std::span<const SubstitutionVector> S, SubstitutionMode mode, u64 lambda, std::size_t n);

enum class Rejection {
  none,
  non_integral,
  out_of_range,
  inconsistent,
  rank_deficient,
};

const char* to_string(Rejection r);

struct ExponentSolution {
  std::optional<ExponentVec> e;
  Rejection reason = Rejection::none;

  bool accepted() const { return e.has_value(); }
};

/// Solves R e = d exactly. Accepts e only if it is integral, 0 <= e_j < bounds[j],
/// and s . e = d for every (s, d) in `all_entries`, not just the rows of R.
ExponentSolution solve_exponents(std::span<const SubstitutionVector> rows,
                                 std::span<const u64> degrees, const DegreeBounds& bounds,
                                 std::span<const std::pair<SubstitutionVector, u64>> all_entries);

struct RecoveredTerm {
  Fe coeff;
  ExponentVec e;
};

/// Sums the accepted terms into a polynomial. nullopt if two terms share an
/// exponent vector, which marks the run as failed.
std::optional<SparsePoly> assemble(std::span<const RecoveredTerm> accepted,
                                   const PrimeField& field, std::size_t nvars);

}  // namespace rkinterp
