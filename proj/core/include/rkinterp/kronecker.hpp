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

#include <vector>

#include "rkinterp/sparse_poly.hpp"
#include "rkinterp/uni_poly.hpp"

namespace rkinterp {

/// Exponents s_1..s_n of the monomial substitution x_j -> z^{s_j}.
using SubstitutionVector = std::vector<u64>;

/// Mixed-radix Kronecker map x_j -> z^{D_1 ... D_{j-1}}. Injective on
/// polynomials that respect `bounds`, so the term count is preserved.
/// Throws std::invalid_argument on a bound violation and
/// std::overflow_error if prod(bounds) does not fit in 64 bits.
UniPoly classical_kronecker(const SparsePoly& f, const DegreeBounds& bounds);

/// Inverse of classical_kronecker via mixed-radix digit expansion.
/// Throws std::invalid_argument if a degree is >= prod(bounds).
SparsePoly inverse_kronecker(const UniPoly& g, const DegreeBounds& bounds, std::size_t nvars);

/// Which terms of f merged with another term under a substitution.
struct CollisionReport {
  /// Indexed like f.terms().
  std::vector<bool> collided;
  /// Number of image degrees hit by two or more terms.
  std::size_t sums = 0;

  std::size_t collided_terms() const;
};

struct Substitution {
  UniPoly image;
  CollisionReport collisions;
};

/// g(z) = f(z^{s_1}, ..., z^{s_n}) computed symbolically. Collisions are
/// decided on integer exponents, so sums that cancel to zero still count.
Substitution substitute(const SparsePoly& f, const SubstitutionVector& s);

/// sum_j s_j (D_j - 1), the largest degree any f within `bounds` can reach.
u64 max_image_degree(const DegreeBounds& bounds, const SubstitutionVector& s);

/// prod_j D_j; the classical image has degree below this.
u64 classical_degree(const DegreeBounds& bounds);

}  // namespace rkinterp
