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

#include "rkinterp/black_box.hpp"
#include "rkinterp/random.hpp"
#include "rkinterp/sparse_poly.hpp"

namespace rkinterp {

struct DiversifyParams {
  std::size_t nvars = 0;
  u64 max_degree = 0;
  /// Bound on the number of difference polynomials that must not vanish.
  u64 m = 0;
  double mu = 0.1;
  /// Any prime field with q >= q_min has F_q^* (n, D, m, mu)-diversifying.
  u64 q_min = 0;
};

/// m = ceil(T^2 (nu+2)^2 / 8) and q_min = ceil(n m D / mu): F_q^* is
/// (1, D, m, mu/n)-diversifying once q >= m D n / mu, which lifts to n
/// variables. Throws std::overflow_error if q_min exceeds 2^63.
DiversifyParams required_field_size(std::size_t n, u64 D, u64 T, u64 nu, double mu);

/// Nonzero scaling alpha with cached inverses.
class ScalingPoint {
 public:
  /// Throws std::invalid_argument on a zero component.
  ScalingPoint(const PrimeField& field, std::vector<Fe> alpha);

  static ScalingPoint identity(const PrimeField& field, std::size_t n);

  const std::vector<Fe>& alpha() const { return alpha_; }
  const std::vector<Fe>& alpha_inv() const { return alpha_inv_; }
  std::size_t size() const { return alpha_.size(); }

 private:
  std::vector<Fe> alpha_;
  std::vector<Fe> alpha_inv_;
};

/// Components independent and uniform over [1, q-1]. Throws FieldTooSmall
/// if q < q_min.
ScalingPoint sample_alpha(const PrimeField& field, std::size_t n, u64 q_min, Rng& rng);

/// Box for f(alpha_1 x_1, ..., alpha_n x_n): probes the wrapped box at the
/// scaled point, so every wrapper probe is also one probe of the inner box.
class ScaledBlackBox final : public BlackBox {
 public:
  ScaledBlackBox(BlackBox& inner, ScalingPoint alpha);

  const PrimeField& field() const override { return inner_.field(); }
  std::size_t nvars() const override { return inner_.nvars(); }
  bool concurrent() const override { return inner_.concurrent(); }

 protected:
  Fe evaluate(std::span<const Fe> point) override;

 private:
  BlackBox& inner_;
  ScalingPoint alpha_;
};

/// f(alpha_1 x_1, ..., alpha_n x_n), symbolically.
SparsePoly diversify(const SparsePoly& f, const ScalingPoint& alpha);

/// g(alpha_1^{-1} x_1, ..., alpha_n^{-1} x_n): inverse of diversify.
SparsePoly undiversify(const SparsePoly& g, const ScalingPoint& alpha);

}  // namespace rkinterp
