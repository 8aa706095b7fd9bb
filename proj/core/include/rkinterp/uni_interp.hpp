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

#include <string_view>

#include "rkinterp/black_box.hpp"
#include "rkinterp/diversify.hpp"
#include "rkinterp/kronecker.hpp"
#include "rkinterp/uni_poly.hpp"

namespace rkinterp {

/// Univariate view of a black box: probe(beta) returns the box at
/// (alpha_1 beta^{s_1}, ..., alpha_n beta^{s_n}), i.e. the image
/// g(z) = f(alpha_1 z^{s_1}, ..., alpha_n z^{s_n}) at z = beta.
class UniBox {
 public:
  UniBox(BlackBox& box, SubstitutionVector s, ScalingPoint alpha);

  Fe probe(Fe beta);

  const PrimeField& field() const { return box_.field(); }
  const SubstitutionVector& substitution() const { return s_; }
  const ScalingPoint& scaling() const { return alpha_; }

 private:
  BlackBox& box_;
  SubstitutionVector s_;
  ScalingPoint alpha_;
  std::vector<Fe> point_;
};

/// Any algorithm that recovers a univariate image of degree <= deg_bound
/// with at most `sparsity` terms from a UniBox.
class UnivariateBackend {
 public:
  virtual ~UnivariateBackend() = default;
  virtual UniPoly interpolate(UniBox& box, u64 deg_bound, u64 sparsity) const = 0;
  virtual std::string_view name() const = 0;
};

/// Newton interpolation on the nodes 0, 1, ..., N: exactly N + 1 probes.
/// Throws FieldTooSmall if q <= N.
UniPoly dense_interpolate(UniBox& box, u64 deg_bound);

class DenseBackend final : public UnivariateBackend {
 public:
  UniPoly interpolate(UniBox& box, u64 deg_bound, u64 sparsity) const override;
  std::string_view name() const override { return "dense"; }
};

/// Computes each image symbolically from a known polynomial without probing.
/// For harnesses that already know f; validates everything downstream of
/// univariate interpolation.
class OracleBackend final : public UnivariateBackend {
 public:
  explicit OracleBackend(SparsePoly known) : known_(std::move(known)) {}
  UniPoly interpolate(UniBox& box, u64 deg_bound, u64 sparsity) const override;
  std::string_view name() const override { return "oracle"; }

 private:
  SparsePoly known_;
};

/// Compares `g` against the box at `points` random nonzero arguments.
/// Issues exactly `points` probes.
bool spot_check(UniBox& box, const UniPoly& g, Rng& rng, int points = 3);

}  // namespace rkinterp
