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

#include "rkinterp/kronecker.hpp"
#include "rkinterp/random.hpp"

namespace rkinterp {

enum class SubstitutionMode {
  /// n = 2: s = (p, q) with p, q prime.
  bivariate,
  /// n != 2: entries uniform in [0, lambda - 1], lambda prime.
  multivariate,
};

struct BivariateThresholds {
  double bound_b = 0;
  double lambda_p = 0;
  double lambda_q = 0;
};

/// B = 25 (T-1) ln Dx ln Dy / (9 mu), lambda_p = max(20.5, sqrt(B Dy / Dx)),
/// lambda_q = max(20.5, sqrt(B Dx / Dy)). Primes drawn from [lambda_p, 2 lambda_p]
/// x [lambda_q, 2 lambda_q] make a fixed term collide with probability < mu.
/// Throws std::invalid_argument if Dx < 2, Dy < 2, T < 1 or mu outside (0, 1).
BivariateThresholds bivariate_thresholds(u64 T, u64 Dx, u64 Dy, double mu);

/// Least prime lambda >= T / mu; s uniform in [0, lambda-1]^n collides a
/// fixed term with probability < mu.
u64 multivariate_lambda(u64 T, double mu);

/// ceil(max(4n, 8 ln(10 T))): enough substitutions that, with probability
/// 9/10, every term is collision-free in at least half of them.
u64 num_substitutions(std::size_t n, u64 T);

struct SelectionParams {
  SubstitutionMode mode = SubstitutionMode::multivariate;
  DegreeBounds bounds;
  u64 terms = 0;
  double mu = 0.25;
  u64 nu = 0;
  /// Multivariate modulus; also kept in bivariate mode for reporting.
  u64 lambda = 0;
  double lambda_p = 0;
  double lambda_q = 0;

  std::size_t nvars() const { return bounds.size(); }

  /// Parameters used by the interpolator: mu = 1/4, lambda = least prime
  /// >= max(3, 4T), nu = num_substitutions(n, T). Bivariate prime ranges are
  /// widened if they hold fewer than nu distinct pairs. Requires T >= 2.
  static SelectionParams for_interpolation(const DegreeBounds& bounds, u64 T);

  /// Parameters for a single-substitution collision experiment at failure
  /// bound mu (nu is left at 1). Accepts T = 1.
  static SelectionParams for_collision_bound(const DegreeBounds& bounds, u64 T, double mu);

  /// Number of distinct vectors the sampler can produce (saturating).
  u64 sample_space() const;

  /// Degree bound valid for every vector the sampler can produce:
  /// floor(2 lambda_p)(Dx-1) + floor(2 lambda_q)(Dy-1), or (lambda-1) sum_j (D_j-1).
  u64 family_degree_bound() const;
};

SubstitutionVector sample_substitution(const SelectionParams& params, Rng& rng);

/// params.nu pairwise distinct vectors. Throws std::invalid_argument if the
/// sample space is smaller than nu.
std::vector<SubstitutionVector> sample_family(const SelectionParams& params, Rng& rng);

}  // namespace rkinterp
