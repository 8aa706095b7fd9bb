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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rkinterp/black_box.hpp"
#include "rkinterp/random.hpp"
#include "rkinterp/recover.hpp"
#include "rkinterp/uni_interp.hpp"

namespace rkinterp {

struct InterpolationConfig {
  /// Failure bound per term per substitution.
  static constexpr double kSubstitutionMu = 0.25;
  /// Failure bound of the diversifying set.
  static constexpr double kDiversityMu = 0.1;

  /// Partial degree bounds, one per variable: deg_{x_j} f < bounds[j].
  DegreeBounds bounds;
  /// Upper bound on the number of terms.
  u64 terms = 1;
  /// Target failure probability of interpolate_whp.
  double epsilon = 0.05;
  u64 seed = 0;
  /// Worker threads for images (and for runs in interpolate_whp).
  unsigned jobs = 1;

  std::size_t nvars() const { return bounds.size(); }
  /// Throws std::invalid_argument on T < 1, a zero bound or epsilon outside (0, 1).
  void validate() const;
};

struct ImageInfo {
  SubstitutionVector s;
  /// nullopt for an identically zero image.
  std::optional<u64> degree;
};

struct BucketStats {
  std::size_t accepted = 0;
  std::size_t ambiguous = 0;
  std::map<Rejection, std::size_t> rejected;

  std::size_t rejected_total() const;
};

struct VoteTally {
  u64 runs = 0;
  u64 winner_votes = 0;
  u64 failed_runs = 0;
  u64 distinct_candidates = 0;
};

struct RunReport {
  std::optional<SparsePoly> result;
  std::string failure;
  /// Probes issued by this call.
  u64 probes = 0;
  u64 nu = 0;
  /// Dense degree bound used for every image.
  u64 deg_bound = 0;
  std::vector<ImageInfo> images;
  BucketStats buckets;
  std::optional<VoteTally> vote;

  bool ok() const { return result.has_value(); }
};

/// One pass of the randomized-Kronecker interpolation. Succeeds with
/// probability at least 2/3; on detectable failure `result` is empty and
/// `failure` says why. Throws FieldTooSmall if the box's field is below the
/// diversification or dense-backend requirement.
RunReport interpolate_once(BlackBox& box, const InterpolationConfig& cfg, Rng& rng,
                           const UnivariateBackend& backend = DenseBackend{});

/// T = 1: one dense interpolation of f(1, .., z, .., 1) per variable.
RunReport trivial_T1(BlackBox& box, const DegreeBounds& bounds,
                     const UnivariateBackend& backend = DenseBackend{});

/// ceil(18 ln(1/epsilon)).
u64 amplification_runs(double epsilon);

/// amplification_runs(cfg.epsilon) independent runs seeded from cfg.seed and
/// a strict-majority vote on the canonical result.
RunReport interpolate_whp(BlackBox& box, const InterpolationConfig& cfg,
                          const UnivariateBackend& backend = DenseBackend{});

/// Diversification size needed for (bounds, T); 0 when no diversification
/// is involved (T = 1 or a single active variable).
u64 required_modulus(const DegreeBounds& bounds, u64 T);

/// Smallest prime usable by interpolate_once for every sampled family:
/// least prime >= max(q_min, family degree bound + 2).
u64 auto_field_modulus(const DegreeBounds& bounds, u64 T);

}  // namespace rkinterp
