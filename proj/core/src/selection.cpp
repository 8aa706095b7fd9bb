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

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "rkinterp/primes.hpp"
#include "rkinterp/selection.hpp"

namespace rkinterp {
namespace {

void check_mu(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("mu must lie in (0, 1)");
}

// Same tolerance as the prime helpers: 29.0000000001 must not round to 30.
u64 ceil_tolerant(double x) {
  double c = std::ceil(x);
  if (c - x > 1.0 - 1e-9) c -= 1.0;
  return static_cast<u64>(std::max(0.0, c));
}

}  // namespace

BivariateThresholds bivariate_thresholds(u64 T, u64 Dx, u64 Dy, double mu) {
  check_mu(mu);
  if (T < 1) throw std::invalid_argument("term bound must be at least 1");
  if (Dx < 2 || Dy < 2) {
    throw std::invalid_argument("bivariate thresholds need degree bounds >= 2 (ln 1 = 0)");
  }
  const double dx = static_cast<double>(Dx);
  const double dy = static_cast<double>(Dy);
  BivariateThresholds th;
  th.bound_b = 25.0 * static_cast<double>(T - 1) * std::log(dx) * std::log(dy) / (9.0 * mu);
  th.lambda_p = std::max(20.5, std::sqrt(th.bound_b * dy / dx));
  th.lambda_q = std::max(20.5, std::sqrt(th.bound_b * dx / dy));
  return th;
}

u64 multivariate_lambda(u64 T, double mu) {
  check_mu(mu);
  if (T < 1) throw std::invalid_argument("term bound must be at least 1");
  return least_prime_geq(static_cast<double>(T) / mu);
}

u64 num_substitutions(std::size_t n, u64 T) {
  if (n < 1 || T < 2) throw std::invalid_argument("num_substitutions needs n >= 1 and T >= 2");
  const double v = std::max(4.0 * static_cast<double>(n), 8.0 * std::log(10.0 * static_cast<double>(T)));
  return ceil_tolerant(v);
}

SelectionParams SelectionParams::for_interpolation(const DegreeBounds& bounds, u64 T) {
  SelectionParams p = for_collision_bound(bounds, T, 0.25);
  p.lambda = next_prime(std::max<u64>(3, 4 * T));
  p.nu = num_substitutions(bounds.size(), T);
  // At the 20.5 floor only 5 x 5 prime pairs exist; widen until nu distinct
  // vectors do. Larger ranges only lower the collision probability.
  while (p.mode == SubstitutionMode::bivariate && p.sample_space() < p.nu) {
    p.lambda_p *= 1.125;
    p.lambda_q *= 1.125;
  }
  return p;
}

SelectionParams SelectionParams::for_collision_bound(const DegreeBounds& bounds, u64 T, double mu) {
  if (bounds.empty()) throw std::invalid_argument("need at least one variable");
  SelectionParams p;
  p.bounds = bounds;
  p.terms = T;
  p.mu = mu;
  p.nu = 1;
  p.lambda = multivariate_lambda(T, mu);
  if (bounds.size() == 2) {
    p.mode = SubstitutionMode::bivariate;
    auto th = bivariate_thresholds(T, bounds[0], bounds[1], mu);
    p.lambda_p = th.lambda_p;
    p.lambda_q = th.lambda_q;
  }
  return p;
}

u64 SelectionParams::sample_space() const {
  if (mode == SubstitutionMode::bivariate) {
    const u64 np = primes_in(lambda_p, 2 * lambda_p).size();
    const u64 nq = primes_in(lambda_q, 2 * lambda_q).size();
    return np * nq;
  }
  u64 space = 1;
  for (std::size_t j = 0; j < nvars(); ++j) {
    if (space > (~u64{0}) / lambda) return ~u64{0};
    space *= lambda;
  }
  return space;
}

u64 SelectionParams::family_degree_bound() const {
  if (mode == SubstitutionMode::bivariate) {
    const u64 p_max = static_cast<u64>(std::floor(2 * lambda_p));
    const u64 q_max = static_cast<u64>(std::floor(2 * lambda_q));
    return max_image_degree(bounds, {p_max, q_max});
  }
  return max_image_degree(bounds, SubstitutionVector(nvars(), lambda - 1));
}

SubstitutionVector sample_substitution(const SelectionParams& params, Rng& rng) {
  if (params.mode == SubstitutionMode::bivariate) {
    u64 p = sample_prime_in(params.lambda_p, 2 * params.lambda_p, rng);
    u64 q = sample_prime_in(params.lambda_q, 2 * params.lambda_q, rng);
    return {p, q};
  }
  std::uniform_int_distribution<u64> dist(0, params.lambda - 1);
  SubstitutionVector s(params.nvars());
  for (auto& x : s) x = dist(rng);
  return s;
}

std::vector<SubstitutionVector> sample_family(const SelectionParams& params, Rng& rng) {
  if (params.sample_space() < params.nu) {
    throw std::invalid_argument("only " + std::to_string(params.sample_space()) +
                                " distinct substitution vectors exist, " +
                                std::to_string(params.nu) + " requested");
  }
  std::vector<SubstitutionVector> family;
  std::set<SubstitutionVector> seen;
  family.reserve(params.nu);
  while (family.size() < params.nu) {
    auto s = sample_substitution(params, rng);
    if (seen.insert(s).second) family.push_back(std::move(s));
  }
  return family;
}

}  // namespace rkinterp
