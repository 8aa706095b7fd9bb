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

#include "rkinterp/diversify.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rkinterp {
namespace {

SparsePoly rescale(const SparsePoly& f, const std::vector<Fe>& factors) {
  if (factors.size() != f.nvars()) {
    throw std::invalid_argument("scaling point length differs from variable count");
  }
  const PrimeField& F = f.field();
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) {
    for (std::size_t j = 0; j < t.exps.size(); ++j) {
      if (t.exps[j] != 0) t.coeff = F.mul(t.coeff, F.pow(factors[j], t.exps[j]));
    }
  }
  return SparsePoly::from_terms(F, f.nvars(), std::move(terms));
}

}  // namespace

DiversifyParams required_field_size(std::size_t n, u64 D, u64 T, u64 nu, double mu) {
  if (n < 1 || D < 1 || T < 1 || nu < 1) {
    throw std::invalid_argument("required_field_size needs positive n, D, T and nu");
  }
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("mu must lie in (0, 1)");
  DiversifyParams p;
  p.nvars = n;
  p.max_degree = D;
  p.mu = mu;
  // T^2 (nu+2)^2 / 8 exactly, in 128-bit integers.
  unsigned __int128 tn = static_cast<unsigned __int128>(T) * (nu + 2);
  unsigned __int128 sq = tn * tn;
  unsigned __int128 m = (sq + 7) / 8;
  if (m >> 63) throw std::overflow_error("diversifying set size overflows");
  p.m = static_cast<u64>(m);
  const long double need = static_cast<long double>(n) * static_cast<long double>(p.m) *
                           static_cast<long double>(D) / static_cast<long double>(mu);
  long double c = std::ceil(need);
  // mu = 1/10 is not representable; 409600.00000000006 must still give 409600.
  if (c - need > 1.0L - 1e-9L * std::max<long double>(1.0L, need)) c -= 1.0L;
  if (c >= 9.2e18L) throw std::overflow_error("required field size exceeds 2^63");
  p.q_min = static_cast<u64>(c);
  return p;
}

ScalingPoint::ScalingPoint(const PrimeField& field, std::vector<Fe> alpha)
    : alpha_(std::move(alpha)) {
  alpha_inv_.reserve(alpha_.size());
  for (Fe a : alpha_) {
    if (a.v == 0) throw std::invalid_argument("scaling point has a zero component");
    alpha_inv_.push_back(field.inv(a));
  }
}

ScalingPoint ScalingPoint::identity(const PrimeField& field, std::size_t n) {
  return ScalingPoint(field, std::vector<Fe>(n, field.one()));
}

ScalingPoint sample_alpha(const PrimeField& field, std::size_t n, u64 q_min, Rng& rng) {
  if (field.modulus() < q_min) {
    throw FieldTooSmall("field size " + std::to_string(field.modulus()) +
                        " is below the required " + std::to_string(q_min) +
                        "; use a prime field with q >= " + std::to_string(q_min));
  }
  if (field.modulus() < 2) throw FieldTooSmall("F_q^* is empty");
  std::uniform_int_distribution<u64> dist(1, field.modulus() - 1);
  std::vector<Fe> alpha(n);
  for (auto& a : alpha) a = Fe{dist(rng)};
  return ScalingPoint(field, std::move(alpha));
}

ScaledBlackBox::ScaledBlackBox(BlackBox& inner, ScalingPoint alpha)
    : inner_(inner), alpha_(std::move(alpha)) {
  if (alpha_.size() != inner_.nvars()) {
    throw std::invalid_argument("scaling point length differs from variable count");
  }
}

Fe ScaledBlackBox::evaluate(std::span<const Fe> point) {
  if (point.size() != alpha_.size()) {
    throw std::invalid_argument("evaluation point has the wrong dimension");
  }
  const PrimeField& F = inner_.field();
  std::vector<Fe> scaled(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) scaled[j] = F.mul(alpha_.alpha()[j], point[j]);
  return inner_.probe(scaled);
}

SparsePoly diversify(const SparsePoly& f, const ScalingPoint& alpha) {
  return rescale(f, alpha.alpha());
}

SparsePoly undiversify(const SparsePoly& g, const ScalingPoint& alpha) {
  return rescale(g, alpha.alpha_inv());
}

}  // namespace rkinterp
