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

#include "rkinterp/kronecker.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rkinterp {
namespace {

u64 checked_mul(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("degree overflows 64 bits");
  return r;
}

u64 checked_add(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("degree overflows 64 bits");
  return r;
}

u64 dot(const ExponentVec& e, const SubstitutionVector& s) {
  u64 d = 0;
  for (std::size_t j = 0; j < e.size(); ++j) d = checked_add(d, checked_mul(e[j], s[j]));
  return d;
}

}  // namespace

std::size_t CollisionReport::collided_terms() const {
  return static_cast<std::size_t>(std::count(collided.begin(), collided.end(), true));
}

u64 classical_degree(const DegreeBounds& bounds) {
  u64 prod = 1;
  for (u64 b : bounds) prod = checked_mul(prod, b);
  return prod;
}

UniPoly classical_kronecker(const SparsePoly& f, const DegreeBounds& bounds) {
  f.check_bounds(bounds);
  const u64 total = classical_degree(bounds);
  // Radix weights 1, D_1, D_1 D_2, ...
  SubstitutionVector weights(bounds.size());
  u64 w = 1;
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    weights[j] = w;
    w *= bounds[j];
  }
  std::vector<UniTerm> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back(UniTerm{t.coeff, dot(t.exps, weights)});
  return UniPoly::from_terms(f.field(), std::move(terms), total == 0 ? 0 : total - 1);
}

SparsePoly inverse_kronecker(const UniPoly& g, const DegreeBounds& bounds, std::size_t nvars) {
  if (bounds.size() != nvars) {
    throw std::invalid_argument("need one degree bound per variable");
  }
  const u64 total = classical_degree(bounds);
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g.terms()) {
    if (t.degree >= total) {
      throw std::invalid_argument("degree " + std::to_string(t.degree) +
                                  " is outside the Kronecker range [0, " + std::to_string(total) +
                                  ")");
    }
    ExponentVec e(nvars);
    u64 rest = t.degree;
    for (std::size_t j = 0; j < nvars; ++j) {
      e[j] = rest % bounds[j];
      rest /= bounds[j];
    }
    terms.push_back(Term{t.coeff, std::move(e)});
  }
  return SparsePoly::from_terms(g.field(), nvars, std::move(terms));
}

Substitution substitute(const SparsePoly& f, const SubstitutionVector& s) {
  if (s.size() != f.nvars()) {
    throw std::invalid_argument("substitution vector length differs from variable count");
  }
  const auto& terms = f.terms();
  std::map<u64, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < terms.size(); ++i) by_degree[dot(terms[i].exps, s)].push_back(i);

  const PrimeField& F = f.field();
  CollisionReport report;
  report.collided.assign(terms.size(), false);
  std::vector<UniTerm> image;
  image.reserve(by_degree.size());
  u64 top = 0;
  for (const auto& [deg, members] : by_degree) {
    Fe c = F.zero();
    for (std::size_t i : members) c = F.add(c, terms[i].coeff);
    if (members.size() >= 2) {
      ++report.sums;
      for (std::size_t i : members) report.collided[i] = true;
    }
    image.push_back(UniTerm{c, deg});
    top = deg;
  }
  return Substitution{UniPoly::from_terms(F, std::move(image), top), std::move(report)};
}

u64 max_image_degree(const DegreeBounds& bounds, const SubstitutionVector& s) {
  if (bounds.size() != s.size()) {
    throw std::invalid_argument("substitution vector length differs from bound count");
  }
  u64 d = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (bounds[j] > 0) d = checked_add(d, checked_mul(s[j], bounds[j] - 1));
  }
  return d;
}

}  // namespace rkinterp
