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

#include "rkinterp/uni_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rkinterp {

UniPoly UniPoly::from_terms(PrimeField field, std::vector<UniTerm> terms,
                            std::optional<u64> deg_bound) {
  std::sort(terms.begin(), terms.end(),
            [](const UniTerm& a, const UniTerm& b) { return a.degree < b.degree; });
  UniPoly g(field);
  for (const auto& t : terms) {
    Fe c = field.from_uint(t.coeff.v);
    if (!g.terms_.empty() && g.terms_.back().degree == t.degree) {
      g.terms_.back().coeff = field.add(g.terms_.back().coeff, c);
    } else {
      g.terms_.push_back(UniTerm{c, t.degree});
    }
  }
  std::erase_if(g.terms_, [](const UniTerm& t) { return t.coeff.v == 0; });
  const u64 actual = g.terms_.empty() ? 0 : g.terms_.back().degree;
  if (deg_bound && !g.terms_.empty() && actual > *deg_bound) {
    throw std::invalid_argument("term degree " + std::to_string(actual) + " exceeds bound " +
                                std::to_string(*deg_bound));
  }
  g.deg_bound_ = deg_bound.value_or(actual);
  return g;
}

UniPoly UniPoly::from_dense(PrimeField field, const std::vector<Fe>& coeffs) {
  UniPoly g(field);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d].v != 0) g.terms_.push_back(UniTerm{coeffs[d], d});
  }
  g.deg_bound_ = coeffs.empty() ? 0 : coeffs.size() - 1;
  return g;
}

std::optional<u64> UniPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().degree;
}

Fe UniPoly::evaluate(Fe z) const {
  // Walk terms from high to low degree, Horner-style across the gaps.
  Fe acc = field_.zero();
  u64 prev = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it != terms_.rbegin()) acc = field_.mul(acc, field_.pow(z, prev - it->degree));
    acc = field_.add(acc, it->coeff);
    prev = it->degree;
  }
  if (!terms_.empty()) acc = field_.mul(acc, field_.pow(z, prev));
  return acc;
}

}  // namespace rkinterp
