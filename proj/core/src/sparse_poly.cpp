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

#include "rkinterp/sparse_poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rkinterp {
namespace {

bool lex_greater(const Term& a, const Term& b) { return a.exps > b.exps; }

void check_lengths(const std::vector<Term>& terms, std::size_t nvars) {
  for (const auto& t : terms) {
    if (t.exps.size() != nvars) {
      throw std::invalid_argument("exponent vector has " + std::to_string(t.exps.size()) +
                                  " entries, expected " + std::to_string(nvars));
    }
  }
}

struct ExpHash {
  std::size_t operator()(const ExponentVec& e) const {
    u64 h = 0x12345;
    for (u64 x : e) h = mix_seed(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

SparsePoly::SparsePoly(PrimeField field, std::size_t nvars) : field_(field), nvars_(nvars) {}

SparsePoly SparsePoly::from_terms(PrimeField field, std::size_t nvars, std::vector<Term> terms) {
  check_lengths(terms, nvars);
  std::sort(terms.begin(), terms.end(), lex_greater);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].exps == terms[i - 1].exps) {
      throw std::invalid_argument("duplicate exponent vector in term list");
    }
  }
  std::erase_if(terms, [](const Term& t) { return t.coeff.v == 0; });
  for (auto& t : terms) t.coeff = field.from_uint(t.coeff.v);
  return SparsePoly(field, nvars, std::move(terms));
}

SparsePoly SparsePoly::from_terms_combining(PrimeField field, std::size_t nvars,
                                            std::vector<Term> terms) {
  check_lengths(terms, nvars);
  std::sort(terms.begin(), terms.end(), lex_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Fe c = field.from_uint(t.coeff.v);
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff = field.add(out.back().coeff, c);
    } else {
      out.push_back(Term{c, std::move(t.exps)});
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff.v == 0; });
  return SparsePoly(field, nvars, std::move(out));
}

Fe SparsePoly::evaluate(std::span<const Fe> point) const {
  if (point.size() != nvars_) {
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, polynomial has " + std::to_string(nvars_) +
                                " variables");
  }
  Fe acc = field_.zero();
  for (const auto& t : terms_) {
    Fe mono = t.coeff;
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (t.exps[j] != 0) mono = field_.mul(mono, field_.pow(point[j], t.exps[j]));
    }
    acc = field_.add(acc, mono);
  }
  return acc;
}

void SparsePoly::check_bounds(const DegreeBounds& bounds) const {
  if (bounds.size() != nvars_) {
    throw std::invalid_argument("degree bounds have " + std::to_string(bounds.size()) +
                                " entries, polynomial has " + std::to_string(nvars_) +
                                " variables");
  }
  for (const auto& t : terms_) {
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (t.exps[j] >= bounds[j]) {
        throw std::invalid_argument("exponent " + std::to_string(t.exps[j]) + " of variable " +
                                    std::to_string(j) + " violates bound " +
                                    std::to_string(bounds[j]));
      }
    }
  }
}

SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) {
  if (!(f.field_ == g.field_) || f.nvars_ != g.nvars_) {
    throw std::invalid_argument("adding polynomials from different rings");
  }
  std::vector<Term> all = f.terms_;
  all.insert(all.end(), g.terms_.begin(), g.terms_.end());
  return SparsePoly::from_terms_combining(f.field_, f.nvars_, std::move(all));
}

SparsePoly random_sparse(PrimeField field, const DegreeBounds& bounds, std::size_t T, Rng& rng) {
  const std::size_t n = bounds.size();
  // Size of the exponent space, saturating once it clearly exceeds 4T.
  u64 space = 1;
  bool huge = false;
  for (u64 b : bounds) {
    if (b == 0) {
      space = 0;
      break;
    }
    if (!huge && space > (u64{1} << 62) / b) huge = true;
    if (!huge) space *= b;
  }
  if (huge) space = ~u64{0};
  if (T > space) {
    throw std::invalid_argument("cannot draw " + std::to_string(T) +
                                " distinct exponent vectors from a space of " +
                                std::to_string(space));
  }

  std::uniform_int_distribution<u64> coeff_dist(1, field.modulus() - 1);
  std::vector<Term> terms;
  terms.reserve(T);

  auto decode = [&](u64 index) {
    ExponentVec e(n);
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = index % bounds[j];
      index /= bounds[j];
    }
    return e;
  };

  if (space <= 4 * static_cast<u64>(T) + 16) {
    // Dense regime: partial Fisher-Yates over all exponent indices.
    std::vector<u64> idx(space);
    std::iota(idx.begin(), idx.end(), u64{0});
    for (std::size_t i = 0; i < T; ++i) {
      std::uniform_int_distribution<u64> pick(i, space - 1);
      std::swap(idx[i], idx[pick(rng)]);
      terms.push_back(Term{Fe{coeff_dist(rng)}, decode(idx[i])});
    }
  } else {
    std::unordered_set<ExponentVec, ExpHash> seen;
    while (terms.size() < T) {
      ExponentVec e(n);
      for (std::size_t j = 0; j < n; ++j) {
        e[j] = std::uniform_int_distribution<u64>(0, bounds[j] - 1)(rng);
      }
      if (seen.insert(e).second) terms.push_back(Term{Fe{coeff_dist(rng)}, std::move(e)});
    }
  }
  return SparsePoly::from_terms(field, n, std::move(terms));
}

SparsePoly random_sparse(PrimeField field, std::size_t n, std::size_t T, u64 D, Rng& rng) {
  return random_sparse(field, DegreeBounds(n, D), T, rng);
}

}  // namespace rkinterp
