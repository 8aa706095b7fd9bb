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

#include "rkinterp/recover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rkinterp/exact_solve.hpp"

namespace rkinterp {

std::size_t RecoveryBucket::support() const {
  std::set<std::size_t> distinct;
  for (const auto& e : entries) distinct.insert(e.image);
  return distinct.size();
}

std::vector<RecoveryBucket> bucket_by_coefficient(std::span<const Image> images) {
  std::map<u64, RecoveryBucket> by_coeff;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& t : images[i].g.terms()) {
      auto& b = by_coeff[t.coeff.v];
      b.coeff = t.coeff;
      if (!b.entries.empty() && b.entries.back().image == i) b.ambiguous = true;
      b.entries.push_back(BucketEntry{i, t.degree});
    }
  }
  std::vector<RecoveryBucket> out;
  const double threshold = static_cast<double>(images.size()) / 2.0;
  for (auto& [c, b] : by_coeff) {
    if (static_cast<double>(b.support()) >= threshold) out.push_back(std::move(b));
  }
  return out;
}

std::optional<std::vector<std::size_t>> select_independent(
    std::span<const SubstitutionVector> S, SubstitutionMode mode, u64 lambda, std::size_t n) {
  const std::size_t window = std::min(2 * n, S.size());
  std::vector<IntRow> rows(S.begin(), S.begin() + static_cast<std::ptrdiff_t>(window));
  const u64 modulus = mode == SubstitutionMode::bivariate ? 0 : lambda;
  if (mode == SubstitutionMode::multivariate && lambda < 2) {
    throw std::invalid_argument("multivariate selection needs a prime lambda");
  }
  return independent_rows(rows, n, modulus);
}

const char* to_string(Rejection r) {
  switch (r) {
    case Rejection::none: return "none";
    case Rejection::non_integral: return "non-integral";
    case Rejection::out_of_range: return "out-of-range";
    case Rejection::inconsistent: return "inconsistent";
    case Rejection::rank_deficient: return "rank-deficient";
  }
  return "unknown";
}

ExponentSolution solve_exponents(std::span<const SubstitutionVector> rows,
                                 std::span<const u64> degrees, const DegreeBounds& bounds,
                                 std::span<const std::pair<SubstitutionVector, u64>> all_entries) {
  const std::size_t n = bounds.size();
  if (rows.size() != n || degrees.size() != n) {
    throw std::invalid_argument("solve_exponents needs n rows and n degrees");
  }
  std::vector<IntRow> a(rows.begin(), rows.end());
  IntRow b(degrees.begin(), degrees.end());
  const IntegerSolve sol = solve_integer_system(a, b);

  ExponentSolution out;
  switch (sol.status) {
    case SolveStatus::singular:
      out.reason = Rejection::rank_deficient;
      return out;
    case SolveStatus::non_integral:
      out.reason = Rejection::non_integral;
      return out;
    case SolveStatus::overflow:
      out.reason = Rejection::out_of_range;
      return out;
    case SolveStatus::integral:
      break;
  }
  ExponentVec e(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.x[j] < 0 || static_cast<u64>(sol.x[j]) >= bounds[j]) {
      out.reason = Rejection::out_of_range;
      return out;
    }
    e[j] = static_cast<u64>(sol.x[j]);
  }
  for (const auto& [s, d] : all_entries) {
    // e_j < D_j and s_j < 2^63 keep this within unsigned __int128.
    unsigned __int128 dot = 0;
    for (std::size_t j = 0; j < n; ++j) dot += static_cast<unsigned __int128>(s[j]) * e[j];
    if (dot != d) {
      out.reason = Rejection::inconsistent;
      return out;
    }
  }
  out.e = std::move(e);
  return out;
}

std::optional<SparsePoly> assemble(std::span<const RecoveredTerm> accepted,
                                   const PrimeField& field, std::size_t nvars) {
  std::vector<Term> terms;
  terms.reserve(accepted.size());
  for (const auto& t : accepted) terms.push_back(Term{t.coeff, t.e});
  try {
    return SparsePoly::from_terms(field, nvars, std::move(terms));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace rkinterp
