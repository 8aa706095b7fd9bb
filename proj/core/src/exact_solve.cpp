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

#include "rkinterp/exact_solve.hpp"

#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace rkinterp {
namespace {

using boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<cpp_int>>;

Matrix to_big(const std::vector<IntRow>& a) {
  Matrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) throw std::invalid_argument("matrix is not square");
    m[i].assign(a[i].begin(), a[i].end());
  }
  return m;
}

// Bareiss: after step k every entry below the pivot row is an exact k+1 minor,
// so the division by the previous pivot is exact.
cpp_int bareiss_det(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

bool is_singular(const std::vector<IntRow>& a) { return bareiss_det(to_big(a)) == 0; }

IntegerSolve solve_integer_system(const std::vector<IntRow>& a, const IntRow& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("right-hand side has the wrong length");
  const Matrix base = to_big(a);
  const cpp_int det = bareiss_det(base);
  IntegerSolve out;
  if (det == 0) {
    out.status = SolveStatus::singular;
    return out;
  }
  out.status = SolveStatus::integral;
  out.x.resize(n);
  for (std::size_t col = 0; col < n; ++col) {
    Matrix m = base;
    for (std::size_t i = 0; i < n; ++i) m[i][col] = b[i];
    const cpp_int num = bareiss_det(std::move(m));
    if (num % det != 0) {
      out.status = SolveStatus::non_integral;
      out.x.clear();
      return out;
    }
    const cpp_int xi = num / det;
    if (xi > std::numeric_limits<std::int64_t>::max() ||
        xi < std::numeric_limits<std::int64_t>::min()) {
      out.status = SolveStatus::overflow;
      continue;
    }
    out.x[col] = static_cast<std::int64_t>(xi);
  }
  if (out.status == SolveStatus::overflow) out.x.clear();
  return out;
}

std::optional<std::vector<std::size_t>> independent_rows(const std::vector<IntRow>& rows,
                                                         std::size_t want,
                                                         std::uint64_t modulus) {
  std::vector<std::size_t> picked;
  if (want == 0) return picked;
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  // Echelon basis; basis[k] has its pivot at pivots[k].
  std::vector<std::vector<cpp_int>> basis;
  std::vector<std::size_t> pivots;
  const cpp_int p = modulus;

  for (std::size_t r = 0; r < rows.size() && picked.size() < want; ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("rows have different lengths");
    std::vector<cpp_int> v(rows[r].begin(), rows[r].end());
    if (modulus != 0) {
      for (auto& x : v) x %= p;
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::size_t c = pivots[k];
      if (v[c] == 0) continue;
      const cpp_int a = basis[k][c];
      const cpp_int f = v[c];
      for (std::size_t j = 0; j < n; ++j) {
        v[j] = a * v[j] - f * basis[k][j];
        if (modulus != 0) {
          v[j] %= p;
          if (v[j] < 0) v[j] += p;
        }
      }
    }
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == n) continue;
    if (modulus == 0) {
      cpp_int g = 0;
      for (const auto& x : v) g = gcd(g, abs(x));
      for (auto& x : v) x /= g;
    }
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
    picked.push_back(r);
  }
  if (picked.size() < want) return std::nullopt;
  return picked;
}

}  // namespace rkinterp
