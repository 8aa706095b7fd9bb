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

#include <boost/multiprecision/cpp_int.hpp>
#include <set>

#include "gtest/gtest.h"
#include "rkinterp/diversify.hpp"
#include "rkinterp/exact_solve.hpp"
#include "rkinterp/primes.hpp"
#include "rkinterp/recover.hpp"
#include "test_util.hpp"

namespace rkinterp {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

std::vector<Image> worked_images(const PrimeField& F) {
  auto f = testing::example_poly(F);
  std::vector<Image> images;
  for (SubstitutionVector s : {SubstitutionVector{5, 2}, SubstitutionVector{2, 5}}) {
    images.push_back(Image{s, substitute(f, s).image});
  }
  return images;
}

TEST(BucketTest, WorkedCoefficientThree) {
  PrimeField F(101);
  auto images = worked_images(F);
  auto buckets = bucket_by_coefficient(images);
  const RecoveryBucket* three = nullptr;
  for (const auto& b : buckets) {
    if (b.coeff == F.from_uint(3)) three = &b;
  }
  ASSERT_NE(three, nullptr);
  EXPECT_FALSE(three->ambiguous);
  ASSERT_EQ(three->entries.size(), 2u);
  EXPECT_EQ(three->entries[0], (BucketEntry{0, 47}));
  EXPECT_EQ(three->entries[1], (BucketEntry{1, 23}));
}

TEST(BucketTest, IdealCaseGivesTBucketsOfSizeNu) {
  PrimeField F(1000003);
  auto f = SparsePoly::from_terms(F, 3,
                                  {Term{F.from_uint(11), {0, 0, 1}}, Term{F.from_uint(12), {0, 1, 0}},
                                   Term{F.from_uint(13), {1, 0, 0}}});
  std::vector<Image> images;
  for (u64 k = 1; k <= 6; ++k) {
    SubstitutionVector s{k, k + 10, k + 20};
    images.push_back(Image{s, substitute(f, s).image});
  }
  auto buckets = bucket_by_coefficient(images);
  ASSERT_EQ(buckets.size(), 3u);
  for (const auto& b : buckets) {
    EXPECT_FALSE(b.ambiguous);
    EXPECT_EQ(b.support(), 6u);
  }
}

TEST(BucketTest, DuplicateCoefficientIsAmbiguous) {
  PrimeField F(101);
  auto g0 = UniPoly::from_terms(F, {UniTerm{F.from_uint(5), 2}, UniTerm{F.from_uint(5), 7}});
  auto g1 = UniPoly::from_terms(F, {UniTerm{F.from_uint(5), 3}});
  std::vector<Image> images{Image{{1, 2}, g0}, Image{{3, 4}, g1}};
  auto buckets = bucket_by_coefficient(images);
  ASSERT_EQ(buckets.size(), 1u);
  EXPECT_TRUE(buckets[0].ambiguous);
  EXPECT_EQ(buckets[0].support(), 2u);
}

TEST(BucketTest, LowSupportDropped) {
  PrimeField F(101);
  std::vector<Image> images;
  for (u64 i = 0; i < 4; ++i) {
    std::vector<UniTerm> t{UniTerm{F.from_uint(9), i}};
    if (i == 0) t.push_back(UniTerm{F.from_uint(4), 10});
    images.push_back(Image{{i, i}, UniPoly::from_terms(F, t)});
  }
  auto buckets = bucket_by_coefficient(images);
  ASSERT_EQ(buckets.size(), 1u);
  EXPECT_EQ(buckets[0].coeff, F.from_uint(9));
}

TEST(SelectIndependentTest, WorkedBivariate) {
  std::vector<SubstitutionVector> S{{5, 2}, {2, 5}};
  auto idx = select_independent(S, SubstitutionMode::bivariate, 0, 2);
  ASSERT_TRUE(idx.has_value());
  EXPECT_EQ(*idx, (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(is_singular({{5, 2}, {2, 5}}));
}

TEST(SelectIndependentTest, IdentityRowsSelected) {
  std::vector<SubstitutionVector> S{{0, 0, 0}, {1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  auto idx = select_independent(S, SubstitutionMode::multivariate, 7, 3);
  ASSERT_TRUE(idx.has_value());
  EXPECT_EQ(*idx, (std::vector<std::size_t>{1, 3, 4}));
}

TEST(SelectIndependentTest, RepeatedVectorIsRankDeficient) {
  std::vector<SubstitutionVector> S(6, SubstitutionVector{3, 1, 4});
  EXPECT_FALSE(select_independent(S, SubstitutionMode::multivariate, 17, 3).has_value());
}

TEST(SelectIndependentTest, WindowIsFirstTwoN) {
  // Independent rows exist only after position 2n.
  std::vector<SubstitutionVector> S(4, SubstitutionVector{1, 1});
  S.push_back({1, 0});
  EXPECT_FALSE(select_independent(S, SubstitutionMode::multivariate, 5, 2).has_value());
}

TEST(SelectIndependentTest, ModularDependence) {
  // det = 5 - 2*... : (1,2),(3,1) has det -5, singular mod 5 only.
  std::vector<SubstitutionVector> S{{1, 2}, {3, 1}};
  EXPECT_FALSE(select_independent(S, SubstitutionMode::multivariate, 5, 2).has_value());
  EXPECT_TRUE(select_independent(S, SubstitutionMode::multivariate, 7, 2).has_value());
  EXPECT_TRUE(select_independent(S, SubstitutionMode::bivariate, 0, 2).has_value());
}

// det of a small integer matrix by cofactor expansion.
cpp_int cofactor_det(const std::vector<IntRow>& a) {
  const std::size_t n = a.size();
  if (n == 1) return cpp_int(a[0][0]);
  cpp_int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<IntRow> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntRow row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    cpp_int term = cpp_int(a[0][c]) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : cpp_int(-term);
  }
  return total;
}

TEST(SelectIndependentTest, MatchesBruteForceRankModLambda) {
  Rng rng(1);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 2 + rng() % 2;
    const u64 lambda = std::vector<u64>{3, 5, 7}[rng() % 3];
    std::vector<SubstitutionVector> S(2 * n, SubstitutionVector(n));
    for (auto& s : S) {
      for (auto& x : s) x = rng() % lambda;
    }
    // Brute force: any n-subset with nonzero det mod lambda.
    bool exists = false;
    std::vector<int> pick(S.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), 1);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<IntRow> m;
      for (std::size_t i = 0; i < S.size(); ++i) {
        if (pick[i]) m.push_back(S[i]);
      }
      if (cofactor_det(m) % lambda != 0) exists = true;
    } while (!exists && std::next_permutation(pick.begin(), pick.end()));

    auto idx = select_independent(S, SubstitutionMode::multivariate, lambda, n);
    ASSERT_EQ(idx.has_value(), exists) << rep;
    if (idx) {
      std::vector<IntRow> m;
      for (auto i : *idx) m.push_back(S[i]);
      EXPECT_NE(cofactor_det(m) % lambda, 0);
    }
  }
}

TEST(SelectIndependentTest, BivariatePrimePairsSingularIffProportional) {
  auto primes = primes_in(21, 80);
  Rng rng(2);
  int singular = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    u64 a = primes[rng() % primes.size()], b = primes[rng() % primes.size()];
    u64 c = primes[rng() % primes.size()], d = primes[rng() % primes.size()];
    if (a == c && b == d) continue;
    const bool sing = is_singular({{a, b}, {c, d}});
    // Distinct primes: ad = bc forces a = b and c = d.
    const bool proportional = (a == b && c == d);
    ASSERT_EQ(sing, proportional) << a << " " << b << " " << c << " " << d;
    singular += sing;
  }
  EXPECT_GT(singular, 0);
}

// Rational Gaussian elimination oracle.
std::optional<std::vector<cpp_rational>> rational_solve(const std::vector<IntRow>& a,
                                                        const IntRow& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cpp_rational(a[i][j]);
    m[i][n] = cpp_rational(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const cpp_rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<cpp_rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

TEST(ExactSolveTest, MatchesRationalGauss) {
  Rng rng(3);
  int integral = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<IntRow> a(n, IntRow(n));
    for (auto& r : a) {
      for (auto& x : r) x = rng() % 9;
    }
    IntRow b(n);
    if (rep % 2 == 0) {
      // Planted integral solution.
      IntRow e(n);
      for (auto& x : e) x = rng() % 20;
      for (std::size_t i = 0; i < n; ++i) {
        b[i] = 0;
        for (std::size_t j = 0; j < n; ++j) b[i] += a[i][j] * e[j];
      }
    } else {
      for (auto& x : b) x = rng() % 200;
    }
    auto got = solve_integer_system(a, b);
    auto want = rational_solve(a, b);
    if (!want) {
      EXPECT_EQ(got.status, SolveStatus::singular);
      continue;
    }
    bool all_int = true;
    for (const auto& x : *want) all_int = all_int && denominator(x) == 1;
    if (!all_int) {
      EXPECT_EQ(got.status, SolveStatus::non_integral);
      continue;
    }
    ASSERT_EQ(got.status, SolveStatus::integral);
    ++integral;
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(cpp_int(got.x[j]), numerator((*want)[j]));
  }
  EXPECT_GT(integral, 100);
}

TEST(SolveExponentsTest, WorkedSystem) {
  std::vector<SubstitutionVector> R{{5, 2}, {2, 5}};
  std::vector<u64> d{47, 23};
  std::vector<std::pair<SubstitutionVector, u64>> all{{{5, 2}, 47}, {{2, 5}, 23}};
  auto sol = solve_exponents(R, d, {10, 10}, all);
  ASSERT_TRUE(sol.accepted());
  EXPECT_EQ(*sol.e, (ExponentVec{9, 1}));
}

TEST(SolveExponentsTest, IdentityRows) {
  std::vector<SubstitutionVector> R{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<u64> d{4, 0, 7};
  auto sol = solve_exponents(R, d, {8, 8, 8}, {});
  ASSERT_TRUE(sol.accepted());
  EXPECT_EQ(*sol.e, (ExponentVec{4, 0, 7}));
}

TEST(SolveExponentsTest, PerturbationRejected) {
  std::vector<SubstitutionVector> R{{5, 2}, {2, 5}};
  std::vector<std::pair<SubstitutionVector, u64>> all{{{5, 2}, 47}, {{2, 5}, 23}, {{3, 7}, 34}};
  {
    std::vector<u64> d{48, 23};
    auto sol = solve_exponents(R, d, {10, 10}, all);
    EXPECT_FALSE(sol.accepted());
    EXPECT_TRUE(sol.reason == Rejection::non_integral || sol.reason == Rejection::inconsistent);
  }
  {
    // Rows agree, a third entry does not.
    auto bad = all;
    bad[2].second = 35;
    std::vector<u64> d{47, 23};
    auto sol = solve_exponents(R, d, {10, 10}, bad);
    EXPECT_EQ(sol.reason, Rejection::inconsistent);
  }
}

TEST(SolveExponentsTest, OutOfRangeAndSingular) {
  std::vector<SubstitutionVector> R{{1, 0}, {0, 1}};
  std::vector<u64> d{10, 3};
  EXPECT_EQ(solve_exponents(R, d, {10, 10}, {}).reason, Rejection::out_of_range);
  // Negative solution: x + y = 1, x + 2y = 3 gives x = -1.
  std::vector<SubstitutionVector> N{{1, 1}, {1, 2}};
  std::vector<u64> dn{1, 3};
  EXPECT_EQ(solve_exponents(N, dn, {10, 10}, {}).reason, Rejection::out_of_range);
  std::vector<SubstitutionVector> S{{2, 4}, {1, 2}};
  EXPECT_EQ(solve_exponents(S, d, {10, 10}, {}).reason, Rejection::rank_deficient);
}

TEST(AssembleTest, Cases) {
  PrimeField F(101);
  EXPECT_TRUE(assemble({}, F, 2)->is_zero());
  std::vector<RecoveredTerm> dup{{F.from_uint(3), {1, 2}}, {F.from_uint(4), {1, 2}}};
  EXPECT_FALSE(assemble(dup, F, 2).has_value());
  auto f = testing::example_poly(F);
  std::vector<RecoveredTerm> three;
  for (std::size_t k = 0; k + 1 < f.size(); ++k) three.push_back({f.terms()[k].coeff, f.terms()[k].exps});
  EXPECT_EQ(assemble(three, F, 2)->size(), f.size() - 1);
}

// Full recovery from images using the components above.
std::optional<SparsePoly> recover_from(const std::vector<Image>& images, const SelectionParams& p,
                                       const PrimeField& F) {
  const std::size_t n = p.nvars();
  std::vector<RecoveredTerm> accepted;
  for (const auto& b : bucket_by_coefficient(images)) {
    if (b.ambiguous) return std::nullopt;
    std::vector<SubstitutionVector> S;
    std::vector<u64> degs;
    std::vector<std::pair<SubstitutionVector, u64>> all;
    for (const auto& e : b.entries) {
      S.push_back(images[e.image].s);
      degs.push_back(e.degree);
      all.emplace_back(images[e.image].s, e.degree);
    }
    auto idx = select_independent(S, p.mode, p.lambda, n);
    // Rank deficiency lies outside the ideal-diversity premise.
    if (!idx) return std::nullopt;
    std::vector<SubstitutionVector> R;
    std::vector<u64> d;
    for (auto i : *idx) {
      R.push_back(S[i]);
      d.push_back(degs[i]);
    }
    auto sol = solve_exponents(R, d, p.bounds, all);
    if (sol.accepted()) accepted.push_back({b.coeff, *sol.e});
  }
  return assemble(accepted, F, n);
}

TEST(SoundnessTest, CollisionFreeFamiliesRecoverScaledPolynomial) {
  PrimeField F(1000000007);
  Rng rng(4);
  int ok = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 2 + rep % 2;
    const u64 T = 2 + rng() % 6;
    DegreeBounds bounds(n, 12);
    auto f = random_sparse(F, bounds, T, rng);
    auto p = SelectionParams::for_interpolation(bounds, T);
    auto scaled = diversify(f, sample_alpha(F, n, 1, rng));
    std::set<u64> coeffs;
    for (const auto& t : scaled.terms()) coeffs.insert(t.coeff.v);
    if (coeffs.size() != scaled.size()) continue;
    std::vector<Image> images;
    std::set<SubstitutionVector> used;
    // Small bivariate prime ranges may hold fewer than nu collision-free pairs.
    for (int attempt = 0; attempt < 20000 && images.size() < p.nu; ++attempt) {
      auto s = sample_substitution(p, rng);
      if (used.count(s)) continue;
      auto sub = substitute(scaled, s);
      if (sub.collisions.sums != 0) continue;
      used.insert(s);
      images.push_back(Image{s, sub.image});
    }
    if (images.size() < p.nu) continue;
    auto got = recover_from(images, p, F);
    if (!got) continue;
    EXPECT_EQ(*got, scaled) << rep;
    ++ok;
  }
  EXPECT_GT(ok, 150);
}

}  // namespace
}  // namespace rkinterp
