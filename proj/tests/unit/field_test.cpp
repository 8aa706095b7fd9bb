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

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "rkinterp/field.hpp"
#include "rkinterp/primes.hpp"
#include "test_util.hpp"

namespace rkinterp {
namespace {

TEST(PrimeFieldTest, SmallFieldExamples) {
  PrimeField F(7);
  EXPECT_EQ(F.add(Fe{5}, Fe{4}), Fe{2});
  EXPECT_EQ(F.pow(Fe{3}, 6), Fe{1});

  // Exhaustive search for the inverse of 3.
  u64 expected = 0;
  for (u64 x = 1; x < 7; ++x) {
    if (3 * x % 7 == 1) expected = x;
  }
  EXPECT_EQ(expected, 5u);
  EXPECT_EQ(F.inv(Fe{3}), Fe{expected});
}

TEST(PrimeFieldTest, InverseOfZeroThrows) {
  PrimeField F(7);
  EXPECT_THROW(F.inv(Fe{0}), std::domain_error);
}

TEST(PrimeFieldTest, RejectsCompositeModulus) {
  EXPECT_THROW(PrimeField(21), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_THROW(PrimeField(0), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(PrimeFieldTest, InverseAndFermatHoldForEveryUnit) {
  for (u64 q : {2ULL, 3ULL, 101ULL, 8191ULL}) {
    PrimeField F(q);
    for (u64 a = 1; a < q; ++a) {
      EXPECT_EQ(F.mul(Fe{a}, F.inv(Fe{a})), F.one()) << "q=" << q << " a=" << a;
      EXPECT_EQ(F.pow(Fe{a}, q - 1), F.one());
    }
  }
}

TEST(PrimeFieldTest, LargeModulusAgreesWithWideArithmetic) {
  const u64 q = 9223372036854775783ULL;  // largest prime below 2^63
  PrimeField F(q);
  Rng rng(7);
  std::uniform_int_distribution<u64> dist(0, q - 1);
  for (int i = 0; i < 2000; ++i) {
    const u64 a = dist(rng), b = dist(rng);
    const auto wide = static_cast<unsigned __int128>(a) * b % q;
    EXPECT_EQ(F.mul(Fe{a}, Fe{b}).v, static_cast<u64>(wide));
    EXPECT_EQ(F.add(Fe{a}, Fe{b}).v, static_cast<u64>((static_cast<unsigned __int128>(a) + b) % q));
    EXPECT_EQ(F.add(F.sub(Fe{a}, Fe{b}), Fe{b}), Fe{a});
    if (a != 0) EXPECT_EQ(F.mul(Fe{a}, F.inv(Fe{a})), F.one());
  }
}

TEST(PrimeFieldTest, MultiplicationAgreesWithWideArithmeticAcrossSizes) {
  Rng rng(8);
  std::vector<u64> moduli{3, 101, 65537, 4294967291ULL, 1000000000000000003ULL,
                          4611686018427387847ULL, 4611686018427388039ULL};
  for (int i = 0; i < 40; ++i) {
    moduli.push_back(next_prime(u64{1} << (2 + i % 60)) );
  }
  for (u64 q : moduli) {
    PrimeField F(q);
    std::uniform_int_distribution<u64> dist(0, q - 1);
    for (int i = 0; i < 3000; ++i) {
      u64 a = dist(rng), b = dist(rng);
      if (i < 4) {
        a = q - 1 - (i & 1);
        b = q - 1 - (i >> 1);
      }
      const auto wide = static_cast<u64>(static_cast<unsigned __int128>(a) * b % q);
      ASSERT_EQ(F.mul(Fe{a}, Fe{b}).v, wide) << "q=" << q << " a=" << a << " b=" << b;
    }
  }
}

TEST(PrimeFieldTest, DecimalAndSignedConversion) {
  PrimeField F(101);
  EXPECT_EQ(F.from_int(-2), Fe{99});
  EXPECT_EQ(F.from_decimal("-1"), Fe{100});
  EXPECT_EQ(F.from_decimal("202"), Fe{0});
  // 10^30 mod 101: 10^2 = -1, so 10^30 = (-1)^15 = -1.
  EXPECT_EQ(F.from_decimal("1000000000000000000000000000000"), Fe{100});
  EXPECT_THROW(F.from_decimal("12a"), std::invalid_argument);
  EXPECT_THROW(F.from_decimal("-"), std::invalid_argument);
}

TEST(IsPrimeTest, Examples) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(21));
  EXPECT_TRUE(testing::trial_division_prime(8191));
  EXPECT_TRUE(is_prime(8191));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(IsPrimeTest, AgreesWithTrialDivisionUpToAMillion) {
  // Sieve as the reference; trial division to a million is slow per call.
  const u64 limit = 1000000;
  std::vector<bool> composite(limit + 1, false);
  composite[0] = composite[1] = true;
  for (u64 p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (u64 k = p * p; k <= limit; k += p) composite[k] = true;
  }
  for (u64 m = 0; m <= limit; ++m) ASSERT_EQ(is_prime(m), !composite[m]) << m;
}

TEST(IsPrimeTest, StrongPseudoprimesAndLargeValues) {
  EXPECT_FALSE(is_prime(3215031751ULL));           // spsp to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ULL));  // spsp to bases up to 23
  EXPECT_FALSE(is_prime(18446744073709551615ULL));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_TRUE(is_prime(2305843009213693951ULL));  // 2^61 - 1
}

TEST(LeastPrimeTest, Examples) {
  EXPECT_EQ(least_prime_geq(2), 2u);
  // 14, 15 and 16 are composite.
  EXPECT_FALSE(testing::trial_division_prime(14));
  EXPECT_FALSE(testing::trial_division_prime(15));
  EXPECT_FALSE(testing::trial_division_prime(16));
  EXPECT_EQ(least_prime_geq(13.34), 17u);
  EXPECT_EQ(least_prime_geq(16), 17u);
  EXPECT_EQ(least_prime_geq(0), 2u);
  EXPECT_EQ(least_prime_geq(17), 17u);
  EXPECT_EQ(next_prime(100), 101u);
}

TEST(SamplePrimeTest, BertrandInterval) {
  const auto expected = testing::trial_division_primes(21, 41);
  EXPECT_EQ(expected, (std::vector<u64>{23, 29, 31, 37, 41}));
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    u64 p = sample_prime_in(20.5, 41, rng);
    ASSERT_TRUE(is_prime(p));
    ASSERT_GE(p, 21u);
    ASSERT_LE(p, 41u);
  }
}

TEST(SamplePrimeTest, SingletonRange) {
  Rng rng(2);
  EXPECT_EQ(sample_prime_in(2, 2, rng), 2u);
}

TEST(SamplePrimeTest, EmptyRangeThrows) {
  Rng rng(3);
  EXPECT_THROW(sample_prime_in(24, 28, rng), std::invalid_argument);
  EXPECT_THROW(sample_prime_in(30, 20, rng), std::invalid_argument);
}

TEST(SamplePrimeTest, CoversEveryPrimeRoughlyUniformly) {
  const auto expected = testing::trial_division_primes(100, 200);
  ASSERT_EQ(expected.size(), 21u);
  EXPECT_EQ(primes_in(100, 200), expected);
  Rng rng(4);
  std::map<u64, int> counts;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    u64 p = sample_prime_in(100, 200, rng);
    ASSERT_TRUE(is_prime(p));
    ASSERT_GE(p, 100u);
    ASSERT_LE(p, 200u);
    ++counts[p];
  }
  ASSERT_EQ(counts.size(), expected.size());
  // Mean 476; 6 sigma is about 127.
  for (const auto& [p, c] : counts) {
    EXPECT_GT(c, 476 - 130) << p;
    EXPECT_LT(c, 476 + 130) << p;
  }
}

}  // namespace
}  // namespace rkinterp
