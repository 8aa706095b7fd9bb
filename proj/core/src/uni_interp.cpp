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

#include "rkinterp/uni_interp.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rkinterp {

UniBox::UniBox(BlackBox& box, SubstitutionVector s, ScalingPoint alpha)
    : box_(box), s_(std::move(s)), alpha_(std::move(alpha)), point_(box.nvars()) {
  if (s_.size() != box_.nvars() || alpha_.size() != box_.nvars()) {
    throw std::invalid_argument("substitution and scaling must match the box dimension");
  }
}

Fe UniBox::probe(Fe beta) {
  const PrimeField& F = box_.field();
  for (std::size_t j = 0; j < s_.size(); ++j) {
    point_[j] = F.mul(alpha_.alpha()[j], F.pow(beta, s_[j]));
  }
  return box_.probe(point_);
}

namespace {

#if defined(__GNUC__) && defined(__x86_64__) && !defined(__clang__)
#define RKINTERP_CLONES __attribute__((target_clones("avx2", "default")))
#else
#define RKINTERP_CLONES
#endif

// Montgomery multiplication with R = 2^64 for odd q < 2^63.
class Montgomery {
 public:
  explicit Montgomery(u64 q) : q_(q) {
    u64 inv = q;  // Newton iteration for q^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - q * inv;
    neg_qinv_ = ~inv + 1;
    const unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % q;
    r2_ = static_cast<u64>((r * r) % q);
  }
  u64 reduce(unsigned __int128 t) const {
    const u64 m = static_cast<u64>(t) * neg_qinv_;
    const u64 r = static_cast<u64>((t + static_cast<unsigned __int128>(m) * q_) >> 64);
    return r >= q_ ? r - q_ : r;
  }
  /// a * b for a in normal form and b in Montgomery form.
  u64 mul(u64 a, u64 b_mont) const { return reduce(static_cast<unsigned __int128>(a) * b_mont); }
  u64 to_mont(u64 a) const { return reduce(static_cast<unsigned __int128>(a) * r2_); }

 private:
  u64 q_;
  u64 neg_qinv_ = 0;
  u64 r2_ = 0;
};

// a[i] <- a[i+1] - a[i] for i < len - 1.
template <typename W>
RKINTERP_CLONES void difference_pass(W* a, std::size_t len, W q) {
  for (std::size_t i = 0; i + 1 < len; ++i) {
    const W d = a[i + 1] - a[i];
    a[i] = a[i + 1] >= a[i] ? d : d + q;
  }
}

// out[j] <- in[j-1] - k in[j] for 1 <= j < len, q < 2^31, with Shoup's
// precomputed quotient kp = floor(k 2^32 / q).
RKINTERP_CLONES void shift_pass32(const std::uint32_t* __restrict in, std::uint32_t* __restrict out,
                                  std::size_t len, std::uint32_t k, std::uint32_t kp,
                                  std::uint32_t q) {
  for (std::size_t j = 1; j < len; ++j) {
    const std::uint32_t x = in[j];
    const auto hi = static_cast<std::uint32_t>((static_cast<u64>(x) * kp) >> 32);
    std::uint32_t t = x * k - hi * q;  // in [0, 2q)
    t = t >= q ? t - q : t;
    const std::uint32_t a = in[j - 1];
    out[j] = a >= t ? a - t : a + q - t;
  }
}

void shift_pass64(const u64* __restrict in, u64* __restrict out, std::size_t len, u64 km,
                  const Montgomery& mont, u64 q) {
  for (std::size_t j = 1; j < len; ++j) {
    const u64 t = mont.mul(in[j], km);
    const u64 a = in[j - 1];
    out[j] = a >= t ? a - t : a + q - t;
  }
}

/// Monomial coefficients of the polynomial of degree <= N through
/// (0, y_0), ..., (N, y_N). W is the word type holding residues.
template <typename W>
std::vector<Fe> newton_to_monomial(const PrimeField& F, std::vector<W> a) {
  const u64 q = F.modulus();
  const std::size_t N = a.size() - 1;

  // Forward differences on the nodes 0..N: c_k = Delta^k y_0 / k!.
  std::vector<Fe> c(N + 1);
  c[0] = Fe{a[0]};
  for (std::size_t k = 1; k <= N; ++k) {
    difference_pass<W>(a.data(), N + 2 - k, static_cast<W>(q));
    c[k] = Fe{a[0]};
  }
  // 1/k = -(q/k) * 1/(q mod k) for k < q.
  std::vector<Fe> inv(N + 1);
  if (N >= 1) inv[1] = F.one();
  for (std::size_t k = 2; k <= N; ++k) inv[k] = F.neg(F.mul(F.from_uint(q / k), inv[q % k]));
  Fe inv_fact = F.one();
  for (std::size_t k = 1; k <= N; ++k) {
    inv_fact = F.mul(inv_fact, inv[k]);
    c[k] = F.mul(c[k], inv_fact);
  }

  // Horner in the Newton basis, innermost factor first:
  // p = c_0 + z (c_1 + (z - 1)(c_2 + ...)), each step p <- p (z - k) + c_k.
  std::vector<W> p(N + 1, 0), next(N + 1, 0);
  p[0] = static_cast<W>(c[N].v);
  std::size_t len = 1;
  const std::optional<Montgomery> mont =
      sizeof(W) == 8 ? std::optional<Montgomery>(Montgomery(q)) : std::nullopt;
  for (std::size_t k = N; k-- > 0;) {
    const Fe kf = F.from_uint(k);
    next[len] = p[len - 1];
    if constexpr (sizeof(W) == 4) {
      const auto kp = static_cast<std::uint32_t>((static_cast<u64>(k) << 32) / q);
      shift_pass32(p.data(), next.data(), len, static_cast<std::uint32_t>(k), kp,
                   static_cast<std::uint32_t>(q));
    } else {
      shift_pass64(p.data(), next.data(), len, mont->to_mont(k), *mont, q);
    }
    next[0] = static_cast<W>(F.sub(c[k], F.mul(kf, Fe{p[0]})).v);
    ++len;
    std::swap(p, next);
  }
  std::vector<Fe> coeffs(N + 1);
  for (std::size_t i = 0; i <= N; ++i) coeffs[i] = Fe{p[i]};
  return coeffs;
}

}  // namespace

UniPoly dense_interpolate(UniBox& box, u64 deg_bound) {
  const PrimeField& F = box.field();
  const u64 q = F.modulus();
  if (q <= deg_bound) {
    throw FieldTooSmall("dense interpolation of degree " + std::to_string(deg_bound) +
                        " needs q > " + std::to_string(deg_bound) + ", have q = " +
                        std::to_string(q));
  }
  const std::size_t N = static_cast<std::size_t>(deg_bound);
  if (q == 2) {
    // N <= 1: p = y_0 + (y_1 - y_0) z.
    std::vector<Fe> p{box.probe(F.zero())};
    if (N == 1) p.push_back(F.sub(box.probe(F.one()), p[0]));
    return UniPoly::from_dense(F, p);
  }
  if (q < (u64{1} << 31)) {
    std::vector<std::uint32_t> y(N + 1);
    for (std::size_t i = 0; i <= N; ++i) y[i] = static_cast<std::uint32_t>(box.probe(F.from_uint(i)).v);
    return UniPoly::from_dense(F, newton_to_monomial(F, std::move(y)));
  }
  std::vector<u64> y(N + 1);
  for (std::size_t i = 0; i <= N; ++i) y[i] = box.probe(F.from_uint(i)).v;
  return UniPoly::from_dense(F, newton_to_monomial(F, std::move(y)));
}

UniPoly DenseBackend::interpolate(UniBox& box, u64 deg_bound, u64 /*sparsity*/) const {
  return dense_interpolate(box, deg_bound);
}

UniPoly OracleBackend::interpolate(UniBox& box, u64 deg_bound, u64 /*sparsity*/) const {
  if (!(known_.field() == box.field())) {
    throw std::invalid_argument("oracle polynomial is over a different field");
  }
  auto sub = substitute(diversify(known_, box.scaling()), box.substitution());
  return UniPoly::from_terms(box.field(), sub.image.terms(), deg_bound);
}

bool spot_check(UniBox& box, const UniPoly& g, Rng& rng, int points) {
  const PrimeField& F = box.field();
  std::uniform_int_distribution<u64> dist(1, F.modulus() - 1);
  bool ok = true;
  for (int i = 0; i < points; ++i) {
    const Fe beta{dist(rng)};
    if (box.probe(beta) != g.evaluate(beta)) ok = false;
  }
  return ok;
}

}  // namespace rkinterp
