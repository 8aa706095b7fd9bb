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

#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>

#include "rkinterp/sparse_poly.hpp"

namespace rkinterp {

/// Opaque evaluator for an unknown polynomial. The interpolator sees f only
/// through probe(); every call increments the probe counter by one.
class BlackBox {
 public:
  virtual ~BlackBox() = default;

  Fe probe(std::span<const Fe> point) {
    probes_.fetch_add(1, std::memory_order_relaxed);
    return evaluate(point);
  }

  std::uint64_t probes() const { return probes_.load(std::memory_order_relaxed); }

  virtual const PrimeField& field() const = 0;
  virtual std::size_t nvars() const = 0;

  /// False if probe() must not be called from several threads at once.
  virtual bool concurrent() const { return true; }

 protected:
  virtual Fe evaluate(std::span<const Fe> point) = 0;

 private:
  std::atomic<std::uint64_t> probes_{0};
};

/// Hides a known polynomial behind the black-box contract.
class PolyBlackBox final : public BlackBox {
 public:
  explicit PolyBlackBox(SparsePoly f) : f_(std::move(f)) {}

  const PrimeField& field() const override { return f_.field(); }
  std::size_t nvars() const override { return f_.nvars(); }

 protected:
  Fe evaluate(std::span<const Fe> point) override { return f_.evaluate(point); }

 private:
  SparsePoly f_;
};

std::unique_ptr<BlackBox> blackbox_from_poly(SparsePoly f);

}  // namespace rkinterp
