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

#include <cstdio>
#include <mutex>
#include <string>
#include <sys/types.h>

#include "rkinterp/black_box.hpp"

namespace rkinterp::cli {

/// Black box backed by an external program speaking a line protocol: each
/// probe writes n space-separated decimals and a newline to the program's
/// stdin and reads one decimal line back. The child runs under /bin/sh -c
/// with RKINTERP_FIELD and RKINTERP_VARS set in its environment.
class SubprocessBlackBox final : public BlackBox {
 public:
  SubprocessBlackBox(const std::string& command, PrimeField field, std::size_t nvars);
  ~SubprocessBlackBox() override;
  SubprocessBlackBox(const SubprocessBlackBox&) = delete;
  SubprocessBlackBox& operator=(const SubprocessBlackBox&) = delete;

  const PrimeField& field() const override { return field_; }
  std::size_t nvars() const override { return nvars_; }
  bool concurrent() const override { return false; }

 protected:
  /// Throws std::runtime_error if the evaluator exits or answers garbage.
  Fe evaluate(std::span<const Fe> point) override;

 private:
  PrimeField field_;
  std::size_t nvars_;
  pid_t pid_ = -1;
  std::FILE* to_child_ = nullptr;
  std::FILE* from_child_ = nullptr;
  std::mutex mu_;
};

}  // namespace rkinterp::cli
