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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rkinterp/sparse_poly.hpp"

namespace rkinterp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wire format, compact, keys in this order and terms in canonical order:
//   {"field":"<q>","vars":n,"terms":[{"coeff":"<c>","exps":[e1,...,en]},...]}

std::string to_json(const SparsePoly& f);

/// Coefficients may be any decimal integer and are reduced mod q.
/// Throws ParseError on malformed input, negative exponents or repeated
/// exponent vectors.
SparsePoly parse_poly(std::string_view text);

/// Also checks that the document's field and variable count match.
SparsePoly parse_poly(std::string_view text, const PrimeField& field, std::size_t nvars);

}  // namespace rkinterp
