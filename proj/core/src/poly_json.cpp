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

#include "rkinterp/poly_json.hpp"

#include <charconv>

#include "json.hpp"

namespace rkinterp {
namespace {

using ojson = nlohmann::ordered_json;

u64 parse_u64(const std::string& s, const char* what) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("invalid ") + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

std::string to_json(const SparsePoly& f) {
  ojson doc;
  doc["field"] = std::to_string(f.field().modulus());
  doc["vars"] = f.nvars();
  ojson terms = ojson::array();
  for (const auto& t : f.terms()) {
    ojson jt;
    jt["coeff"] = std::to_string(t.coeff.v);
    jt["exps"] = t.exps;
    terms.push_back(std::move(jt));
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

SparsePoly parse_poly(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("field") || !doc.contains("vars") ||
      !doc.contains("terms")) {
    throw ParseError("polynomial JSON needs \"field\", \"vars\" and \"terms\"");
  }
  const auto& jfield = doc["field"];
  u64 q = 0;
  if (jfield.is_string()) {
    q = parse_u64(jfield.get<std::string>(), "field modulus");
  } else if (jfield.is_number_unsigned()) {
    q = jfield.get<u64>();
  } else {
    throw ParseError("\"field\" must be a decimal string");
  }
  std::optional<PrimeField> field;
  try {
    field.emplace(q);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (!doc["vars"].is_number_unsigned()) throw ParseError("\"vars\" must be a nonnegative integer");
  const auto nvars = doc["vars"].get<std::size_t>();
  if (!doc["terms"].is_array()) throw ParseError("\"terms\" must be an array");

  std::vector<Term> terms;
  for (const auto& jt : doc["terms"]) {
    if (!jt.is_object() || !jt.contains("coeff") || !jt.contains("exps")) {
      throw ParseError("each term needs \"coeff\" and \"exps\"");
    }
    Term t;
    const auto& jc = jt["coeff"];
    try {
      if (jc.is_string()) {
        t.coeff = field->from_decimal(jc.get<std::string>());
      } else if (jc.is_number_integer()) {
        t.coeff = field->from_int(jc.get<i64>());
      } else {
        throw ParseError("\"coeff\" must be a decimal string");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (!jt["exps"].is_array()) throw ParseError("\"exps\" must be an array");
    for (const auto& je : jt["exps"]) {
      if (!je.is_number_integer()) throw ParseError("exponents must be integers");
      if (je.is_number_unsigned()) {
        t.exps.push_back(je.get<u64>());
      } else if (je.get<i64>() < 0) {
        throw ParseError("negative exponent " + std::to_string(je.get<i64>()));
      } else {
        t.exps.push_back(static_cast<u64>(je.get<i64>()));
      }
    }
    if (t.exps.size() != nvars) {
      throw ParseError("term has " + std::to_string(t.exps.size()) + " exponents, expected " +
                       std::to_string(nvars));
    }
    terms.push_back(std::move(t));
  }
  try {
    return SparsePoly::from_terms(*field, nvars, std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SparsePoly parse_poly(std::string_view text, const PrimeField& field, std::size_t nvars) {
  SparsePoly f = parse_poly(text);
  if (!(f.field() == field)) {
    throw ParseError("polynomial is over F_" + std::to_string(f.field().modulus()) +
                     ", expected F_" + std::to_string(field.modulus()));
  }
  if (f.nvars() != nvars) {
    throw ParseError("polynomial has " + std::to_string(f.nvars()) + " variables, expected " +
                     std::to_string(nvars));
  }
  return f;
}

}  // namespace rkinterp
