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

#include "rkinterp/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rkinterp/diversify.hpp"
#include "rkinterp/parallel.hpp"
#include "rkinterp/poly_json.hpp"
#include "rkinterp/primes.hpp"
#include "rkinterp/selection.hpp"

namespace rkinterp {
namespace {

/// Counts the probes of one call independently of other users of `inner`.
class CountingBox final : public BlackBox {
 public:
  explicit CountingBox(BlackBox& inner) : inner_(inner) {}
  const PrimeField& field() const override { return inner_.field(); }
  std::size_t nvars() const override { return inner_.nvars(); }
  bool concurrent() const override { return inner_.concurrent(); }

 protected:
  Fe evaluate(std::span<const Fe> point) override { return inner_.probe(point); }

 private:
  BlackBox& inner_;
};

std::vector<std::size_t> active_variables(const DegreeBounds& bounds) {
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    if (bounds[j] > 1) active.push_back(j);
  }
  return active;
}

/// Re-inserts zero exponents for the variables that were dropped.
SparsePoly embed(const SparsePoly& reduced, const std::vector<std::size_t>& active,
                 std::size_t nvars) {
  std::vector<Term> terms;
  terms.reserve(reduced.size());
  for (const auto& t : reduced.terms()) {
    ExponentVec e(nvars, 0);
    for (std::size_t k = 0; k < active.size(); ++k) e[active[k]] = t.exps[k];
    terms.push_back(Term{t.coeff, std::move(e)});
  }
  return SparsePoly::from_terms(reduced.field(), nvars, std::move(terms));
}

template <typename T>
std::vector<T> expand(const std::vector<T>& reduced, const std::vector<std::size_t>& active,
                      std::size_t nvars, T fill) {
  std::vector<T> full(nvars, fill);
  for (std::size_t k = 0; k < active.size(); ++k) full[active[k]] = reduced[k];
  return full;
}

RunReport fail(RunReport report, std::string why) {
  report.result.reset();
  report.failure = std::move(why);
  return report;
}

RunReport interpolate_constant(BlackBox& box) {
  RunReport report;
  const PrimeField& F = box.field();
  std::vector<Fe> ones(box.nvars(), F.one());
  const Fe c = box.probe(ones);
  report.result = SparsePoly::from_terms(F, box.nvars(), {Term{c, ExponentVec(box.nvars(), 0)}});
  return report;
}

// Single active variable: the identity substitution already is injective.
RunReport interpolate_univariate(BlackBox& box, const InterpolationConfig& cfg, std::size_t var,
                                 const UnivariateBackend& backend) {
  const PrimeField& F = box.field();
  const std::size_t n = cfg.nvars();
  SubstitutionVector s(n, 0);
  s[var] = 1;
  RunReport report;
  report.nu = 1;
  report.deg_bound = cfg.bounds[var] - 1;
  UniBox ub(box, s, ScalingPoint::identity(F, n));
  UniPoly g = backend.interpolate(ub, report.deg_bound, cfg.terms);
  report.images.push_back(ImageInfo{s, g.degree()});
  if (g.size() > cfg.terms) {
    return fail(std::move(report), "univariate image has more than T terms");
  }
  std::vector<Term> terms;
  for (const auto& t : g.terms()) {
    ExponentVec e(n, 0);
    e[var] = t.degree;
    terms.push_back(Term{t.coeff, std::move(e)});
  }
  report.result = SparsePoly::from_terms(F, n, std::move(terms));
  return report;
}

RunReport interpolate_general(BlackBox& box, const InterpolationConfig& cfg,
                              const std::vector<std::size_t>& active, Rng& rng,
                              const UnivariateBackend& backend) {
  const PrimeField& F = box.field();
  const std::size_t n = cfg.nvars();
  const std::size_t nr = active.size();
  DegreeBounds reduced_bounds(nr);
  for (std::size_t k = 0; k < nr; ++k) reduced_bounds[k] = cfg.bounds[active[k]];

  const auto params = SelectionParams::for_interpolation(reduced_bounds, cfg.terms);
  const auto family = sample_family(params, rng);

  RunReport report;
  report.nu = params.nu;
  for (const auto& s : family) {
    report.deg_bound = std::max(report.deg_bound, max_image_degree(reduced_bounds, s));
  }
  const u64 max_degree = *std::max_element(reduced_bounds.begin(), reduced_bounds.end());
  const auto div = required_field_size(nr, max_degree, cfg.terms, params.nu,
                                       InterpolationConfig::kDiversityMu);
  const ScalingPoint alpha = sample_alpha(F, nr, div.q_min, rng);
  if (F.modulus() <= report.deg_bound) {
    throw FieldTooSmall("image degree bound " + std::to_string(report.deg_bound) +
                        " needs q > " + std::to_string(report.deg_bound));
  }

  const ScalingPoint full_alpha(F, expand(alpha.alpha(), active, n, F.one()));
  std::vector<Image> images(family.size(), Image{{}, UniPoly(F)});
  const unsigned jobs = box.concurrent() ? cfg.jobs : 1;
  parallel_for(family.size(), jobs, [&](std::size_t i) {
    UniBox ub(box, expand(family[i], active, n, u64{0}), full_alpha);
    images[i] = Image{family[i], backend.interpolate(ub, report.deg_bound, cfg.terms)};
  });
  bool any_nonzero = false;
  for (const auto& img : images) {
    report.images.push_back(ImageInfo{expand(img.s, active, n, u64{0}), img.g.degree()});
    any_nonzero = any_nonzero || !img.g.is_zero();
  }

  const auto buckets = bucket_by_coefficient(images);
  std::vector<RecoveredTerm> accepted;
  for (const auto& bucket : buckets) {
    if (bucket.ambiguous) {
      ++report.buckets.ambiguous;
      continue;
    }
    std::vector<SubstitutionVector> S;
    std::vector<std::pair<SubstitutionVector, u64>> all;
    for (const auto& entry : bucket.entries) {
      S.push_back(images[entry.image].s);
      all.emplace_back(images[entry.image].s, entry.degree);
    }
    const auto picked = select_independent(S, params.mode, params.lambda, nr);
    if (!picked) {
      ++report.buckets.rejected[Rejection::rank_deficient];
      continue;
    }
    std::vector<SubstitutionVector> rows;
    std::vector<u64> degrees;
    for (std::size_t idx : *picked) {
      rows.push_back(S[idx]);
      degrees.push_back(bucket.entries[idx].degree);
    }
    auto sol = solve_exponents(rows, degrees, reduced_bounds, all);
    if (!sol.accepted()) {
      ++report.buckets.rejected[sol.reason];
      continue;
    }
    ++report.buckets.accepted;
    accepted.push_back(RecoveredTerm{bucket.coeff, std::move(*sol.e)});
  }

  if (report.buckets.ambiguous > 0) {
    return fail(std::move(report), "a coefficient repeats inside one image");
  }
  if (buckets.empty() && any_nonzero) {
    return fail(std::move(report), "no coefficient appears in half of the images");
  }
  auto assembled = assemble(accepted, F, nr);
  if (!assembled) return fail(std::move(report), "two buckets produced the same exponent");
  if (assembled->size() > cfg.terms) {
    return fail(std::move(report), "recovered more than T terms");
  }
  report.result = embed(undiversify(*assembled, alpha), active, n);
  return report;
}

}  // namespace

void InterpolationConfig::validate() const {
  if (terms < 1) throw std::invalid_argument("term bound T must be at least 1");
  if (bounds.empty()) throw std::invalid_argument("need at least one variable");
  for (u64 b : bounds) {
    if (b < 1) throw std::invalid_argument("degree bounds must be at least 1");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
}

std::size_t BucketStats::rejected_total() const {
  std::size_t total = 0;
  for (const auto& [reason, count] : rejected) total += count;
  return total;
}

RunReport trivial_T1(BlackBox& box, const DegreeBounds& bounds, const UnivariateBackend& backend) {
  const PrimeField& F = box.field();
  const std::size_t n = bounds.size();
  if (n != box.nvars()) throw std::invalid_argument("degree bounds do not match the box");
  CountingBox counted(box);
  RunReport report;
  report.nu = n;
  std::optional<Fe> coeff;
  bool saw_zero = false;
  ExponentVec e(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    SubstitutionVector s(n, 0);
    s[j] = 1;
    const u64 N = bounds[j] - 1;
    report.deg_bound = std::max(report.deg_bound, N);
    UniBox ub(counted, s, ScalingPoint::identity(F, n));
    UniPoly g = backend.interpolate(ub, N, 1);
    report.images.push_back(ImageInfo{s, g.degree()});
    if (g.size() > 1) {
      report.probes = counted.probes();
      return fail(std::move(report), "image has several terms; the box is not 1-sparse");
    }
    if (g.is_zero()) {
      saw_zero = true;
      continue;
    }
    if (coeff && *coeff != g.terms()[0].coeff) {
      report.probes = counted.probes();
      return fail(std::move(report), "images disagree on the coefficient");
    }
    coeff = g.terms()[0].coeff;
    e[j] = g.terms()[0].degree;
  }
  report.probes = counted.probes();
  if (coeff && saw_zero) return fail(std::move(report), "some images vanish and others do not");
  if (!coeff) {
    report.result = SparsePoly(F, n);
  } else {
    report.result = SparsePoly::from_terms(F, n, {Term{*coeff, e}});
  }
  return report;
}

RunReport interpolate_once(BlackBox& box, const InterpolationConfig& cfg, Rng& rng,
                           const UnivariateBackend& backend) {
  cfg.validate();
  if (cfg.nvars() != box.nvars()) {
    throw std::invalid_argument("config has " + std::to_string(cfg.nvars()) +
                                " variables, box has " + std::to_string(box.nvars()));
  }
  if (cfg.terms == 1) return trivial_T1(box, cfg.bounds, backend);

  CountingBox counted(box);
  const auto active = active_variables(cfg.bounds);
  RunReport report;
  if (active.empty()) {
    report = interpolate_constant(counted);
  } else if (active.size() == 1) {
    report = interpolate_univariate(counted, cfg, active[0], backend);
  } else {
    report = interpolate_general(counted, cfg, active, rng, backend);
  }
  report.probes = counted.probes();
  return report;
}

u64 amplification_runs(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const double v = 18.0 * std::log(1.0 / epsilon);
  double c = std::ceil(v);
  if (c - v > 1.0 - 1e-9) c -= 1.0;
  return static_cast<u64>(std::max(1.0, c));
}

RunReport interpolate_whp(BlackBox& box, const InterpolationConfig& cfg,
                          const UnivariateBackend& backend) {
  cfg.validate();
  const u64 runs = amplification_runs(cfg.epsilon);
  std::vector<RunReport> reports(runs);
  InterpolationConfig inner = cfg;
  // Parallelism goes to the runs; each run is sequential inside.
  inner.jobs = 1;
  const unsigned jobs = box.concurrent() ? cfg.jobs : 1;
  parallel_for(runs, jobs, [&](std::size_t r) {
    Rng rng(derive_seed(cfg.seed, r));
    reports[r] = interpolate_once(box, inner, rng, backend);
  });

  std::unordered_map<std::string, std::pair<u64, std::size_t>> votes;  // count, first run
  VoteTally tally;
  tally.runs = runs;
  u64 probes = 0;
  for (std::size_t r = 0; r < reports.size(); ++r) {
    probes += reports[r].probes;
    if (!reports[r].ok()) {
      ++tally.failed_runs;
      continue;
    }
    auto [it, inserted] = votes.try_emplace(to_json(*reports[r].result), 0, r);
    ++it->second.first;
  }
  tally.distinct_candidates = votes.size();
  std::optional<std::size_t> winner;
  for (const auto& [key, cv] : votes) {
    if (cv.first > tally.winner_votes ||
        (cv.first == tally.winner_votes && winner && cv.second < *winner)) {
      tally.winner_votes = cv.first;
      winner = cv.second;
    }
  }

  RunReport out;
  if (winner && 2 * tally.winner_votes > runs) {
    out = reports[*winner];
  } else {
    out = reports.front();
    out.result.reset();
    out.failure = "no candidate won a strict majority of " + std::to_string(runs) + " runs";
  }
  out.probes = probes;
  out.vote = tally;
  return out;
}

u64 required_modulus(const DegreeBounds& bounds, u64 T) {
  DegreeBounds reduced;
  for (u64 b : bounds) {
    if (b > 1) reduced.push_back(b);
  }
  if (T <= 1 || reduced.size() <= 1) return 0;
  const auto params = SelectionParams::for_interpolation(reduced, T);
  const u64 D = *std::max_element(reduced.begin(), reduced.end());
  return required_field_size(reduced.size(), D, T, params.nu, InterpolationConfig::kDiversityMu)
      .q_min;
}

u64 auto_field_modulus(const DegreeBounds& bounds, u64 T) {
  DegreeBounds reduced;
  for (u64 b : bounds) {
    if (b > 1) reduced.push_back(b);
  }
  u64 need = 3;
  const u64 max_degree = reduced.empty() ? 1 : *std::max_element(reduced.begin(), reduced.end());
  need = std::max(need, max_degree + 1);
  if (T > 1 && reduced.size() > 1) {
    const auto params = SelectionParams::for_interpolation(reduced, T);
    need = std::max(need, required_modulus(bounds, T));
    need = std::max(need, params.family_degree_bound() + 2);
  }
  return next_prime(need);
}

}  // namespace rkinterp
