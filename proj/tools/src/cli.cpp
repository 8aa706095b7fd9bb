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

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "rkinterp/interpolate.hpp"
#include "rkinterp/kronecker.hpp"
#include "rkinterp/parallel.hpp"
#include "rkinterp/poly_json.hpp"
#include "rkinterp/primes.hpp"
#include "rkinterp/selection.hpp"
#include "subprocess_box.hpp"

namespace rkinterp::cli {
namespace {

using json = nlohmann::ordered_json;

/// Bad input detected after flag parsing; maps to kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + out_path + "'");
  f << text;
}

DegreeBounds expand_bounds(const std::vector<u64>& degrees, std::size_t n) {
  if (degrees.size() == 1) return DegreeBounds(n, degrees[0]);
  if (degrees.size() != n) {
    throw UsageError("--degree takes one value or one per variable (" + std::to_string(n) +
                     "), got " + std::to_string(degrees.size()));
  }
  return degrees;
}

// Symmetric representative in (-q/2, q/2].
i64 centered(Fe c, u64 q) {
  return c.v > q / 2 ? -static_cast<i64>(q - c.v) : static_cast<i64>(c.v);
}

SparsePoly lift(const SparsePoly& f, const PrimeField& to) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    terms.push_back(Term{to.from_int(centered(t.coeff, f.field().modulus())), t.exps});
  }
  return SparsePoly::from_terms_combining(to, f.nvars(), std::move(terms));
}

json poly_value(const SparsePoly& f) { return json::parse(to_json(f)); }

u64 entropy_seed() {
  std::random_device rd;
  return (static_cast<u64>(rd()) << 32) ^ rd();
}

template <typename T>
void require_positive(const std::vector<T>& values, const char* flag) {
  for (T v : values) {
    if (!(v > 0)) throw UsageError(std::string(flag) + " values must be positive");
  }
}

// ---------------------------------------------------------------- interpolate

struct InterpolateArgs {
  std::string in, eval, out, backend = "dense";
  std::size_t vars = 0;
  u64 terms = 0;
  std::vector<u64> degree;
  std::optional<u64> field;
  std::optional<double> epsilon;
  std::optional<u64> seed;
  unsigned jobs = 1;
};

json run_report(const RunReport& r, const std::optional<SparsePoly>& poly) {
  json images = json::array();
  for (const auto& img : r.images) {
    json d = img.degree ? json(*img.degree) : json(nullptr);
    images.push_back({{"s", img.s}, {"degree", d}});
  }
  json rejected = json::object();
  for (const auto& [reason, count] : r.buckets.rejected) rejected[to_string(reason)] = count;
  json j;
  j["ok"] = r.ok();
  j["poly"] = poly ? poly_value(*poly) : json(nullptr);
  j["probes"] = r.probes;
  j["images"] = std::move(images);
  j["nu"] = r.nu;
  j["deg_bound"] = r.deg_bound;
  j["buckets"] = {{"accepted", r.buckets.accepted},
                  {"ambiguous", r.buckets.ambiguous},
                  {"rejected", std::move(rejected)}};
  if (r.vote) {
    j["vote"] = {{"runs", r.vote->runs},
                 {"winner_votes", r.vote->winner_votes},
                 {"failed_runs", r.vote->failed_runs},
                 {"distinct_candidates", r.vote->distinct_candidates}};
  }
  if (!r.ok()) j["failure"] = r.failure;
  return j;
}

int cmd_interpolate(const InterpolateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.in.empty() == a.eval.empty()) throw UsageError("give exactly one of --in and --eval");
  if (a.backend == "oracle" && a.in.empty()) throw UsageError("--backend oracle needs --in");
  const DegreeBounds bounds = expand_bounds(a.degree, a.vars);

  InterpolationConfig cfg;
  cfg.bounds = bounds;
  cfg.terms = a.terms;
  cfg.jobs = a.jobs;
  if (a.epsilon) cfg.epsilon = *a.epsilon;
  cfg.seed = a.seed ? *a.seed : entropy_seed();
  if (!a.seed) err << "seed: " << cfg.seed << "\n";
  cfg.validate();

  std::optional<SparsePoly> input;
  std::optional<PrimeField> home;  // field the answer is reported in
  u64 q = 0;
  if (!a.in.empty()) {
    SparsePoly f = parse_poly(read_file(a.in));
    if (f.nvars() != a.vars) {
      throw UsageError("input has " + std::to_string(f.nvars()) + " variables, --vars is " +
                       std::to_string(a.vars));
    }
    f.check_bounds(bounds);
    if (f.size() > a.terms) {
      throw UsageError("input has " + std::to_string(f.size()) + " terms, more than --terms");
    }
    if (a.field) {
      q = *a.field;
    } else {
      q = std::max(auto_field_modulus(bounds, a.terms), f.field().modulus());
      home = f.field();
    }
    input = std::move(f);
  } else {
    q = a.field ? *a.field : auto_field_modulus(bounds, a.terms);
  }
  const PrimeField F(q);

  std::unique_ptr<BlackBox> box;
  std::optional<SparsePoly> hidden;
  if (input) {
    hidden = F == input->field() ? *input : lift(*input, F);
    box = blackbox_from_poly(*hidden);
  } else {
    box = std::make_unique<SubprocessBlackBox>(a.eval, F, a.vars);
  }

  std::unique_ptr<UnivariateBackend> backend;
  if (a.backend == "oracle") {
    backend = std::make_unique<OracleBackend>(*hidden);
  } else {
    backend = std::make_unique<DenseBackend>();
  }

  RunReport report;
  if (a.epsilon) {
    report = interpolate_whp(*box, cfg, *backend);
  } else {
    Rng rng(derive_seed(cfg.seed, 0));
    report = interpolate_once(*box, cfg, rng, *backend);
  }

  std::optional<SparsePoly> answer = report.result;
  if (answer && home && !(*home == F)) answer = lift(*answer, *home);
  json j = run_report(report, answer);
  j["field"] = std::to_string(F.modulus());
  j["seed"] = cfg.seed;
  emit(j.dump() + "\n", a.out, out);
  return report.ok() ? kOk : kFailure;
}

// -------------------------------------------------------------- collide-stats

struct GridArgs {
  std::vector<std::size_t> vars;
  std::vector<u64> terms, degree;
  std::vector<double> mu{0.25};
  int trials = 1000;
  std::optional<u64> seed;
  unsigned jobs = 1;
  std::string format = "csv", out;
  bool run = false;
};

/// Writes rows as CSV (header from the first row's keys) or {"rows": [...]}.
std::string render(const std::vector<json>& rows, const std::string& format) {
  if (format == "json") return json{{"rows", rows}}.dump() + "\n";
  std::ostringstream ss;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [key, v] : rows.front().items()) {
    ss << (first ? "" : ",") << key;
    first = false;
  }
  ss << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, v] : row.items()) {
      ss << (first ? "" : ",");
      first = false;
      if (v.is_string()) {
        ss << v.get<std::string>();
      } else {
        ss << v.dump();
      }
    }
    ss << "\n";
  }
  return ss.str();
}

const char* mode_name(SubstitutionMode m) {
  return m == SubstitutionMode::bivariate ? "bivariate" : "multivariate";
}

/// Safe count of exponent vectors, saturating at 2^64 - 1.
u64 monomial_count(const DegreeBounds& bounds) {
  u64 count = 1;
  for (u64 b : bounds) {
    if (count > (~u64{0}) / b) return ~u64{0};
    count *= b;
  }
  return count;
}

int cmd_collide_stats(const GridArgs& a, std::ostream& out, std::ostream& err) {
  require_positive(a.vars, "--vars");
  require_positive(a.terms, "--terms");
  require_positive(a.degree, "--degree");
  for (double m : a.mu) {
    if (!(m > 0.0 && m < 1.0)) throw UsageError("--mu values must lie in (0, 1)");
  }
  if (a.trials < 1) throw UsageError("--trials must be positive");
  const u64 seed = a.seed ? *a.seed : entropy_seed();
  if (!a.seed) err << "seed: " << seed << "\n";

  const PrimeField F(2147483647);
  std::vector<json> rows;
  bool all_pass = true;
  u64 config_index = 0;
  for (std::size_t n : a.vars) {
    for (u64 T : a.terms) {
      for (u64 D : a.degree) {
        for (double mu : a.mu) {
          const DegreeBounds bounds(n, D);
          if (T > monomial_count(bounds)) {
            throw UsageError("T = " + std::to_string(T) + " exceeds the number of monomials");
          }
          const auto params = SelectionParams::for_collision_bound(bounds, T, mu);
          const u64 config_seed = derive_seed(seed, config_index++);
          std::vector<char> hit(static_cast<std::size_t>(a.trials), 0);
          parallel_for(hit.size(), a.jobs, [&](std::size_t t) {
            Rng rng(derive_seed(config_seed, t));
            auto f = random_sparse(F, bounds, T, rng);
            auto s = sample_substitution(params, rng);
            // Term 0 plays the fixed term; f is random, so it is a uniform pick.
            hit[t] = substitute(f, s).collisions.collided[0] ? 1 : 0;
          });
          u64 collisions = 0;
          for (char h : hit) collisions += static_cast<u64>(h);
          const double observed = static_cast<double>(collisions) / a.trials;
          const double sigma = std::sqrt(mu * (1 - mu) / a.trials);
          const double threshold = mu + 3 * sigma;
          const bool pass = observed < threshold;
          all_pass = all_pass && pass;
          json row;
          row["n"] = n;
          row["T"] = T;
          row["D"] = D;
          row["mu"] = mu;
          row["mode"] = mode_name(params.mode);
          row["lambda"] = params.lambda;
          row["lambda_p"] = params.lambda_p;
          row["lambda_q"] = params.lambda_q;
          row["trials"] = a.trials;
          row["collisions"] = collisions;
          row["observed"] = observed;
          row["sigma"] = sigma;
          row["threshold"] = threshold;
          row["verdict"] = pass ? "PASS" : "FAIL";
          rows.push_back(std::move(row));
        }
      }
    }
  }
  emit(render(rows, a.format), a.out, out);
  return all_pass ? kOk : kFailure;
}

// ---------------------------------------------------------------------- bench

double analytic_degree_bound(const SelectionParams& p) {
  if (p.mode == SubstitutionMode::bivariate) {
    return 2 * p.lambda_p * static_cast<double>(p.bounds[0] - 1) +
           2 * p.lambda_q * static_cast<double>(p.bounds[1] - 1);
  }
  double sum = 0;
  for (u64 b : p.bounds) sum += static_cast<double>(b - 1);
  return static_cast<double>(p.lambda - 1) * sum;
}

int cmd_bench(const GridArgs& a, std::ostream& out, std::ostream& err) {
  require_positive(a.vars, "--vars");
  require_positive(a.terms, "--terms");
  require_positive(a.degree, "--degree");
  if (a.trials < 1) throw UsageError("--trials must be positive");
  const u64 seed = a.seed ? *a.seed : entropy_seed();
  if (!a.seed) err << "seed: " << seed << "\n";

  std::vector<json> rows;
  u64 config_index = 0;
  for (std::size_t n : a.vars) {
    if (n < 2) throw UsageError("bench compares substitutions and needs --vars >= 2");
    for (u64 T : a.terms) {
      if (T < 2) throw UsageError("bench needs --terms >= 2");
      for (u64 D : a.degree) {
        if (D < 2) throw UsageError("bench needs --degree >= 2");
        const DegreeBounds bounds(n, D);
        if (T > monomial_count(bounds)) {
          throw UsageError("T = " + std::to_string(T) + " exceeds the number of monomials");
        }
        Rng rng(derive_seed(seed, config_index++));
        const auto params = SelectionParams::for_interpolation(bounds, T);
        const u64 classical = classical_degree(bounds);
        const double bound = analytic_degree_bound(params);

        const auto t0 = std::chrono::steady_clock::now();
        const PrimeField F(2147483647);
        u64 family_max = 0, image_max = 0;
        bool within = true;
        for (int trial = 0; trial < a.trials; ++trial) {
          const auto family = sample_family(params, rng);
          const auto f = random_sparse(F, bounds, T, rng);
          for (const auto& s : family) {
            const u64 reach = max_image_degree(bounds, s);
            family_max = std::max(family_max, reach);
            const auto deg = substitute(f, s).image.degree();
            if (deg) image_max = std::max(image_max, *deg);
            within = within && static_cast<double>(reach) <= bound;
          }
        }
        const double wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();

        json row;
        row["n"] = n;
        row["T"] = T;
        row["D"] = D;
        row["mode"] = mode_name(params.mode);
        row["lambda"] = params.lambda;
        row["lambda_p"] = params.lambda_p;
        row["lambda_q"] = params.lambda_q;
        row["nu"] = params.nu;
        row["families"] = a.trials;
        row["classical_degree"] = classical;
        row["randomized_max_degree"] = image_max;
        row["family_max_degree"] = family_max;
        row["degree_bound"] = bound;
        row["quarter_classical"] = static_cast<double>(classical) / 4;
        row["within_bound"] = within;
        row["bound_below_quarter"] = bound < static_cast<double>(classical) / 4;
        row["classical_probes"] = classical;
        row["randomized_probes"] = params.nu * (family_max + 1);
        row["wall_ms"] = wall_ms;
        if (a.run) {
          const PrimeField G(auto_field_modulus(bounds, T));
          auto f = random_sparse(G, bounds, T, rng);
          PolyBlackBox box(f);
          InterpolationConfig cfg;
          cfg.bounds = bounds;
          cfg.terms = T;
          cfg.jobs = a.jobs;
          const auto r0 = std::chrono::steady_clock::now();
          auto report = interpolate_once(box, cfg, rng);
          row["run_ok"] = report.ok() && *report.result == f;
          row["run_probes"] = report.probes;
          row["run_ms"] = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - r0)
                              .count();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  emit(render(rows, a.format), a.out, out);
  return kOk;
}

// ----------------------------------------------------------------------- kron

struct KronArgs {
  std::string in, out, mode = "classical";
  std::vector<u64> degree, s;
  std::optional<std::size_t> vars;
  bool invert = false;
};

int cmd_kron(const KronArgs& a, std::ostream& out) {
  const SparsePoly f = parse_poly(read_file(a.in));
  if (a.invert) {
    if (a.mode != "classical") throw UsageError("--invert applies to --mode classical only");
    if (f.nvars() != 1) throw UsageError("--invert expects a univariate input");
    if (a.degree.empty()) throw UsageError("--invert needs --degree");
    const std::size_t n = a.vars ? *a.vars : a.degree.size();
    const DegreeBounds bounds = expand_bounds(a.degree, n);
    std::vector<UniTerm> terms;
    for (const auto& t : f.terms()) terms.push_back(UniTerm{t.coeff, t.exps[0]});
    const auto g = UniPoly::from_terms(f.field(), std::move(terms));
    emit(to_json(inverse_kronecker(g, bounds, n)) + "\n", a.out, out);
    return kOk;
  }
  const auto to_sparse = [&](const UniPoly& g) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back(Term{t.coeff, {t.degree}});
    return SparsePoly::from_terms(g.field(), 1, std::move(terms));
  };
  if (a.mode == "classical") {
    if (a.degree.empty()) throw UsageError("--mode classical needs --degree");
    const DegreeBounds bounds = expand_bounds(a.degree, f.nvars());
    emit(to_json(to_sparse(classical_kronecker(f, bounds))) + "\n", a.out, out);
    return kOk;
  }
  if (a.s.size() != f.nvars()) {
    throw UsageError("--s needs one exponent per variable (" + std::to_string(f.nvars()) + ")");
  }
  if (!a.degree.empty()) f.check_bounds(expand_bounds(a.degree, f.nvars()));
  const auto sub = substitute(f, a.s);
  json j;
  j["poly"] = poly_value(to_sparse(sub.image));
  j["collisions"] = {{"sums", sub.collisions.sums},
                     {"collided_terms", sub.collisions.collided_terms()},
                     {"collided", sub.collisions.collided}};
  emit(j.dump() + "\n", a.out, out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse polynomial interpolation by randomized Kronecker substitution"};
  app.name("rkinterp");
  app.require_subcommand(1);

  InterpolateArgs ia;
  auto* interp = app.add_subcommand("interpolate", "Interpolate a hidden polynomial or evaluator");
  interp->add_option("--in", ia.in, "Polynomial JSON hidden behind a black box");
  interp->add_option("--eval", ia.eval,
                     "Evaluator command: reads n decimals per line, writes one decimal");
  interp->add_option("--vars", ia.vars, "Number of variables")->required()->check(CLI::PositiveNumber);
  interp->add_option("--terms", ia.terms, "Bound T on the number of terms")
      ->required()
      ->check(CLI::PositiveNumber);
  interp->add_option("--degree", ia.degree, "Partial degree bound D (deg < D); once or per variable")
      ->required()
      ->check(CLI::PositiveNumber);
  interp->add_option("--field", ia.field, "Prime modulus q; default picks one automatically");
  interp->add_option("--epsilon", ia.epsilon, "Amplify to failure probability epsilon")
      ->check(CLI::Range(0.0, 1.0));
  interp->add_option("--seed", ia.seed, "Master seed; default draws from system entropy");
  interp->add_option("--backend", ia.backend, "Univariate backend")
      ->check(CLI::IsMember({"dense", "oracle"}));
  interp->add_option("--jobs", ia.jobs, "Worker threads")->check(CLI::PositiveNumber);
  interp->add_option("--out", ia.out, "Write the report here instead of stdout");

  GridArgs cs;
  auto* stats = app.add_subcommand("collide-stats", "Empirical collision rate of a fixed term");
  stats->add_option("--vars", cs.vars, "Variable counts (grid)")->required();
  stats->add_option("--terms", cs.terms, "Term bounds (grid)")->required();
  stats->add_option("--degree", cs.degree, "Degree bounds, common to all variables (grid)")->required();
  stats->add_option("--mu", cs.mu, "Failure bounds (grid)");
  stats->add_option("--trials", cs.trials, "Trials per configuration");
  stats->add_option("--seed", cs.seed, "Master seed");
  stats->add_option("--jobs", cs.jobs, "Worker threads")->check(CLI::PositiveNumber);
  stats->add_option("--format", cs.format)->check(CLI::IsMember({"csv", "json"}));
  stats->add_option("--out", cs.out, "Output file");

  GridArgs bs;
  bs.trials = 1;
  auto* bench = app.add_subcommand("bench", "Classical vs randomized image degrees and probes");
  bench->add_option("--vars", bs.vars, "Variable counts (grid)")->required();
  bench->add_option("--terms", bs.terms, "Term bounds (grid)")->required();
  bench->add_option("--degree", bs.degree, "Degree bounds, common to all variables (grid)")->required();
  bench->add_option("--trials", bs.trials, "Sampled families per configuration");
  bench->add_option("--seed", bs.seed, "Master seed");
  bench->add_flag("--run", bs.run, "Also interpolate one random instance per configuration");
  bench->add_option("--jobs", bs.jobs, "Worker threads for --run")->check(CLI::PositiveNumber);
  bench->add_option("--format", bs.format)->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--out", bs.out, "Output file");

  KronArgs ka;
  auto* kron = app.add_subcommand("kron", "Apply or invert a Kronecker substitution");
  kron->add_option("--in", ka.in, "Polynomial JSON")->required();
  kron->add_option("--mode", ka.mode)->check(CLI::IsMember({"classical", "random"}));
  kron->add_option("--degree", ka.degree, "Degree bounds; once or per variable")
      ->check(CLI::PositiveNumber);
  kron->add_option("--s", ka.s, "Substitution exponents, e.g. 2,5")->delimiter(',');
  kron->add_option("--vars", ka.vars, "Variables of the --invert output");
  kron->add_flag("--invert", ka.invert, "Invert a classical substitution");
  kron->add_option("--out", ka.out, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*interp) return cmd_interpolate(ia, out, err);
    if (*stats) return cmd_collide_stats(cs, out, err);
    if (*bench) return cmd_bench(bs, out, err);
    if (*kron) return cmd_kron(ka, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: malformed polynomial: " << e.what() << "\n";
    return kUsage;
  } catch (const FieldTooSmall& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace rkinterp::cli
