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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gtest/gtest.h"
#include "json.hpp"
#include "rkinterp/poly_json.hpp"
#include "rkinterp/primes.hpp"
#include "rkinterp/selection.hpp"
#include "test_util.hpp"

namespace rkinterp {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rkinterp_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    PrimeField F(101);
    example_ = write("example.json", to_json(testing::example_poly(F)));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  fs::path dir_;
  std::string example_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"interpolate", "--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"interpolate", "--in", example_, "--terms", "4", "--degree", "10"}).code, 2);
  EXPECT_EQ(run({"interpolate", "--in", example_, "--vars", "2", "--terms", "4"}).code, 2);
  EXPECT_EQ(run({"interpolate", "--in", example_, "--vars", "2", "--terms", "4", "--degree", "10",
                 "--bogus"})
                .code,
            2);
  EXPECT_EQ(run({"interpolate", "--vars", "2", "--terms", "4", "--degree", "10"}).code, 2);
  EXPECT_EQ(run({"interpolate", "--in", example_, "--vars", "2", "--terms", "4", "--degree", "10",
                 "--backend", "supersparse"})
                .code,
            2);
}

TEST_F(CliTest, InterpolateWorkedExample) {
  auto r = run({"interpolate", "--in", example_, "--vars", "2", "--terms", "4", "--degree", "10",
                "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err << r.out;
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  PrimeField F(101);
  EXPECT_EQ(parse_poly(j["poly"].dump()), testing::example_poly(F));
  ASSERT_EQ(j["images"].size(), 30u);
  EXPECT_EQ(j["probes"].get<u64>(), 30 * (j["deg_bound"].get<u64>() + 1));
  for (const auto& img : j["images"]) {
    EXPECT_EQ(img["s"].size(), 2u);
    EXPECT_TRUE(img["degree"].is_number());
  }
  EXPECT_EQ(r.err.find("seed:"), std::string::npos);
  // Same seed, same report.
  EXPECT_EQ(run({"interpolate", "--in", example_, "--vars", "2", "--terms", "4", "--degree", "10",
                 "--seed", "1", "--jobs", "3"})
                .out,
            r.out);
}

TEST_F(CliTest, AmplifiedRunReportsVote) {
  auto r = run({"interpolate", "--in", example_, "--vars", "2", "--terms", "4", "--degree", "10",
                "--seed", "2", "--epsilon", "0.05"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["vote"]["runs"].get<u64>(), 54u);
  EXPECT_GT(2 * j["vote"]["winner_votes"].get<u64>(), 54u);
}

TEST_F(CliTest, SeedIsPrintedWhenOmitted) {
  auto r = run({"interpolate", "--in", example_, "--vars", "2", "--terms", "4", "--degree", "10"});
  ASSERT_EQ(r.code, 0);
  ASSERT_NE(r.err.find("seed: "), std::string::npos);
  const u64 seed = std::stoull(r.err.substr(r.err.find("seed: ") + 6));
  EXPECT_EQ(json::parse(r.out)["seed"].get<u64>(), seed);
}

TEST_F(CliTest, OracleBackendIssuesNoProbes) {
  auto r = run({"interpolate", "--in", example_, "--vars", "2", "--terms", "4", "--degree", "10",
                "--seed", "3", "--backend", "oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["probes"].get<u64>(), 0u);
  EXPECT_EQ(parse_poly(j["poly"].dump()), testing::example_poly(PrimeField(101)));
}

TEST_F(CliTest, ExplicitFieldAndOutFile) {
  const auto out = (dir_ / "report.json").string();
  auto r = run({"interpolate", "--in", example_, "--vars", "2", "--terms", "4", "--degree", "10",
                "--seed", "4", "--field", "1000003", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  auto j = json::parse(in);
  EXPECT_EQ(j["field"], "1000003");
  PrimeField G(1000003);
  auto f = parse_poly(j["poly"].dump());
  EXPECT_EQ(f.field(), G);
  EXPECT_EQ(f.terms()[1].coeff, G.from_int(-2));
}

TEST_F(CliTest, InputErrorsExitTwo) {
  const std::vector<std::string> base{"--vars", "2", "--terms", "4", "--degree", "10", "--seed", "1"};
  auto with = [&](std::vector<std::string> head) {
    head.insert(head.end(), base.begin(), base.end());
    return run(head).code;
  };
  EXPECT_EQ(with({"interpolate", "--in", (dir_ / "missing.json").string()}), 2);
  EXPECT_EQ(with({"interpolate", "--in", write("bad.json", "{\"field\":")}), 2);
  EXPECT_EQ(with({"interpolate", "--in", write("neg.json",
                                               R"({"field":"101","vars":2,"terms":[{"coeff":"1","exps":[-1,0]}]})")}),
            2);
  // Degree bound violated by x^9 under --degree 5.
  EXPECT_EQ(run({"interpolate", "--in", example_, "--vars", "2", "--terms", "4", "--degree", "5"}).code, 2);
  EXPECT_EQ(with({"interpolate", "--in", example_, "--field", "1000001"}), 2);  // composite
  EXPECT_EQ(with({"interpolate", "--in", example_, "--field", "1009"}), 2);     // too small
  EXPECT_EQ(with({"interpolate", "--in", example_, "--epsilon", "0"}), 2);
  EXPECT_EQ(run({"interpolate", "--in", example_, "--vars", "3", "--terms", "4", "--degree", "10"}).code, 2);
  EXPECT_EQ(run({"interpolate", "--in", example_, "--vars", "2", "--terms", "3", "--degree", "10"}).code, 2);
}

TEST_F(CliTest, SubprocessEvaluator) {
  const std::string eval = std::string(RKINTERP_LINE_EVALUATOR_PATH) + " " + example_;
  auto r = run({"interpolate", "--eval", eval, "--vars", "2", "--terms", "4", "--degree", "10",
                "--seed", "5"});
  ASSERT_EQ(r.code, 0) << r.err << r.out;
  auto j = json::parse(r.out);
  // The evaluator lifts into the chosen field, so compare there.
  PrimeField G(std::stoull(j["field"].get<std::string>()));
  std::vector<Term> terms;
  const auto f = testing::example_poly(PrimeField(101));
  for (const auto& t : f.terms()) {
    const i64 c = t.coeff.v > 50 ? static_cast<i64>(t.coeff.v) - 101 : static_cast<i64>(t.coeff.v);
    terms.push_back(Term{G.from_int(c), t.exps});
  }
  EXPECT_EQ(parse_poly(j["poly"].dump()), SparsePoly::from_terms(G, 2, terms));
}

TEST_F(CliTest, AlgorithmicFailureExitsOne) {
  // The worked example is not 1-sparse; the T = 1 path detects it.
  const std::string eval = std::string(RKINTERP_LINE_EVALUATOR_PATH) + " " + example_;
  auto r = run({"interpolate", "--eval", eval, "--vars", "2", "--terms", "1", "--degree", "10",
                "--seed", "6"});
  EXPECT_EQ(r.code, 1) << r.err;
  auto j = json::parse(r.out);
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_TRUE(j["poly"].is_null());
  EXPECT_FALSE(j["failure"].get<std::string>().empty());
}

TEST_F(CliTest, BrokenEvaluatorExitsTwo) {
  const std::string base = std::string(RKINTERP_LINE_EVALUATOR_PATH) + " " + example_;
  for (const std::string& extra : {std::string(" --die-after 5"), std::string(" --garbage")}) {
    auto r = run({"interpolate", "--eval", base + extra, "--vars", "2", "--terms", "4", "--degree",
                  "10", "--seed", "7"});
    EXPECT_EQ(r.code, 2) << extra;
    EXPECT_NE(r.err.find("evaluator"), std::string::npos) << r.err;
  }
}

TEST_F(CliTest, CollideStats) {
  auto r = run({"collide-stats", "--vars", "2", "--terms", "4", "--degree", "10", "--trials", "2000",
                "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err << r.out;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header.rfind("n,T,D,mu,mode,lambda", 0), 0u);
  EXPECT_NE(row.find("PASS"), std::string::npos);

  auto j = json::parse(run({"collide-stats", "--vars", "3", "--terms", "1", "4", "--degree", "10",
                            "--trials", "500", "--seed", "2", "--format", "json"})
                           .out);
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["collisions"].get<u64>(), 0u);
  EXPECT_EQ(j["rows"][0]["lambda"].get<u64>(), least_prime_geq(4.0));
  EXPECT_EQ(j["rows"][1]["lambda"].get<u64>(), least_prime_geq(16.0));
  EXPECT_EQ(j["rows"][1]["trials"].get<u64>(), 500u);

  EXPECT_EQ(run({"collide-stats", "--vars", "2", "--terms", "4", "--degree", "10", "--mu", "1.5"}).code, 2);
  EXPECT_EQ(run({"collide-stats", "--vars", "2", "--terms", "400", "--degree", "10"}).code, 2);
}

TEST_F(CliTest, Bench) {
  auto r = run({"bench", "--vars", "2", "--terms", "4", "--degree", "10", "--seed", "1", "--format",
                "json", "--run"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 1u);
  const auto& row = j["rows"][0];
  EXPECT_EQ(row["classical_degree"].get<u64>(), 100u);
  EXPECT_TRUE(row["within_bound"].get<bool>());
  EXPECT_LE(row["randomized_max_degree"].get<u64>(), row["family_max_degree"].get<u64>());
  EXPECT_TRUE(row["run_ok"].get<bool>());
  auto csv = run({"bench", "--vars", "2", "3", "--terms", "4", "--degree", "10", "--seed", "1"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3);
  EXPECT_EQ(run({"bench", "--vars", "1", "--terms", "4", "--degree", "10"}).code, 2);
}

TEST_F(CliTest, KronGoldenAndRoundTrip) {
  auto c = run({"kron", "--in", example_, "--mode", "classical", "--degree", "10"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out,
            R"({"field":"101","vars":1,"terms":[{"coeff":"1","exps":[92]},{"coeff":"100","exps":[60]},{"coeff":"99","exps":[45]},{"coeff":"3","exps":[19]}]})"
            "\n");
  const auto uni = write("uni.json", c.out);
  auto back = run({"kron", "--in", uni, "--invert", "--degree", "10", "--vars", "2"});
  ASSERT_EQ(back.code, 0) << back.err;
  EXPECT_EQ(back.out, to_json(testing::example_poly(PrimeField(101))) + "\n");

  auto rnd = run({"kron", "--in", example_, "--mode", "random", "--s", "2,5"});
  ASSERT_EQ(rnd.code, 0) << rnd.err;
  auto j = json::parse(rnd.out);
  EXPECT_EQ(j["poly"],
            json::parse(R"({"field":"101","vars":1,"terms":[{"coeff":"1","exps":[49]},{"coeff":"98","exps":[30]},{"coeff":"3","exps":[23]}]})"));
  EXPECT_EQ(j["collisions"]["sums"].get<u64>(), 1u);
  EXPECT_EQ(j["collisions"]["collided_terms"].get<u64>(), 2u);

  EXPECT_EQ(run({"kron", "--in", example_, "--mode", "random", "--s", "2"}).code, 2);
  EXPECT_EQ(run({"kron", "--in", example_, "--mode", "classical", "--degree", "5"}).code, 2);
  EXPECT_EQ(run({"kron", "--in", example_, "--mode", "classical"}).code, 2);
}

}  // namespace
}  // namespace rkinterp
