// Copyright 2026 The procmat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"
#include "procmat/builtin.hpp"
#include "procmat/classical.hpp"
#include "procmat/process_io.hpp"
#include "procmat/standard.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace procmat {
namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::fresh_dir(::testing::UnitTest::GetInstance()->current_test_info()->name());
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, BuiltinOcbWritesExactMatrix) {
  const Invocation r = run({"builtin", "ocb", "--out", path("ocb.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const ProcessMatrix back = read_process_file(path("ocb.json"));
  EXPECT_TRUE((back.matrix().array() == builtin::ocb().matrix().array()).all());
}

TEST_F(CliTest, BuiltinWithoutOutPrintsJson) {
  const Invocation r = run({"builtin", "ocb"});
  ASSERT_EQ(r.code, 0);
  const ProcessMatrix back = parse_process_json(r.out);
  EXPECT_EQ(back.systems(), LabSystems(2, 2, 2, 2));
}

TEST_F(CliTest, ValidateExitCodes) {
  ASSERT_EQ(run({"builtin", "ocb", "--out", path("ocb.json")}).code, 0);
  ASSERT_EQ(run({"builtin", "ctc", "--u", "h", "--out", path("ctc.json")}).code, 0);
  std::ofstream(path("garbage.json")) << "{not json";

  const Invocation ok = run({"validate", path("ocb.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("VALID"), std::string::npos);
  EXPECT_EQ(run({"validate", path("ctc.json")}).code, 1);
  EXPECT_EQ(run({"validate", path("ctc.json"), "--mode", "probe"}).code, 1);
  EXPECT_EQ(run({"validate", path("garbage.json")}).code, 2);
  EXPECT_EQ(run({"validate", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"validate", path("ocb.json"), "--mode", "sideways"}).code, 2);
}

TEST_F(CliTest, ClassifyListsTerms) {
  ASSERT_EQ(run({"builtin", "ocb", "--out", path("ocb.json")}).code, 0);
  const Invocation r = run({"--json", "classify", path("ocb.json")});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["metrics"]["terms"].size(), 3u);
  EXPECT_EQ(j["verdict"], "accept");
}

TEST_F(CliTest, GameRunReportsOcbScore) {
  ASSERT_EQ(run({"builtin", "ocb", "--out", path("ocb.json")}).code, 0);
  const Invocation r = run({"--json", "game", "run", path("ocb.json"), "--protocol", "basis-switch"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["metrics"]["p_succ"].get<double>(), (2.0 + std::sqrt(2.0)) / 4.0, 1e-12);
  EXPECT_EQ(run({"game", "run", path("ocb.json"), "--protocol", "other"}).code, 2);
}

TEST_F(CliTest, GameRunNeedsQubits) {
  ASSERT_EQ(run({"builtin", "state", "--rho", "mixed", "--d-a1", "2", "--d-b1", "1", "--d-a2",
                 "1", "--d-b2", "1", "--out", path("small.json")})
                .code,
            0);
  EXPECT_EQ(run({"game", "run", path("small.json")}).code, 2);
}

TEST_F(CliTest, BruteForcePrintsExactBound) {
  const Invocation r = run({"game", "brute-force", "--message-dim", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3/4"), std::string::npos);
  const Invocation j = run({"--json", "game", "brute-force", "--message-dim", "1"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["metrics"]["max_p_succ"], "1/2");
  EXPECT_EQ(run({"game", "brute-force", "--message-dim", "2", "--cap", "10"}).code, 2);
}

TEST_F(CliTest, StateAndMixtureBuiltins) {
  ASSERT_EQ(run({"builtin", "state", "--rho", "singlet", "--out", path("s.json")}).code, 0);
  const ProcessMatrix s = read_process_file(path("s.json"));
  EXPECT_EQ(s.systems(), LabSystems(2, 2, 2, 2));
  EXPECT_LT(max_abs_difference(s.matrix(),
                               builtin::state(standard::singlet(), 2, 2, 2, 2).matrix()),
            1e-15);

  ASSERT_EQ(run({"builtin", "channel-a-to-b", "--rho", "zero", "--out", path("ab.json")}).code, 0);
  ASSERT_EQ(run({"builtin", "channel-b-to-a", "--rho", "zero", "--out", path("ba.json")}).code, 0);
  ASSERT_EQ(run({"builtin", "mixture", "--q", "0.25", "--w1", path("ab.json"), "--w2",
                 path("ba.json"), "--out", path("mix.json")})
                .code,
            0);
  const ProcessMatrix mix = read_process_file(path("mix.json"));
  const ProcessMatrix expected = builtin::mixture(0.25, read_process_file(path("ab.json")),
                                                  read_process_file(path("ba.json")));
  EXPECT_LT(max_abs_difference(mix.matrix(), expected.matrix()), 1e-15);
  EXPECT_EQ(run({"validate", path("mix.json")}).code, 0);
}

TEST_F(CliTest, DecomposeClassicalWritesComponents) {
  Rng rng(81);
  const ClassicalProcess w = random_classical_process(LabSystems(2, 2, 2, 2), rng);
  write_process_file(path("diag.json"), w.to_process());
  const std::string prefix = path("out/dec-");
  const Invocation r = run({"--json", "decompose-classical", path("diag.json"), "--out-prefix", prefix});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const double q = j["metrics"]["q"].get<double>();
  EXPECT_GE(q, 0.0);
  EXPECT_LE(q, 1.0);
  const ProcessMatrix w1 = read_process_file(prefix + "b_not_before_a.json");
  const ProcessMatrix w2 = read_process_file(prefix + "a_not_before_b.json");
  EXPECT_LT(max_abs_difference(builtin::mixture(q, w1, w2).matrix(), w.to_process().matrix()),
            1e-9);

  write_process_file(path("ocb.json"), builtin::ocb());
  EXPECT_EQ(run({"decompose-classical", path("ocb.json"), "--out-prefix", prefix}).code, 1);
}

TEST_F(CliTest, JsonReportSchema) {
  ASSERT_EQ(run({"builtin", "ocb", "--out", path("ocb.json")}).code, 0);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "validate", path("ocb.json")},
           {"--json", "classify", path("ocb.json")},
           {"--json", "game", "run", path("ocb.json")},
           {"--json", "validate", path("missing.json")}}) {
    const Invocation r = run(args);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"command", "verdict", "metrics", "artifacts"}) {
      EXPECT_TRUE(j.contains(key)) << key << " in " << r.out;
    }
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"builtin", "wormhole"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"builtin", "mixture", "--q", "0.5"}).code, 2);
}

}  // namespace
}  // namespace procmat
