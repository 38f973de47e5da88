// Copyright 2026 The extwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "extwit/choi.h"
#include "extwit/json_io.h"
#include "extwit/linalg.h"

namespace extwit::cli {
namespace {

using io::json;
namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("extwit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text) {
        fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    fs::path dir_;
};

TEST_F(CliTest, CertifyChoi) {
    CliRun r = run({"certify", "@choi", "--quiet"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json d = r.doc();
    EXPECT_TRUE(d["is_witness_numeric"].get<bool>());
    EXPECT_EQ(d["spanning_verdict"], "not-found-at-budget");
    EXPECT_EQ(d["nd_spanning_verdict"], "not-found-at-budget");
    EXPECT_NE(d["spanning"]["caveat"].get<std::string>().find("optimality not decided"), std::string::npos);
    EXPECT_FALSE(d["detection_state"].is_null());
    EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, CertifySwap) {
    CliRun r = run({"certify", "@swap", "--quiet"});
    ASSERT_EQ(r.code, kExitOk);
    json d = r.doc();
    EXPECT_TRUE(d["is_witness_numeric"].get<bool>());
    EXPECT_EQ(d["spanning_verdict"], "confirmed");
    EXPECT_EQ(d["spanning"]["rank"], 4);
}

TEST_F(CliTest, CertifyIdentity) {
    CliRun r = run({"certify", "@identity", "--quiet"});
    ASSERT_EQ(r.code, kExitOk);
    json d = r.doc();
    EXPECT_FALSE(d["is_witness_numeric"].get<bool>());
    EXPECT_EQ(d["spanning_verdict"], "not-applicable");
    EXPECT_TRUE(d["detection_state"].is_null());
}

TEST_F(CliTest, ConfigEmbedded) {
    CliRun r = run({"--seed", "7", "certify", "@swap", "--restarts", "8", "--tol", "1e-8", "--quiet"});
    ASSERT_EQ(r.code, kExitOk);
    json c = r.doc()["config"];
    EXPECT_EQ(c["command"], "certify");
    EXPECT_EQ(c["seed"], 7);
    EXPECT_EQ(c["restarts"], 8);
    EXPECT_EQ(c["tol"], 1e-8);
    EXPECT_EQ(c["witness"], "@swap");
    EXPECT_EQ(r.doc()["see_saw"]["runs"].size(), 8u);
}

TEST_F(CliTest, SummaryGoesToStderr) {
    CliRun r = run({"certify", "@swap"});
    EXPECT_NE(r.err.find("witness (numeric)"), std::string::npos);
    EXPECT_NO_THROW(r.doc());
}

TEST_F(CliTest, MalformedJsonIsInputError) {
    std::string path = write("bad.json", "{not json");
    CliRun r = run({"certify", path, "--quiet"});
    EXPECT_EQ(r.code, kExitInput);
    EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, OtherInputErrors) {
    EXPECT_EQ(run({"certify", (dir_ / "missing.json").string(), "--quiet"}).code, kExitInput);
    EXPECT_EQ(run({"certify", "@nothing", "--quiet"}).code, kExitInput);
    EXPECT_EQ(run({"certify"}).code, kExitInput);
    EXPECT_EQ(run({"--bogus", "certify", "@choi"}).code, kExitInput);
    EXPECT_EQ(run({}).code, kExitInput);
    EXPECT_EQ(run({"certify", "@choi", "--restarts", "0"}).code, kExitInput);
    EXPECT_EQ(run({"mdiew", "audit", "@swap", "--mode", "sideways"}).code, kExitInput);
    std::string nonherm = write("nh.json", R"({"dims":[2],"cut":0,"data":[[[1,0],[1,0]],[[0,0],[1,0]]]})");
    EXPECT_EQ(run({"certify", nonherm}).code, kExitInput);
}

TEST_F(CliTest, Help) {
    CliRun r = run({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("certify"), std::string::npos);
}

TEST_F(CliTest, ExtendChoiByExhibitCaps) {
    CliRun r = run({"extend", "@choi", "@exhibit-caps", "--quiet"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json d = r.doc();
    HermitianOperator ext = io::operator_from_json(d["extended_witness"]);
    EXPECT_EQ(ext.layout().dims(), (std::vector<int>{1, 3, 3, 2}));
    EXPECT_TRUE(ext.matrix().isApprox(kron(choi::choi_witness().op.matrix(), Matrix::Ones(2, 2))));
    EXPECT_TRUE(d["witness_preserved"].get<bool>());
    EXPECT_TRUE(d["gamma_check"]["passed"].get<bool>());
}

TEST_F(CliTest, ExtendSwapByRandomCaps) {
    for (const char *seed : {"1", "2", "3"}) {
        CliRun r = run({"extend", "@swap", "--random-caps", "2", "2", "--seed", seed, "--quiet"});
        ASSERT_EQ(r.code, kExitOk) << r.err;
        EXPECT_TRUE(r.doc()["recertification"]["is_witness_numeric"].get<bool>());
    }
}

TEST_F(CliTest, ExtendWritesWitnessFile) {
    std::string out = (dir_ / "ext.json").string();
    CliRun r = run({"extend", "@swap", "--random-caps", "1", "2", "--witness-out", out, "--quiet"});
    ASSERT_EQ(r.code, kExitOk);
    CliRun again = run({"certify", out, "--quiet"});
    EXPECT_EQ(again.code, kExitOk);
    EXPECT_TRUE(again.doc()["is_witness_numeric"].get<bool>());
}

TEST_F(CliTest, ExtendNonPsdCapIsInputError) {
    std::string spec = write("spec.json", R"({"cap_left":{"dims":[1],"cut":0,"data":[[[1,0]]]},
        "cap_right":{"dims":[2],"cut":0,"data":[[[1,0],[2,0]],[[2,0],[1,0]]]}})");
    CliRun r = run({"extend", "@choi", spec, "--quiet"});
    EXPECT_EQ(r.code, kExitInput);
    EXPECT_NE(r.err.find("positive semidefinite"), std::string::npos);
    EXPECT_EQ(run({"extend", "@choi", "--quiet"}).code, kExitInput);
    EXPECT_EQ(run({"extend", "@choi", spec, "--random-caps", "1", "1", "--quiet"}).code, kExitInput);
}

TEST_F(CliTest, ChoiDemoDefault) {
    CliRun r = run({"choi-demo", "--quiet"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json e = r.doc()["exhibit"];
    EXPECT_LT(e["ext_value"].get<double>(), 0.0);
    EXPECT_LE(std::abs(e["reduced_value"].get<double>()), 1e-10);
    EXPECT_TRUE(e["accepted"].get<bool>());
}

TEST_F(CliTest, ChoiDemoSignFlipIsViolation) {
    std::string params = write("p.json", R"({"a":[[[1,0],[0,0]],[[0,0],[1,0]]],"b":[[[1,0],[1,0]],[[1,0],[1,0]]]})");
    CliRun r = run({"choi-demo", "--params", params, "--quiet"});
    EXPECT_EQ(r.code, kExitViolation);
    EXPECT_FALSE(r.doc()["exhibit"]["accepted"].get<bool>());
    EXPECT_GT(r.doc()["exhibit"]["ext_value"].get<double>(), 0.0);
}

TEST_F(CliTest, MdiewDecompose) {
    CliRun r = run({"mdiew", "decompose", "@choi", "--quiet"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_LE(r.doc()["residual"].get<double>(), 1e-9);
    EXPECT_EQ(r.doc()["scenario"]["beta"].size(), 9u);
}

TEST_F(CliTest, MdiewAuditFromWitnessAndScenario) {
    CliRun a = run({"mdiew", "audit", "@swap", "--trials", "50", "--quiet"});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_GE(a.doc()["audit"]["min_value"].get<double>(), -1e-9);
    EXPECT_EQ(a.doc()["audit"]["trials"], 50);

    CliRun d = run({"mdiew", "decompose", "@swap", "--quiet"});
    std::string sc = write("scenario.json", d.doc()["scenario"].dump());
    CliRun b = run({"mdiew", "audit", "--scenario", sc, "--trials", "50", "--quiet"});
    ASSERT_EQ(b.code, kExitOk) << b.err;
    EXPECT_EQ(a.doc()["audit"], b.doc()["audit"]);
}

TEST_F(CliTest, MdiewAuditFailureIsViolation) {
    std::string neg = write("neg.json", R"({"dims":[2,2],"cut":1,"data":[
        [[-1,0],[0,0],[0,0],[0,0]],[[0,0],[-1,0],[0,0],[0,0]],
        [[0,0],[0,0],[-1,0],[0,0]],[[0,0],[0,0],[0,0],[-1,0]]]})");
    CliRun r = run({"mdiew", "audit", neg, "--trials", "5", "--quiet"});
    EXPECT_EQ(r.code, kExitViolation);
    EXPECT_FALSE(r.doc()["audit"]["passed"].get<bool>());
    EXPECT_EQ(r.doc()["exit_code"], kExitViolation);
}

TEST_F(CliTest, JsonOutMatchesStdout) {
    std::string path = (dir_ / "out.json").string();
    CliRun file = run({"certify", "@swap", "--json-out", path, "--quiet"});
    ASSERT_EQ(file.code, kExitOk);
    EXPECT_TRUE(file.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    json from_file = json::parse(text.str());
    json from_stdout = run({"certify", "@swap", "--quiet"}).doc();
    EXPECT_EQ(from_file["config"]["json_out"], path);
    EXPECT_TRUE(from_stdout["config"]["json_out"].is_null());
    from_file["config"].erase("json_out");
    from_stdout["config"].erase("json_out");
    EXPECT_EQ(from_file, from_stdout);
}

TEST_F(CliTest, ByteDeterministic) {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"certify", "@choi", "--quiet"},
          {"extend", "@swap", "--random-caps", "2", "3", "--quiet"},
          {"choi-demo", "--quiet"},
          {"mdiew", "audit", "@choi", "--trials", "20", "--mode", "misaligned", "--quiet"}}) {
        CliRun a = run(args);
        CliRun b = run(args);
        EXPECT_EQ(a.out, b.out) << args[0];
        EXPECT_FALSE(a.out.empty());
    }
    EXPECT_NE(run({"certify", "@choi", "--seed", "1", "--quiet"}).out,
              run({"certify", "@choi", "--seed", "2", "--quiet"}).out);
}

TEST_F(CliTest, FixturesMatchCatalogue) {
    CliRun r = run({"fixtures", "--dir", dir_.string(), "--quiet"});
    ASSERT_EQ(r.code, kExitOk);
    for (const std::string &name : catalogue_names()) {
        HermitianOperator written = io::operator_from_json(io::read_json_file((dir_ / (name + ".json")).string()));
        HermitianOperator bundled = io::operator_from_json(
            io::read_json_file(std::string(EXTWIT_DATA_DIR) + "/" + name + ".json"));
        EXPECT_TRUE((written.matrix().array() == catalogue_operator(name)->matrix().array()).all()) << name;
        EXPECT_TRUE((bundled.matrix().array() == written.matrix().array()).all()) << name;
    }
    CliRun from_file = run({"certify", std::string(EXTWIT_DATA_DIR) + "/choi.json", "--quiet"});
    EXPECT_EQ(from_file.doc()["min_product_value"], run({"certify", "@choi", "--quiet"}).doc()["min_product_value"]);
}

}  // namespace
}  // namespace extwit::cli
