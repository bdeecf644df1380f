// Copyright 2026 The qsynth Authors
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

#include <fstream>
#include <numbers>
#include <sstream>

#include "qsynth/apps.hpp"
#include "qsynth_cli/commands.hpp"
#include "qsynth_cli/json_io.hpp"
#include "test_util.hpp"

using namespace qsynth;
using namespace qsynth::cli;
using namespace qsynth::testing;
using qsynth::io::json;

namespace {

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("qsynth_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    Path write(const std::string &name, const std::string &text) const {
        const Path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }
    Path write(const std::string &name, const json &doc) const { return write(name, doc.dump()); }
    Path path(const std::string &name) const { return dir_ / name; }

    std::ostringstream out_;
    std::ostringstream err_;
    Config config_;
    Path dir_;
};

json povm_doc(const apps::RankOnePovm &p) {
    json vectors = json::array();
    for (const auto &v : p.vectors) {
        vectors.push_back(io::complex_vector_to_json(v));
    }
    return {{"dim", p.dim}, {"vectors", vectors}};
}

}  // namespace

TEST(JsonIo, MatrixRoundTrip) {
    std::mt19937_64 rng(81);
    const ComplexMatrix m = random_matrix(rng, 3, 2);
    const json j = io::matrix_to_json(m);
    EXPECT_EQ(j["schema"], "qsynth/1");
    EXPECT_EQ(io::matrix_from_json(j), m);
}

TEST(JsonIo, MatrixRejectsMalformed) {
    EXPECT_THROW(io::matrix_from_json(json::array()), io::ParseError);
    EXPECT_THROW(io::matrix_from_json({{"rows", 1}, {"cols", 1}}), io::ParseError);
    EXPECT_THROW(io::matrix_from_json({{"rows", 1}, {"cols", 2}, {"data", {{1, 0}}}}), io::ParseError);
    EXPECT_THROW(io::matrix_from_json({{"rows", 1}, {"cols", 1}, {"data", {{1, 0, 0}}}}), io::ParseError);
    EXPECT_THROW(io::matrix_from_json({{"rows", -1}, {"cols", 1}, {"data", json::array()}}), io::ParseError);
    EXPECT_THROW(io::matrix_from_json({{"schema", "other/2"}, {"rows", 1}, {"cols", 1}, {"data", {{1, 0}}}}),
                 io::ParseError);
}

TEST(JsonIo, CircuitRoundTrip) {
    Circuit c;
    c.n_modes = 4;
    c.n_nominal = 3;
    c.ancilla_outputs = {2};
    c.full_ancillas = {3};
    c.elements = {PhaseShifter{0, 0.5}, BeamSplitter{1, 0, 0.25}, TwoModeSqueezer{2, 3, 0.75}};
    const Circuit back = io::circuit_from_json(io::circuit_to_json(c));
    EXPECT_EQ(back.n_modes, 4u);
    EXPECT_EQ(back.ancilla_outputs, c.ancilla_outputs);
    EXPECT_EQ(back.full_ancillas, c.full_ancillas);
    EXPECT_EQ(circuit_smatrix(back), circuit_smatrix(c));
}

TEST(JsonIo, CircuitRejectsInvalid) {
    json doc = {{"n_modes", 2}, {"n_nominal", 2}, {"elements", {{{"type", "bs"}, {"modes", {0, 5}}, {"theta", 1}}}}};
    EXPECT_THROW(io::circuit_from_json(doc), io::ParseError);
    doc["elements"] = {{{"type", "mirror"}}};
    EXPECT_THROW(io::circuit_from_json(doc), io::ParseError);
    doc["elements"] = {{{"type", "ps"}, {"mode", 0}}};
    EXPECT_THROW(io::circuit_from_json(doc), io::ParseError);
}

TEST(JsonIo, PovmFromEffects) {
    const ComplexMatrix e0 = real_matrix(2, 2, {1, 0, 0, 0});
    const ComplexMatrix e1 = real_matrix(2, 2, {0, 0, 0, 1});
    const json doc = {{"dim", 2}, {"effects", {io::matrix_to_json(e0), io::matrix_to_json(e1)}}};
    const apps::RankOnePovm p = io::povm_from_json(doc);
    EXPECT_EQ(p.vectors.size(), 2u);
    EXPECT_THROW(io::povm_from_json({{"dim", 2}}), io::ParseError);
}

TEST_F(CliTest, SynthLossyBeamSplitter) {
    const Path m = write("t.json", io::matrix_to_json(lossy_bs_t()));
    ASSERT_EQ(cmd_synth(m, path("net.json"), path("rep.json"), config_, out_, err_), kExitOk) << err_.str();
    const json report = io::read_json_file(path("rep.json"));
    EXPECT_EQ(report["schema"], "qsynth/1");
    EXPECT_EQ(report["n_full_ancillas"], 1);
    EXPECT_LT(report["quasiunitarity_deviation"].get<double>(), 1e-10);
    EXPECT_LT(report["block_deviation"].get<double>(), 1e-10);
    EXPECT_LT(report["mean_field"]["deviation"].get<double>(), 1e-10);
    EXPECT_EQ(report["singular_values"].size(), 2u);
    const Circuit c = io::circuit_from_json(io::read_json_file(path("net.json")));
    EXPECT_EQ(c.n_modes, 3u);
}

TEST_F(CliTest, SynthIdentityHasNoElements) {
    const Path m = write("t.json", io::matrix_to_json(ComplexMatrix::Identity(3, 3)));
    ASSERT_EQ(cmd_synth(m, std::nullopt, std::nullopt, config_, out_, err_), kExitOk) << err_.str();
    const json doc = json::parse(out_.str());
    EXPECT_TRUE(doc["netlist"]["elements"].empty());
    EXPECT_EQ(doc["report"]["n_full_ancillas"], 0);
}

TEST_F(CliTest, SynthMalformedInputExitsTwo) {
    EXPECT_EQ(cmd_synth(write("bad.json", std::string("{\"rows\": 2,")), std::nullopt, std::nullopt, config_, out_,
                        err_),
              kExitParse);
    EXPECT_NE(err_.str().find("parse error"), std::string::npos);
    EXPECT_EQ(cmd_synth(path("missing.json"), std::nullopt, std::nullopt, config_, out_, err_), kExitParse);
}

TEST_F(CliTest, SynthVerificationFailureExitsThree) {
    std::mt19937_64 rng(82);
    config_.tol = 1e-300;
    const Path m = write("t.json", io::matrix_to_json(random_matrix(rng, 4, 4, 2.0)));
    EXPECT_EQ(cmd_synth(m, std::nullopt, std::nullopt, config_, out_, err_), kExitVerify);
}

TEST_F(CliTest, SynthGainCeilingExitsFour) {
    ComplexMatrix t = ComplexMatrix::Identity(1, 1);
    t(0, 0) = 1e30;
    EXPECT_EQ(cmd_synth(write("t.json", io::matrix_to_json(t)), std::nullopt, std::nullopt, config_, out_, err_),
              kExitDomain);
    config_.tol = -1.0;
    EXPECT_EQ(cmd_synth(write("u.json", io::matrix_to_json(lossy_bs_t())), std::nullopt, std::nullopt, config_, out_,
                        err_),
              kExitDomain);
}

TEST_F(CliTest, SimulateLossyBeamSplitterNetlist) {
    const Path m = write("t.json", io::matrix_to_json(lossy_bs_t()));
    ASSERT_EQ(cmd_synth(m, path("net.json"), path("rep.json"), config_, out_, err_), kExitOk);
    SimulateOptions opts;
    opts.input = "1,1";
    ASSERT_EQ(cmd_simulate(path("net.json"), opts, config_, out_, err_), kExitOk) << err_.str();
    const json doc = json::parse(out_.str());
    EXPECT_EQ(doc["mode"], "fock");
    double p002 = -1.0;
    for (const auto &row : doc["outcomes"]) {
        if (row["occupation"] == json::array({0, 0, 2})) {
            p002 = row["prob"];
        }
    }
    EXPECT_NEAR(p002, 0.5, 1e-10);
    EXPECT_NEAR(doc["success_prob"].get<double>(), 1.0, 1e-10);
}

TEST_F(CliTest, SimulatePredicateFromFile) {
    ASSERT_EQ(cmd_synth(write("t.json", io::matrix_to_json(lossy_bs_t())), path("net.json"), std::nullopt, config_,
                        out_, err_),
              kExitOk);
    const Path pred = write("pred.json", json{{"max", {2, 2, 0}}});
    SimulateOptions opts;
    opts.input = "1,1,0";
    opts.predicate = "@" + pred.string();
    std::ostringstream out;
    ASSERT_EQ(cmd_simulate(path("net.json"), opts, config_, out, err_), kExitOk) << err_.str();
    const json doc = json::parse(out.str());
    EXPECT_NEAR(doc["success_prob"].get<double>(), 0.5, 1e-10);
    EXPECT_EQ(doc["outcomes"].size(), 3u);
}

TEST_F(CliTest, SimulateGainNetlistInFockModeExitsFour) {
    ComplexMatrix t = ComplexMatrix::Identity(2, 2);
    t(0, 0) = 2.0;
    ASSERT_EQ(cmd_synth(write("t.json", io::matrix_to_json(t)), path("net.json"), std::nullopt, config_, out_, err_),
              kExitOk);
    SimulateOptions opts;
    opts.input = "1,0";
    EXPECT_EQ(cmd_simulate(path("net.json"), opts, config_, out_, err_), kExitDomain);
    EXPECT_NE(err_.str().find("not passive"), std::string::npos);
}

TEST_F(CliTest, SimulateMomentsReproducesMeanField) {
    std::mt19937_64 rng(83);
    const ComplexMatrix t = matrix_with_singulars(rng, 2, 3, {1.8, 0.4});
    config_.seed = 9;
    const Path m = write("t.json", io::matrix_to_json(t));
    ASSERT_EQ(cmd_synth(m, path("net.json"), path("rep.json"), config_, out_, err_), kExitOk) << err_.str();
    const json report = io::read_json_file(path("rep.json"));
    SimulateOptions opts;
    opts.coherent = report["mean_field"]["alpha"].dump();
    std::ostringstream out;
    ASSERT_EQ(cmd_simulate(path("net.json"), opts, config_, out, err_), kExitOk) << err_.str();
    const json doc = json::parse(out.str());
    EXPECT_EQ(doc["mode"], "moments");
    EXPECT_LT(doc["physicality_residual"].get<double>(), 1e-10);
    const ComplexVector expected = io::complex_vector_from_json(report["mean_field"]["expected"]);
    for (Eigen::Index k = 0; k < 2; ++k) {
        const auto &row = doc["means"][static_cast<std::size_t>(k)];
        EXPECT_NEAR(row["re"].get<double>(), expected(k).real(), 1e-10);
        EXPECT_NEAR(row["im"].get<double>(), expected(k).imag(), 1e-10);
    }
}

TEST_F(CliTest, SimulateBadInputsExitTwo) {
    ASSERT_EQ(cmd_synth(write("t.json", io::matrix_to_json(lossy_bs_t())), path("net.json"), std::nullopt, config_,
                        out_, err_),
              kExitOk);
    SimulateOptions opts;
    for (const char *bad : {"1,x", "1,,1", "1,1,1,1", "-1"}) {
        opts.input = bad;
        EXPECT_EQ(cmd_simulate(path("net.json"), opts, config_, out_, err_), kExitParse) << bad;
    }
    opts.input = "1";
    opts.predicate = "{not json";
    EXPECT_EQ(cmd_simulate(path("net.json"), opts, config_, out_, err_), kExitParse);
    opts.predicate = R"({"min": [-1]})";
    EXPECT_EQ(cmd_simulate(path("net.json"), opts, config_, out_, err_), kExitParse);
}

TEST_F(CliTest, NaimarkTrine) {
    apps::RankOnePovm p;
    p.dim = 2;
    for (int i = 0; i < 3; ++i) {
        const double a = 2.0 * std::numbers::pi * i / 3.0;
        ComplexVector v(2);
        v << std::cos(a), std::sin(a);
        p.vectors.push_back(std::sqrt(2.0 / 3.0) * v);
    }
    ASSERT_EQ(cmd_naimark(write("povm.json", povm_doc(p)), path("ext.json"), config_, out_, err_), kExitOk)
        << err_.str();
    const json doc = io::read_json_file(path("ext.json"));
    const ComplexMatrix e = io::matrix_from_json(doc["extension"]);
    EXPECT_EQ(e.rows(), 3);
    EXPECT_LT(unitarity_deviation(e), 1e-10);
    EXPECT_EQ(doc["ancilla_outputs"], 1);
    const Circuit c = io::circuit_from_json(doc["netlist"]);
    EXPECT_LT(max_abs(circuit_smatrix(c).topLeftCorner(3, 3), e), 1e-10);
}

TEST_F(CliTest, NaimarkInvalidPovmExitsFour) {
    apps::RankOnePovm p;
    p.dim = 2;
    p.vectors = {ComplexVector::Ones(2), ComplexVector::Ones(2)};
    EXPECT_EQ(cmd_naimark(write("povm.json", povm_doc(p)), std::nullopt, config_, out_, err_), kExitDomain);
}

TEST_F(CliTest, Analytic2x2) {
    ComplexMatrix t(2, 2);
    t << Complex(0.3, 0.4), -0.2, Complex(0, 0.1), 1.7;
    ASSERT_EQ(cmd_analytic2x2(write("t.json", io::matrix_to_json(t)), std::nullopt, config_, out_, err_), kExitOk)
        << err_.str();
    const json doc = json::parse(out_.str());
    const auto s = svd(t).singulars;
    EXPECT_NEAR(doc["params"]["sigma1"].get<double>(), s[0], 1e-12);
    EXPECT_NEAR(doc["params"]["sigma2"].get<double>(), s[1], 1e-12);
    EXPECT_LT(doc["report"]["block_deviation"].get<double>(), 1e-10);
    EXPECT_EQ(cmd_analytic2x2(write("u.json", io::matrix_to_json(ComplexMatrix::Identity(3, 3))), std::nullopt,
                              config_, out_, err_),
              kExitDomain);
}

TEST_F(CliTest, CzReport) {
    ASSERT_EQ(cmd_cz(path("cz.json"), config_, out_, err_), kExitOk) << err_.str();
    const json doc = io::read_json_file(path("cz.json"));
    EXPECT_TRUE(doc["passed"].get<bool>());
    for (const auto &p : doc["success_prob"]) {
        EXPECT_NEAR(p.get<double>(), 1.0 / 9.0, 1e-10);
    }
    EXPECT_EQ(doc["sign_pattern"], json::array({-1, 1, 1, 1}));
    EXPECT_EQ(doc["n_full_ancillas"], 2);
}

TEST_F(CliTest, SelftestIsDeterministicForSeed) {
    config_.seed = 5;
    std::ostringstream a;
    std::ostringstream b;
    ASSERT_EQ(cmd_selftest(20, config_, a, err_), kExitOk) << err_.str();
    ASSERT_EQ(cmd_selftest(20, config_, b, err_), kExitOk);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(json::parse(a.str())["failures"], 0);
}
