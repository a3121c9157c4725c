// Copyright 2026 The clustercert Authors
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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "clustercert/io.hpp"
#include "commands.hpp"
#include "manifest.hpp"

using namespace clustercert;
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

const fs::path kGolden = CLUSTERCERT_GOLDEN_DIR;

int run_tool(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(CLUSTERCERT_TOOL) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Json params(const std::string& cmd, std::initializer_list<std::pair<const char*, Json>> overrides) {
    Json p = cli::default_parameters(cmd);
    for (const auto& [k, v] : overrides) p[k] = v;
    return p;
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "clustercert_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, ThresholdsMatchGolden) {
    const auto out = cli::run_command("thresholds", cli::default_parameters("thresholds"));
    EXPECT_EQ(out, io::read_file(kGolden / "thresholds_20.csv"));
}

TEST(Cli, CompareCrossingsMatchGolden) {
    const auto golden = nlohmann::json::parse(io::read_file(kGolden / "le3_crossings.json"));
    const auto out = nlohmann::json::parse(cli::run_command("compare", params("compare", {{"format", "json"}})));
    EXPECT_NEAR(out["le3_crossings"]["zxz"].get<double>(), golden["zxz"].get<double>(), 1e-9);
    EXPECT_NEAR(out["le3_crossings"]["direct"].get<double>(), golden["direct"].get<double>(), 1e-9);
    EXPECT_EQ(out["rows"].size(), 30u);
    // Where the ZXZ floor certifies anything, the direct bound certifies at least as far.
    for (const auto& row : out["rows"]) EXPECT_GE(row["direct_range"].get<int>(), row["zxz_range"].get<int>());
}

TEST(Cli, CompareCsvHasSchemaAndCrossings) {
    const auto out = cli::run_command("compare", params("compare", {{"steps", 2}}));
    EXPECT_EQ(out.rfind("# schema: clustercert.compare/1\n", 0), 0u);
    EXPECT_NE(out.find("# le3_crossing_direct"), std::string::npos);
}

TEST(Cli, WcVerify) {
    const auto out = nlohmann::json::parse(cli::run_command("wc-verify", cli::default_parameters("wc-verify")));
    EXPECT_LT(out["max_deviation"].get<double>(), 1e-10);
    EXPECT_EQ(out["stabilizer_elements"], 63);
}

TEST(Cli, TripletAndPlan) {
    const auto t = nlohmann::json::parse(cli::run_command("triplet", params("triplet", {{"bases", "Y"}})));
    EXPECT_EQ(t["elements"][0]["operator"], "+XIX");
    EXPECT_EQ(t["m_sum"], 6);
    const auto p = nlohmann::json::parse(cli::run_command("plan", cli::default_parameters("plan")));
    EXPECT_EQ(p["complete_triples"], 26492);
    EXPECT_EQ(p["windows"], 26492000000ull);
}

TEST(Cli, EstimateCertifiesSmallSpans) {
    const auto out = nlohmann::json::parse(
        cli::run_command("estimate", params("estimate", {{"p", 0.02}, {"eta", 0.05}})));
    EXPECT_NEAR(out["analytic_zxz"].get<double>(), 0.9216, 1e-12);
    const auto& est = out["estimate"];
    EXPECT_LE(est["ci_low"].get<double>(), 0.9216);
    EXPECT_GE(est["ci_high"].get<double>(), 0.9216);
    EXPECT_GT(out["reports"][0]["le_floor"].get<double>(), 0.0);
    EXPECT_EQ(out["reports"][0]["method"], "hoeffding");
}

TEST(Cli, EstimatePerfectSourceInterval) {
    const auto out = nlohmann::json::parse(
        cli::run_command("estimate", params("estimate", {{"windows", 10000}, {"spans", {1}}})));
    const auto& est = out["estimate"];
    EXPECT_EQ(est["mean"], 1.0);
    EXPECT_EQ(est["n_complete"], 10000);
    // Hoeffding on P(product = +1) gives mean >= 1 - 2 eps with eps = sqrt(ln(200) / 20000).
    const double eps = std::sqrt(std::log(200.0) / 20000.0);
    EXPECT_NEAR(est["ci_low"].get<double>(), 1 - 2 * eps, 1e-11);
    EXPECT_NEAR(est["ci_low"].get<double>(), 0.96745, 1e-5);
}

TEST(Cli, LocalizeAtHalfIsZero) {
    const auto out = nlohmann::json::parse(cli::run_command(
        "localize", params("localize", {{"n", 4}, {"lambda", {0.5, 0.9}}, {"restarts", 4}, {"format", "json"}})));
    EXPECT_NEAR(out["rows"][0]["best_value"].get<double>(), 0.0, 1e-9);
    EXPECT_NEAR(out["rows"][1]["best_value"].get<double>(), 0.8, 1e-6);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_tool("thresholds --max-measured 3"), 0);
    EXPECT_EQ(run_tool("wc-verify --n 10 --z 0.7"), 2);
    EXPECT_EQ(run_tool("wc-verify --n abc"), 2);
    EXPECT_EQ(run_tool("no-such-command"), 2);
    EXPECT_EQ(run_tool("estimate --eta 0.01 --windows 10"), 3);
    EXPECT_EQ(run_tool("wc-verify --n 6 --z 0.95", "CLUSTERCERT_DENSE_LIMIT=4"), 4);
    EXPECT_EQ(run_tool("--help"), 0);
}

TEST(Cli, ManifestReplayIsByteReproducible) {
    const auto out = scratch("estimate.json");
    ASSERT_EQ(run_tool("estimate --windows 20000 --seed 7 --out " + out.string()), 0);
    const auto manifest_file = cli::manifest_path(out);
    ASSERT_TRUE(fs::exists(manifest_file));
    const auto m = cli::RunManifest::from_json(nlohmann::json::parse(io::read_file(manifest_file)));
    EXPECT_EQ(m.command, "estimate");
    EXPECT_EQ(m.seed, 7u);
    EXPECT_EQ(m.tool_version, cli::kToolVersion);
    ASSERT_EQ(m.outputs.size(), 1u);
    EXPECT_EQ(m.outputs[0].sha256, cli::sha256_hex(io::read_file(out)));
    EXPECT_TRUE(cli::replay(m).matches);
    EXPECT_EQ(run_tool("replay " + manifest_file.string()), 0);

    auto tampered = nlohmann::json::parse(io::read_file(manifest_file));
    tampered["outputs"][0]["sha256"] = std::string(64, '0');
    const auto bad = scratch("tampered.manifest.json");
    io::write_atomic(bad, tampered.dump(2));
    EXPECT_EQ(run_tool("replay " + bad.string()), 1);
    fs::remove_all(out.parent_path());
}

TEST(Cli, Sha256KnownVector) {
    EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
