// Copyright 2026 The regular-qgraph Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "rqg/errors.hpp"

namespace rqg::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("rqg_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_config(const std::string& body, const std::string& name = "config.json") {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p;
  }

  int invoke(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  static std::vector<std::string> lines(const fs::path& p) {
    std::vector<std::string> out;
    std::ifstream f(p);
    for (std::string line; std::getline(f, line);) out.push_back(line);
    return out;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

constexpr const char* kStep = R"({"potential": {"type": "step", "b": 0.3, "lambda": 0.5}})";

TEST_F(CliTest, SolveWritesSpectrumAndRegularity) {
  const fs::path cfg = write_config(kStep);
  const fs::path out = dir_ / "solve";
  ASSERT_EQ(invoke({"solve", "--config", cfg.string(), "--out", out.string()}), kOk)
      << err_.str();
  const auto rows = lines(out / "spectrum.csv");
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows[0], "n,separator,level,residual");
  const auto reg = nlohmann::json::parse(slurp(out / "regularity.json"));
  EXPECT_TRUE(reg.at("is_regular").get<bool>());
  EXPECT_EQ(reg.at("mu").get<long>(), 1);
  EXPECT_EQ(reg.at("weyl_residual").get<long>(), 0);
  EXPECT_NEAR(reg.at("alpha").get<double>(), 0.1715729, 1e-7);
}

TEST_F(CliTest, SolveOutputIsByteStable) {
  const fs::path cfg = write_config(kStep);
  ASSERT_EQ(invoke({"solve", "--config", cfg.string(), "--out", (dir_ / "a").string()}), kOk);
  ASSERT_EQ(invoke({"solve", "--config", cfg.string(), "--out", (dir_ / "b").string()}), kOk);
  EXPECT_EQ(slurp(dir_ / "a" / "spectrum.csv"), slurp(dir_ / "b" / "spectrum.csv"));
  EXPECT_EQ(slurp(dir_ / "a" / "regularity.json"), slurp(dir_ / "b" / "regularity.json"));
}

TEST_F(CliTest, BarePotentialConfigIsAccepted) {
  const fs::path cfg = write_config(R"({"type": "step", "b": 0.3, "lambda": 0.5})");
  EXPECT_EQ(invoke({"solve", "--config", cfg.string(), "--out", (dir_ / "o").string()}), kOk);
}

TEST_F(CliTest, TrivialGraphIsADomainError) {
  const fs::path cfg = write_config(R"({"potential": {"type": "step", "b": 0.5, "lambda": 0}})");
  const fs::path out = dir_ / "trivial";
  EXPECT_EQ(invoke({"solve", "--config", cfg.string(), "--out", out.string()}), kDomain);
  EXPECT_FALSE(err_.str().empty());
  EXPECT_FALSE(fs::exists(out / "spectrum.csv"));
}

TEST_F(CliTest, MissingConfigIsAUsageError) {
  const fs::path out = dir_ / "missing";
  EXPECT_EQ(invoke({"solve", "--config", (dir_ / "nope.json").string(), "--out", out.string()}),
            kUsage);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_EQ(invoke({"solve", "--out", out.string()}), kUsage);
  EXPECT_EQ(invoke({"no-such-command"}), kUsage);
  EXPECT_EQ(invoke({}), kUsage);
}

TEST_F(CliTest, InvalidConfigIsAUsageError) {
  const fs::path unknown = write_config(
      R"({"potential": {"type": "step", "b": 0.3, "lambda": 0.5}, "levls": 5})", "a.json");
  EXPECT_EQ(invoke({"solve", "--config", unknown.string(), "--out", dir_.string()}), kUsage);
  EXPECT_NE(err_.str().find("levls"), std::string::npos);

  const fs::path broken = write_config("{", "b.json");
  EXPECT_EQ(invoke({"solve", "--config", broken.string(), "--out", dir_.string()}), kUsage);

  const fs::path big = write_config(
      R"({"potential": {"type": "step", "b": 0.3, "lambda": 0.5}, "budget": 35})", "c.json");
  EXPECT_EQ(invoke({"orbits", "--config", big.string(), "--out", dir_.string()}), kUsage);
}

TEST_F(CliTest, ExpandReportsEstimates) {
  const fs::path cfg = write_config(
      R"({"potential": {"type": "step", "b": 0.3, "lambda": 0.5}, "n": 1, "budgets": [0, 5]})");
  const fs::path out = dir_ / "expand";
  ASSERT_EQ(invoke({"expand", "--config", cfg.string(), "--out", out.string()}), kOk)
      << err_.str();
  const auto rows = nlohmann::json::parse(slurp(out / "expansion.json"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].at("terms_used").get<int>(), 0);
  EXPECT_NEAR(rows[0].at("estimate").get<double>(), 5.9277216 - 3.9518144 / 2, 1e-6);
  EXPECT_NEAR(rows[1].at("estimate").get<double>(), 4.1161, 1e-4);
  EXPECT_EQ(rows[1].at("terms_used").get<int>(), 23);
  EXPECT_NE(out_.str().find("n=1 budget=5"), std::string::npos);
}

TEST_F(CliTest, ExpandNeedsTwoBonds) {
  const fs::path cfg = write_config(
      R"({"potential": {"type": "manhattan", "widths": [0.2, 0.3, 0.5], "lambdas": [0, 0.5, 0.75]}})");
  EXPECT_EQ(invoke({"expand", "--config", cfg.string(), "--out", (dir_ / "m").string()}),
            kDomain);
  EXPECT_EQ(invoke({"solve", "--config", cfg.string(), "--out", (dir_ / "m").string()}), kOk);
}

TEST_F(CliTest, OrbitsDump) {
  const fs::path cfg = write_config(
      R"({"potential": {"type": "step", "b": 0.3, "lambda": 0.5}, "budget": 3})");
  const fs::path out = dir_ / "orbits";
  ASSERT_EQ(invoke({"orbits", "--config", cfg.string(), "--out", out.string()}), kOk);
  EXPECT_EQ(lines(out / "orbits.csv").size(), 6u);
}

TEST_F(CliTest, StatsRespectsSpacingBounds) {
  const fs::path cfg = write_config(
      R"({"potential": {"type": "step", "b": 0.3, "lambda": 0.5}, "levels": 2000, "bins": 8})");
  const fs::path out = dir_ / "stats";
  ASSERT_EQ(invoke({"stats", "--config", cfg.string(), "--out", out.string()}), kOk);
  const auto s = nlohmann::json::parse(slurp(out / "spacing.json"));
  EXPECT_GE(s.at("min_spacing").get<double>(), 3.518023 - 1e-9);
  EXPECT_LE(s.at("max_spacing").get<double>(), 4.385607 + 1e-9);
  EXPECT_EQ(s.at("weyl_residual").get<long>(), 0);
  EXPECT_EQ(lines(out / "spacing_histogram.csv").size(), 9u);
}

TEST_F(CliTest, DensityGrid) {
  const fs::path cfg = write_config(
      R"({"potential": {"type": "step", "b": 0.3, "lambda": 0.5}, "budget": 8, "points": 11})");
  const fs::path out = dir_ / "density";
  ASSERT_EQ(invoke({"density", "--config", cfg.string(), "--out", out.string()}), kOk);
  EXPECT_EQ(lines(out / "density.csv").size(), 12u);
}

TEST_F(CliTest, VerifyCommandPasses) {
  EXPECT_EQ(invoke({"verify-paper"}), kOk) << out_.str();
  EXPECT_NE(out_.str().find("8 of 8 criteria passed"), std::string::npos) << out_.str();
}

TEST_F(CliTest, UnwritableOutputIsAnIoError) {
  const fs::path cfg = write_config(kStep);
  const fs::path blocker = dir_ / "file";
  std::ofstream(blocker) << "x";
  EXPECT_EQ(invoke({"solve", "--config", cfg.string(), "--out", (blocker / "sub").string()}),
            kIoError);
}

TEST(ConfigFromJson, ScalarsAndLists) {
  const RunConfig c = config_from_json(nlohmann::json::parse(
      R"({"potential": {"type": "step", "b": 0.3, "lambda": 0.5}, "n": [1, 2], "budgets": 5})"));
  EXPECT_EQ(c.level_indices, (std::vector<long>{1, 2}));
  EXPECT_EQ(c.budgets, (std::vector<int>{5}));
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"budgets": [5, 5]})")), InvalidInput);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"levels": 0})")), InvalidInput);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"levels": 1.5})")), InvalidInput);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"smoothing": -1})")), InvalidInput);
}

}  // namespace
}  // namespace rqg::cli
