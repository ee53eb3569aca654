#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "landau/eigenfunctions.hpp"
#include "landau/spectra.hpp"
#include "landau/units.hpp"
#include "support/oracles.hpp"

namespace landau::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    root_ = fs::temp_directory_path() / (std::string("landau_cli_") + info->name());
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  std::string dir(const std::string& name) const { return (root_ / name).string(); }

  static std::string read(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
  }
  static json manifest(const std::string& d) { return json::parse(read(fs::path(d) / "manifest.json")); }

  static std::vector<std::vector<std::string>> csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(read(p));
    std::string line;
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::istringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) cells.push_back(cell);
      rows.push_back(cells);
    }
    return rows;
  }

  // Every listed output plus the manifest, byte for byte.
  static void expect_same_outputs(const std::string& a, const std::string& b) {
    const auto m = manifest(a);
    EXPECT_EQ(read(fs::path(a) / "manifest.json"), read(fs::path(b) / "manifest.json"));
    for (const auto& name : m["outputs"]) {
      const auto file = name.get<std::string>();
      EXPECT_EQ(read(fs::path(a) / file), read(fs::path(b) / file)) << file;
    }
  }

  fs::path root_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"density", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"density", "--n", "x", "--m-l", "0"}).code, kExitUsage);
}

TEST_F(CliTest, TableGroundRow) {
  const auto r = invoke({"table", "--max-n", "0", "--out", dir("t")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv(fs::path(dir("t")) / "table.csv");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][0], "0");
  EXPECT_EQ(std::stod(rows[1][3]), 1.0 / std::sqrt(std::numbers::pi));
  EXPECT_EQ(rows[1][4], "1");
}

TEST_F(CliTest, TableRows) {
  ASSERT_EQ(invoke({"table", "--max-n", "2", "--out", dir("t")}).code, 0);
  const auto doc = json::parse(read(fs::path(dir("t")) / "table.json"));
  bool found = false;
  for (const auto& row : doc["rows"]) {
    if (row["n"] == 2 && row["m_l"] == 0) {
      EXPECT_EQ(row["coefficients"], json::parse("[-1, 0, 1]"));
      EXPECT_EQ(row["norm_denominator"], 1);
      found = true;
    }
  }
  EXPECT_TRUE(found);

  ASSERT_EQ(invoke({"table", "--max-n", "8", "--out", dir("t8")}).code, 0);
  const auto big = json::parse(read(fs::path(dir("t8")) / "table.json"));
  EXPECT_EQ(big["rows"].size(), 45u);
  EXPECT_EQ(invoke({"table", "--max-n", "9", "--out", dir("t9")}).code, kExitDomain);
}

TEST_F(CliTest, DensityF40HasTwoRings) {
  const auto r = invoke({"density", "--n", "4", "--m-l", "0", "--out", dir("d")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(manifest(dir("d"))["summary"]["interior_zeros"], 2);
  const auto rows = csv(fs::path(dir("d")) / "density.csv");
  ASSERT_EQ(rows.size(), 1025u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"rho", "density"}));
  // Values round-trip exactly to the library profile.
  const auto p = sample_profile({4, 0}, 8.0, 1024);
  for (std::size_t i = 0; i < p.rho.size(); ++i) {
    EXPECT_EQ(std::stod(rows[i + 1][0]), p.rho[i]);
    EXPECT_EQ(std::stod(rows[i + 1][1]), p.density[i]);
  }
}

TEST_F(CliTest, DensityGroundStatePeak) {
  ASSERT_EQ(invoke({"density", "--n", "0", "--m-l", "0", "--format", "json,ascii", "--out", dir("d")}).code, 0);
  const auto m = manifest(dir("d"));
  EXPECT_NEAR(m["summary"]["peak_rho"].get<double>(), 1.0 / std::sqrt(2.0), 8.0 / 1023);
  EXPECT_EQ(m["summary"]["interior_zeros"], 0);
  EXPECT_EQ(m["outputs"], json::parse(R"(["density.json", "density.txt"])"));
  const auto doc = json::parse(read(fs::path(dir("d")) / "density.json"));
  EXPECT_EQ(doc["rho"].size(), 1024u);
}

TEST_F(CliTest, DensityPlane) {
  ASSERT_EQ(invoke({"density", "--n", "2", "--m-l", "2", "--plane", "21", "--out", dir("d")}).code, 0);
  const auto rows = csv(fs::path(dir("d")) / "density_plane.csv");
  ASSERT_EQ(rows.size(), 1u + 21 * 21);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "y", "density"}));
  // The centre of the grid is the origin, where F(2,2) vanishes.
  EXPECT_EQ(std::stod(rows[1 + 10 * 21 + 10][2]), 0.0);
  EXPECT_TRUE(fs::exists(fs::path(dir("d")) / "density_plane.svg"));
}

TEST_F(CliTest, DensityRejectsBadInput) {
  const auto r = invoke({"density", "--n", "3", "--m-l", "0", "--out", dir("d")});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("n - |m_l| even"), std::string::npos);
  EXPECT_FALSE(fs::exists(fs::path(dir("d")) / "manifest.json"));
  EXPECT_EQ(invoke({"density", "--n", "0", "--m-l", "0", "--format", "png"}).code, kExitUsage);
  EXPECT_EQ(invoke({"density", "--n", "0", "--m-l", "0", "--points", "4"}).code, kExitDomain);
}

TEST_F(CliTest, SpectrumFirstFiveShellsSpinUp) {
  ASSERT_EQ(invoke({"spectrum", "--n-max", "4", "--spin", "up", "--out", dir("s")}).code, 0);
  const auto rows = csv(fs::path(dir("s")) / "spectrum.csv");
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "m_l", "m_s", "r", "E_over_hbar_omega"}));
  ASSERT_EQ(rows.size(), 16u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int n = std::stoi(rows[i][0]), m = std::stoi(rows[i][1]);
    EXPECT_EQ(rows[i][2], "0.5");
    EXPECT_EQ(std::stoi(rows[i][3]), (n + m) / 2 + 1);
    EXPECT_EQ(std::stod(rows[i][4]), 2.0 * std::stoi(rows[i][3]));
  }
  const auto deg = csv(fs::path(dir("s")) / "degeneracy.csv");
  const std::vector<int> expected{0, 5, 4, 3, 2, 1};
  ASSERT_EQ(deg.size(), expected.size() + 1);
  for (std::size_t r = 0; r < expected.size(); ++r) EXPECT_EQ(std::stoi(deg[r + 1][2]), expected[r]);
}

TEST_F(CliTest, SpectrumSingleShell) {
  ASSERT_EQ(invoke({"spectrum", "--n-max", "0", "--spin", "up", "--out", dir("s")}).code, 0);
  EXPECT_EQ(csv(fs::path(dir("s")) / "spectrum.csv").size(), 2u);
  EXPECT_EQ(invoke({"spectrum", "--spin", "sideways"}).code, kExitUsage);
  EXPECT_EQ(invoke({"spectrum", "--n-max", "-1"}).code, kExitDomain);
}

TEST_F(CliTest, SpectrumCountsMatchBruteForce) {
  ASSERT_EQ(invoke({"spectrum", "--n-max", "7", "--r-max", "5", "--out", dir("s")}).code, 0);
  const auto doc = json::parse(read(fs::path(dir("s")) / "spectrum.json"));
  for (const auto& level : doc["degeneracy"]) {
    const int r = level["r"];
    EXPECT_EQ(level["count"].get<std::size_t>(), oracle::brute_force_landau(r, 7, true, true).size());
  }
}

TEST_F(CliTest, DiracCompareStrongField) {
  ASSERT_EQ(invoke({"dirac-compare", "--n", "0", "--m-l", "0", "--kappa", "0.25", "--out", dir("c")}).code, 0);
  const auto m = manifest(dir("c"));
  const auto& res = m["results"];
  EXPECT_GT(res["mean_radius_dirac"].get<double>(), res["mean_radius_schrodinger"].get<double>());
  EXPECT_EQ(res["energy_dirac_m0c2"].get<double>(), std::sqrt(2.0));
  EXPECT_EQ(res["energy_schrodinger_hbar_omega"].get<double>(), 2.0);
  EXPECT_EQ(m["parameters"]["zeta"].get<double>(), 0.0);
  EXPECT_EQ(m["dimensionless"]["kappa"].get<double>(), 0.25);
  const auto rows = csv(fs::path(dir("c")) / "dirac_compare.csv");
  EXPECT_EQ(rows[0], (std::vector<std::string>{"rho", "density_schrodinger", "density_dirac"}));
  EXPECT_EQ(rows.size(), 1025u);
  bool all_four = false;
  for (const auto& note : m["notes"]) all_four |= note.get<std::string>().find("four") != std::string::npos;
  EXPECT_TRUE(all_four);
}

TEST_F(CliTest, DiracCompareWeakFieldCurvesCoincide) {
  ASSERT_EQ(invoke({"dirac-compare", "--n", "0", "--m-l", "0", "--kappa", "1e-12", "--out", dir("c")}).code, 0);
  EXPECT_LE(manifest(dir("c"))["results"]["sup_difference"].get<double>(), 1e-9);
}

TEST_F(CliTest, DiracCompareFieldInTesla) {
  ASSERT_EQ(invoke({"dirac-compare", "--n", "1", "--m-l", "1", "--B-tesla", "1e8", "--pz", "1e-23",
                    "--out", dir("c")}).code, 0);
  const auto m = manifest(dir("c"));
  const auto s = derive_scales({1e8, 1e-23});
  EXPECT_EQ(m["dimensionless"]["kappa"].get<double>(), s.kappa);
  EXPECT_EQ(m["dimensionless"]["zeta"].get<double>(), s.zeta);
  EXPECT_EQ(m["si"]["beta_per_meter"].get<double>(), s.beta);
}

TEST_F(CliTest, DiracCompareErrors) {
  EXPECT_EQ(invoke({"dirac-compare", "--n", "0", "--m-l", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"dirac-compare", "--n", "0", "--m-l", "0", "--kappa", "1", "--B-tesla", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"dirac-compare", "--n", "0", "--m-l", "0", "--kappa", "1", "--zeta", "0", "--pz", "0"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"dirac-compare", "--n", "0", "--m-l", "0", "--kappa", "0"}).code, kExitDomain);
  EXPECT_EQ(invoke({"dirac-compare", "--n", "0", "--m-l", "0", "--kappa", "-1"}).code, kExitDomain);
  EXPECT_EQ(invoke({"dirac-compare", "--n", "2", "--m-l", "1", "--kappa", "0.1"}).code, kExitDomain);
  EXPECT_EQ(invoke({"dirac-compare", "--n", "0", "--m-l", "0", "--kappa", "0.1", "--m-s", "left"}).code, kExitUsage);
}

TEST_F(CliTest, SweepFrames) {
  ASSERT_EQ(invoke({"sweep", "--kappa-min", "1e-6", "--kappa-max", "0.25", "--steps", "2", "--out", dir("w")}).code, 0);
  auto m = manifest(dir("w"));
  ASSERT_EQ(m["frames"].size(), 2u);
  EXPECT_EQ(m["outputs"].size(), 2u);
  EXPECT_EQ(m["frames"][0]["kappa"].get<double>(), 1e-6);
  EXPECT_EQ(m["frames"][1]["kappa"].get<double>(), 0.25);

  ASSERT_EQ(invoke({"sweep", "--kappa-min", "1e-8", "--kappa-max", "1", "--steps", "9", "--out", dir("w9")}).code, 0);
  m = manifest(dir("w9"));
  ASSERT_EQ(m["frames"].size(), 9u);
  double previous = -1.0;
  for (std::size_t i = 0; i < 9; ++i) {
    const auto& f = m["frames"][i];
    EXPECT_NEAR(f["kappa"].get<double>(), std::pow(10.0, -8.0 + static_cast<double>(i)), 1e-12 * std::pow(10.0, -8.0 + static_cast<double>(i)));
    EXPECT_GE(f["sup_difference"].get<double>(), previous);
    previous = f["sup_difference"].get<double>();
    const double kappa = f["kappa"].get<double>();
    const double e1 = std::sqrt(1 + 4 * kappa) + 1;
    const double x = 4 * kappa / (e1 * e1);
    EXPECT_NEAR(f["fourth_component_weight"].get<double>(), x / (1 + x), 1e-10);
    EXPECT_NEAR(f["fourth_component_weight"].get<double>(), f["fourth_component_weight_closed_form"].get<double>(), 1e-10);
    EXPECT_TRUE(fs::exists(fs::path(dir("w9")) / f["file"].get<std::string>()));
  }
}

TEST_F(CliTest, SweepRejectsBadRange) {
  EXPECT_EQ(invoke({"sweep", "--kappa-min", "0", "--kappa-max", "1"}).code, kExitDomain);
  EXPECT_EQ(invoke({"sweep", "--kappa-min", "0.5", "--kappa-max", "0.1"}).code, kExitDomain);
  EXPECT_EQ(invoke({"sweep", "--steps", "1"}).code, kExitDomain);
}

TEST_F(CliTest, DeterministicAcrossRunsAndThreads) {
  const std::vector<std::vector<std::string>> commands{
      {"density", "--n", "6", "--m-l", "-2", "--format", "csv,json,svg,ascii", "--plane", "33"},
      {"dirac-compare", "--n", "2", "--m-l", "0", "--m-s", "down", "--kappa", "0.3", "--zeta", "0.2",
       "--points", "3001"}};
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::vector<std::string> dirs;
    for (const char* threads : {"1", "1", "1", "7"}) {
      auto args = commands[c];
      dirs.push_back(dir("run" + std::to_string(c) + "_" + std::to_string(dirs.size())));
      args.insert(args.end(), {"--threads", threads, "--out", dirs.back()});
      ASSERT_EQ(invoke(args).code, 0);
    }
    for (std::size_t i = 1; i < dirs.size(); ++i) expect_same_outputs(dirs[0], dirs[i]);
  }
}

TEST_F(CliTest, ReplayReproducesOutputs) {
  const std::vector<std::vector<std::string>> commands{
      {"table", "--max-n", "4"},
      {"density", "--n", "4", "--m-l", "0", "--format", "csv,svg", "--rho-max", "7.5"},
      {"spectrum", "--n-max", "5"},
      {"dirac-compare", "--n", "1", "--m-l", "1", "--B-tesla", "2.5e7", "--pz", "2e-23"},
      {"sweep", "--n", "1", "--m-l", "-1", "--m-s", "-1/2", "--kappa-min", "0.001", "--kappa-max", "0.1",
       "--steps", "3", "--zeta", "0.1", "--points", "257"}};
  for (std::size_t c = 0; c < commands.size(); ++c) {
    auto args = commands[c];
    const auto first = dir("first" + std::to_string(c));
    const auto again = dir("again" + std::to_string(c));
    args.insert(args.end(), {"--out", first});
    ASSERT_EQ(invoke(args).code, 0);
    const auto r = invoke({"replay", (fs::path(first) / "manifest.json").string(), "--out", again});
    ASSERT_EQ(r.code, 0) << r.err;
    expect_same_outputs(first, again);
  }
  EXPECT_EQ(invoke({"replay", dir("missing.json")}).code, kExitUsage);
}

}  // namespace
}  // namespace landau::cli
