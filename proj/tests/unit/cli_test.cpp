#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"

using namespace bettimap;
using cli::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("bettimap_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string config_error_path(const std::string& cmd, const json& file, const json& over = json::object()) {
  try {
    cli::make_config(cmd, file, over);
  } catch (const cli::ConfigError& e) {
    return e.path();
  }
  return "<none>";
}

int run_binary(const std::string& args) {
  std::string cmd = std::string(BETTIMAP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, ValidationNamesTheField) {
  json ok = {{"sections", {"2"}}};
  EXPECT_EQ(config_error_path("scan", ok), "<none>");
  EXPECT_EQ(config_error_path("scan", {{"sections", {"2"}}, {"disc", "0.9,0,0.2"}}), "disc");
  EXPECT_EQ(config_error_path("scan", {{"sections", {"2", "(l+"}}}), "sections[1].x");
  EXPECT_EQ(config_error_path("scan", {{"sections", {{{"x", "2"}, {"sign", 0}}}}}), "sections[0].sign");
  EXPECT_EQ(config_error_path("scan", {{"sections", {"2"}}, {"prec", 32}}), "prec");
  EXPECT_EQ(config_error_path("scan", {{"sections", {"2"}}, {"colour", "red"}}), "colour");
  EXPECT_EQ(config_error_path("scan", json::object()), "sections");
  EXPECT_EQ(config_error_path("scan", {{"sections", {"O"}}}), "sections[0].x");
  EXPECT_EQ(config_error_path("heights", ok), "lambda");
  EXPECT_EQ(config_error_path("heights", {{"sections", {"2"}}, {"lambda", "1"}}), "lambda");
  EXPECT_EQ(config_error_path("frobnicate", ok), "command");
  EXPECT_EQ(config_error_path("periods", json::object()), "<none>");
}

TEST(Config, OverridesWin) {
  json file = {{"sections", {"2", "3"}}, {"prec", 96}, {"disc", {{"re", 0.5}, {"im", 0.0}, {"radius", 0.1}}}};
  json over = {{"prec", 192}, {"disc", {{"re", 0.4}, {"im", 0.1}, {"radius", 0.15}}}};
  auto c = cli::make_config("scan", file, over);
  EXPECT_EQ(c.prec, 192);
  EXPECT_DOUBLE_EQ(c.disc.re, 0.4);
  EXPECT_DOUBLE_EQ(c.disc.radius, 0.15);
  EXPECT_EQ(c.sections.size(), 2u);
  EXPECT_EQ(c.working_bits(), 192 + 32);
}

TEST(Config, SectionAndDiscArguments) {
  auto s = cli::parse_section_arg("(l+3)/2:-1", "s");
  EXPECT_EQ(s.x, "(l+3)/2");
  EXPECT_EQ(s.sign, -1);
  EXPECT_THROW(cli::parse_section_arg("2:7", "s"), cli::ConfigError);
  auto d = cli::parse_disc("0.5,0.1,0.2", "disc");
  EXPECT_DOUBLE_EQ(d.im, 0.1);
  EXPECT_THROW(cli::parse_disc("0.5,0.1", "disc"), cli::ConfigError);
  EXPECT_THROW(cli::parse_disc("0.5,x,0.2", "disc"), cli::ConfigError);
}

TEST(Run, DivseqWritesDivisorsAndXi) {
  auto dir = scratch("divseq");
  auto c = cli::make_config("divseq", {{"sections", {"2"}}, {"nmax", 12}, {"out", dir.string()}}, json::object());
  auto r = cli::run(c);
  EXPECT_EQ(r.exit_code, 0);
  auto doc = json::parse(slurp(dir / "divseq.json"));
  ASSERT_EQ(doc["divisors"].size(), 12u);
  EXPECT_EQ(doc["divisors"][1]["divisor"], json::parse(R"([{"place": "-2 + l", "mult": 1}])"));
  EXPECT_TRUE(doc["divisors"][0]["divisor"].empty());
  EXPECT_TRUE(fs::exists(dir / "summary.json"));
  EXPECT_EQ(r.summary["artifacts"][0]["certified_bits"], 128);
}

TEST(Run, ScanIsDeterministicAcrossThreadCounts) {
  json base = {{"sections", {"2", "3"}}, {"tmax", 3}, {"grid", 8}, {"prec", 96}};
  std::string csv[2];
  json result[2];
  for (int k = 0; k < 2; ++k) {
    auto dir = scratch("det" + std::to_string(k));
    json over = {{"threads", k == 0 ? 1 : 4}, {"out", dir.string()}};
    auto r = cli::run(cli::make_config("scan", base, over));
    EXPECT_EQ(r.exit_code, 0);
    csv[k] = slurp(dir / "scan.csv");
    result[k] = cli::strip_timings(r.summary)["result"];
  }
  EXPECT_EQ(csv[0], csv[1]);
  EXPECT_EQ(result[0].dump(), result[1].dump());
}

TEST(Run, PlantedTorsionTangencyFoundWithOracle) {
  auto dir = scratch("planted");
  json cfg = {{"sections", {"25/21 - 3/10*(l - 125/189)"}}, {"tmax", 3}, {"grid", 16}, {"oracle", true},
              {"out", dir.string()}};
  auto r = cli::run(cli::make_config("scan", cfg, json::object()));
  EXPECT_EQ(r.exit_code, 0);
  auto csv = slurp(dir / "scan.csv");
  EXPECT_NE(csv.find("3,2,0,0.661375661375661375661375661375"), std::string::npos) << csv;
  EXPECT_NE(csv.find(",both\n"), std::string::npos);
  EXPECT_EQ(csv.find("symbolic-oracle"), std::string::npos);
}

TEST(Run, IdenticalSectionsRefused) {
  auto dir = scratch("ident");
  auto r = cli::run(cli::make_config("scan", {{"sections", {"2", "2"}}, {"tmax", 2}, {"grid", 8}, {"out", dir.string()}},
                                     json::object()));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.summary["status"], "failed");
  EXPECT_NE(r.summary["error"].get<std::string>().find("section pair identically related"), std::string::npos);
}

TEST(Run, HeightsReport) {
  auto dir = scratch("heights");
  auto r = cli::run(cli::make_config("heights", {{"sections", {"2", "l"}}, {"lambda", "3"}, {"out", dir.string()}},
                                     json::object()));
  EXPECT_EQ(r.exit_code, 0);
  auto doc = r.summary["result"];
  EXPECT_EQ(doc["H_lambda"], "3");
  EXPECT_EQ(doc["sections"][1]["torsion"], true);
  EXPECT_EQ(doc["sections"][0]["torsion"], false);
}

TEST(Binary, ExitCodes) {
  auto dir = scratch("bin");
  EXPECT_EQ(run_binary("divseq -s 2 --nmax 3 --out " + dir.string()), 0);
  EXPECT_EQ(run_binary("scan -s 2 --disc 0.8,0,0.3 --out " + dir.string()), 1);
  EXPECT_EQ(run_binary("scan --out " + dir.string()), 1);
  EXPECT_EQ(run_binary("scan -s 2 --bogus 3"), 1);
  EXPECT_EQ(run_binary("scan -s 2 -s 2 --tmax 2 --grid 8 --out " + dir.string()), 2);
  EXPECT_EQ(run_binary("--help"), 0);
}
