#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "polycon_cli.hpp"
#include "support.hpp"

namespace ts = testing_support;
using polycon::kPi;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = polycon::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string valueOf(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) == 0) {
      const auto pos = line.find_first_not_of(' ', key.size());
      return line.substr(pos);
    }
  }
  return "";
}

}  // namespace

TEST(Cli, PropsSphericon) {
  const Result r = run({"props", "--n", "2", "--radius", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(valueOf(r.out, "volume")), 2 * kPi / 3, 1e-12);
  EXPECT_NEAR(std::stod(valueOf(r.out, "surface_area")), 2 * std::sqrt(2.0) * kPi, 1e-12);
  EXPECT_EQ(valueOf(r.out, "conic"), "circle");
  EXPECT_FALSE(valueOf(r.out, "integral_discrepancy").empty());
  EXPECT_FALSE(valueOf(r.out, "contact_length_min").empty());
}

TEST(Cli, PropsJson) {
  const Result r = run({"props", "--n", "5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schemaVersion"], 1);
  EXPECT_EQ(doc["n"], 5);
  EXPECT_EQ(doc["conic"], "hyperbola");
  EXPECT_LT(std::abs(doc["integral"]["discrepancy"].get<double>()), 1e-10);
}

TEST(Cli, ValidationErrors) {
  Result r = run({"props", "--n", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("n >= 2"), std::string::npos);
  EXPECT_EQ(run({"props", "--n", "3", "--radius", "-2"}).code, 1);
  EXPECT_EQ(run({"frobnicate", "--n", "3"}).code, 1);
  EXPECT_EQ(run({"props", "--n", "3", "--bogus"}).code, 1);
  EXPECT_EQ(run({"props"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"mesh", "--n", "3", "--resolution", "4", "--output", (ts::scratchDir() / "x.obj").string()}).code, 1);
  EXPECT_EQ(run({"mesh", "--n", "3"}).code, 1);
  EXPECT_EQ(run({"roll", "--n", "3", "--step-angle", "0.1"}).code, 1);
  EXPECT_EQ(run({"unroll", "--n", "3", "--format", "png", "--output", "t.png"}).code, 1);
}

TEST(Cli, IoErrorExitCode) {
  EXPECT_EQ(run({"mesh", "--n", "3", "--output", "/nonexistent-dir/m.obj"}).code, 2);
  EXPECT_EQ(run({"unroll", "--n", "3", "--output", "/nonexistent-dir/t.svg"}).code, 2);
}

TEST(Cli, MeshWritesFile) {
  const auto path = ts::scratchDir() / "cli.stl";
  const Result r = run({"mesh", "--n", "4", "--resolution", "16", "--format", "stl", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const ts::StlFile stl = ts::parseStl(ts::readFile(path));
  EXPECT_EQ(std::to_string(stl.count), valueOf(r.out, "triangles"));
  EXPECT_EQ(valueOf(r.out, "watertight"), "true");
}

TEST(Cli, UnrollWritesSvg) {
  const auto path = ts::scratchDir() / "cli.svg";
  const Result r = run({"unroll", "--n", "3", "--radius", "40", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(ts::readFile(path).find("<svg"), std::string::npos);
  EXPECT_EQ(valueOf(r.out, "patches"), "6");
}

TEST(Cli, RollCsvComHeightConstant) {
  const auto path = ts::scratchDir() / "t.csv";
  const Result r = run({"roll", "--n", "3", "--revolutions", "1", "--format", "csv", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(ts::readFile(path));
  std::string line;
  std::getline(in, line);
  double lo = 1e9, hi = -1e9;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    for (int k = 0; k <= 4; ++k) std::getline(ss, cell, ',');
    lo = std::min(lo, std::stod(cell));
    hi = std::max(hi, std::stod(cell));
  }
  EXPECT_LT(hi - lo, 1e-7);
  EXPECT_EQ(valueOf(r.out, "phases"), "6");
}

TEST(Cli, InscribeJson) {
  const Result r = run({"inscribe", "--n", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["edgeLength"].get<double>(), std::sqrt(15.0) - 3.0, 1e-12);
  EXPECT_EQ(doc["vertices"].size(), 6u);
}

TEST(Cli, DeterministicOutput) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"props", "--n", "7", "--json"}, std::vector<std::string>{"roll", "--n", "2"},
        std::vector<std::string>{"inscribe", "--n", "4"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

#ifdef POLYCON_CLI_PATH
TEST(Cli, ExecutableExitCodes) {
  const std::string exe = POLYCON_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("props --n 3"), 0);
  EXPECT_EQ(status("props --n 1"), 1);
  EXPECT_EQ(status("mesh --n 3 --output /nonexistent-dir/a.obj"), 2);
}
#endif
