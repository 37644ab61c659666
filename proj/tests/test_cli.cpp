#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minsurf/cli.hpp"

namespace fs = std::filesystem;
using minsurf::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("minsurf_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, VerifyCirclePasses) {
  const Result r = call({"verify", "--family", "circle", "--c", "1", "--ns", "33", "--nt", "17"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"]["status"], "pass");
  EXPECT_EQ(j["grid"]["n_s"], 33);
}

TEST(Cli, PrintedHelixFailsWithErratum) {
  const Result r = call({"verify", "--family", "helix", "--c", "0", "--variant", "printed"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"]["status"], "fail");
  EXPECT_TRUE(j["errata"]["flagged"].get<bool>());
}

TEST(Cli, OdeFamilyVerifies) {
  const Result r = call({"verify", "--family", "ode", "--kappa", "0.7071067811865476", "--tau",
                         "0.7071067811865476", "--theta", "1", "--ns", "17", "--nt", "9"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["tier"], "ode");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  const Result unknown = call({"verify", "--family", "circle", "--bogus"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_FALSE(unknown.err.empty());
  EXPECT_EQ(call({"verify", "--family", "circle", "--c", "1.5"}).code, 2);
  EXPECT_EQ(call({"verify", "--family", "torus"}).code, 2);
  EXPECT_EQ(call({"verify", "--family", "circle", "--ns", "1"}).code, 2);
  EXPECT_EQ(call({"reproduce", "--figure", "9", "--outdir", "/tmp"}).code, 2);
  EXPECT_EQ(call({"solve", "--kappa", "0"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const Result r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, VerifyWritesReportFile) {
  const fs::path dir = scratch("report");
  const fs::path file = dir / "r.json";
  const Result r = call({"verify", "--family", "helix", "--c", "0.5", "--ns", "9", "--nt", "5",
                         "--out", file.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(slurp(file))["verdict"]["status"], "pass");
}

TEST(Cli, MeshWritesObj) {
  const fs::path dir = scratch("mesh");
  const fs::path file = dir / "m.obj";
  const Result r = call({"mesh", "--family", "circle", "--c", "0", "--ns", "5", "--nt", "4", "--out",
                         file.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string text = slurp(file);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 20 + 24);
}

TEST(Cli, SolveCsv) {
  const Result r = call({"solve", "--kappa", "0.25", "--theta", "0.5", "--t-max", "1", "--step", "0.01"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t,u,v,w,ut,vt,wt,P,Q");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 201);
}

TEST(Cli, ConfigFileFlagsWin) {
  const fs::path dir = scratch("config");
  const fs::path cfg = dir / "c.cfg";
  std::ofstream(cfg) << "# defaults\nfamily=helix\nc=0\nvariant=printed\nns=9\nnt=5\n";
  const Result from_cfg = call({"verify", "--config", cfg.string()});
  EXPECT_EQ(from_cfg.code, 1);
  const Result override = call({"verify", "--config", cfg.string(), "--variant", "corrected"});
  EXPECT_EQ(override.code, 0) << override.err;
  EXPECT_EQ(nlohmann::json::parse(override.out)["grid"]["n_s"], 9);
}

TEST(Cli, ExitCodeTracksVerdict) {
  for (const char* variant : {"printed", "corrected"}) {
    const Result r = call({"verify", "--family", "helix", "--c", "0.3", "--variant", variant, "--ns",
                           "9", "--nt", "5"});
    const bool pass = nlohmann::json::parse(r.out)["verdict"]["status"] == "pass";
    EXPECT_EQ(r.code, pass ? 0 : 1);
  }
}

TEST(Cli, ReproduceIsDeterministic) {
  const fs::path a = scratch("repro_a"), b = scratch("repro_b");
  const Result ra = call({"reproduce", "--figure", "4", "--outdir", a.string()});
  const Result rb = call({"reproduce", "--figure", "4", "--outdir", b.string()});
  EXPECT_EQ(ra.code, 0) << ra.err;
  EXPECT_EQ(rb.code, 0) << rb.err;
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(a)) names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"fig4_circle_c_1.obj", "fig4_circle_c_sqrt3_2.obj",
                                              "fig4_circle_c_sqrt5_3.obj"}));
  for (const auto& n : names) EXPECT_EQ(slurp(a / n), slurp(b / n)) << n;
}
