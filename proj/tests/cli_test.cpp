#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

/// Runs the CLI with the given arguments; stderr is merged into out.
CliRun cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(SPECGRAPH_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(SPECGRAPH_SOURCE_DIR) + "/samples/" + name; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "specgraph_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, GraphExportMatchesGolden) {
  const CliRun r = cli("graph --module " + sample("z12.json") + " --kind zmax --subset max --export dot");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, read_file(std::string(SPECGRAPH_SOURCE_DIR) + "/tests/golden/z12_zmax.dot"));
  const CliRun d = cli("export --module " + sample("z30.json") + " --kind zmax-disjoint");
  EXPECT_EQ(d.code, 0) << d.out;
  EXPECT_EQ(d.out, read_file(std::string(SPECGRAPH_SOURCE_DIR) + "/tests/golden/z30_zmax_disjoint.dot"));
}

TEST(Cli, GraphReportJson) {
  const CliRun r = cli("graph --module " + sample("z30.json") + " --kind zmax-disjoint");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["vertex_count"], 6);
  EXPECT_EQ(j["report"]["edge_count"], 3);
  EXPECT_EQ(j["report"]["connected"], false);
  EXPECT_EQ(j["report"]["bipartite"], true);
  const CliRun t = cli("graph --module " + sample("z12.json") + " --kind ag --format text");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("annihilating over Z/12 over Z"), std::string::npos) << t.out;
}

TEST(Cli, InspectThirty) {
  const CliRun r = cli("inspect --module " + sample("z30.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["max_spec"].size(), 3u);
  const CliRun t = cli("inspect --module " + sample("z30.json") + " --format text");
  EXPECT_NE(t.out.find("Max(M): [4,5,6]"), std::string::npos) << t.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("graph --kind zmax").code, 2);
  EXPECT_EQ(cli("graph --module " + sample("z12.json") + " --kind nope").code, 2);
  EXPECT_EQ(cli("graph --module /nonexistent.json").code, 2);
  EXPECT_EQ(cli("verify --bogus").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, SubsetIndexOutOfRange) {
  const CliRun r = cli("graph --module " + sample("z12.json") + " --subset 99");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("IndexOutOfRange"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("6 submodules"), std::string::npos) << r.out;
}

TEST(Cli, MalformedSpec) {
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"ring": {"modulus": 0}, "module": {"invariant_factors": [4, 6]}})";
  const CliRun r = cli("inspect --module " + bad.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("malformed module spec"), std::string::npos) << r.out;
}

TEST(Cli, BoundExceededNamesTheKnob) {
  const auto big = scratch("big.json");
  std::ofstream(big) << R"({"ring": {"modulus": 0}, "module": {"invariant_factors": [64]}})";
  EXPECT_EQ(cli("inspect --module " + big.string()).code, 0);
  const CliRun r = cli("inspect --module " + big.string(), "SPECGRAPH_MAX_ORDER=32");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("SPECGRAPH_MAX_ORDER"), std::string::npos) << r.out;
}

TEST(Cli, VerifySmallCorpusIsCleanAndDeterministic) {
  const auto a = scratch("a.json"), b = scratch("b.json");
  const CliRun ra = cli("verify --corpus-max-order 48 --out " + a.string());
  const CliRun rb = cli("verify --corpus-max-order 48 --jobs 3 --out " + b.string());
  EXPECT_EQ(ra.code, 0) << ra.out;
  EXPECT_EQ(rb.code, 0) << rb.out;
  EXPECT_EQ(read_file(a), read_file(b));
  const auto j = nlohmann::json::parse(read_file(a));
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_FALSE(j.contains("generated_at"));
}

TEST(Cli, VerifySingleModuleAndClaimSelection) {
  const CliRun r = cli("verify --module " + sample("z30_over_z30.json") + " --claims prop-4.7,thm-4.10 --all-results");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 2u);
  for (const auto& res : j["results"]) EXPECT_EQ(res["status"], "pass") << res.dump();
  EXPECT_EQ(cli("verify --module " + sample("z30.json") + " --claims nope").code, 2);
  const CliRun all = cli("verify --module " + sample("z2_z6_over_z12.json") + " --subset all --format text");
  EXPECT_EQ(all.code, 0) << all.out;
}

TEST(Cli, Explore) {
  const CliRun r = cli("explore --corpus-max-order 30");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["instances"].get<int>(), 0);
  EXPECT_EQ(j["entries"].size(), j["instances"].get<std::size_t>());
  EXPECT_TRUE(j["negative_witnesses"].empty());
}
