#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "onepm/onepm.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(ONEPM_BIN) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("onepm-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string at(const std::string& name) const { return (dir / name).string(); }
  Result gen(const std::string& args) { return run("generate " + args + " -o " + dir.string()); }

  fs::path dir;
};

}  // namespace

TEST_F(Cli, GenerateWritesThreeFiles) {
  const Result r = gen("delta5 --g 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n=21"), std::string::npos);
  for (const char* ext : {".graph", ".1pg", ".witness"}) EXPECT_TRUE(fs::exists(at(std::string("delta5-g4") + ext))) << ext;
  const auto w = onepm::parse_witness(slurp(at("delta5-g4.witness")));
  EXPECT_EQ(w.deficiency, 3);
  EXPECT_EQ(w.matching_upper, 9);
  EXPECT_EQ(onepm::parse_edge_list(slurp(at("delta5-g4.graph"))).vertex_count(), 21);
}

TEST_F(Cli, GenerateAllFamilies) {
  EXPECT_EQ(gen("delta3 --s 4").code, 0);
  EXPECT_EQ(gen("delta4 --s 8").code, 0);
  EXPECT_EQ(gen("delta4-k5 --k 6").code, 0);
  EXPECT_EQ(gen("delta6 --g 3").code, 0);
  // The block is available, so delta7 succeeds rather than reporting exit 5.
  EXPECT_EQ(gen("delta7 --g 1").code, 0);
  EXPECT_EQ(run("validate " + at("delta7-g1.1pg")).code, 0);
}

TEST_F(Cli, RandomIsDeterministicAndPinned) {
  ASSERT_EQ(gen("random --n 12 --x 3 --seed 7").code, 0);
  const std::string first = slurp(at("random-n12-x3-seed7.1pg"));
  EXPECT_EQ(onepm::fnv1a64(first), "94a51257a4640f7f");
  ASSERT_EQ(gen("random --n 12 --x 3 --seed 7").code, 0);
  EXPECT_EQ(slurp(at("random-n12-x3-seed7.1pg")), first);
  const Result v = run("validate " + at("random-n12-x3-seed7.1pg"));
  EXPECT_NE(v.out.find("crossed=6"), std::string::npos);
}

TEST_F(Cli, SolveModes) {
  std::ofstream(at("k4.graph")) << "graph 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n";
  const Result m = run("solve " + at("k4.graph") + " --mode matching");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out.rfind("matching 2\n", 0), 0u);
  EXPECT_EQ(m.out, "matching 2\nm 0 1\nm 2 3\n");

  ASSERT_EQ(gen("delta3 --s 4").code, 0);
  const Result o = run("solve " + at("delta3-s4.graph") + " --mode oracle");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("deficiency: 8\n"), std::string::npos);
  const Result d = run("solve " + at("delta3-s4.graph") + " --mode duality");
  EXPECT_EQ(d.out, "equal\n");
  // A drawing file is accepted as graph input too.
  EXPECT_EQ(run("solve " + at("delta3-s4.1pg")).out.rfind("matching 4\n", 0), 0u);
}

TEST_F(Cli, SolveOracleTooLarge) {
  ASSERT_EQ(gen("delta5 --g 5").code, 0);
  EXPECT_EQ(run("solve " + at("delta5-g5.graph") + " --mode oracle").code, 3);
  EXPECT_EQ(run("solve " + at("delta5-g5.graph") + " --mode oracle --limit 26").code, 0);
}

TEST_F(Cli, CheckTheorem1) {
  ASSERT_EQ(gen("delta4 --s 8").code, 0);
  const Result r = run("check theorem1 " + at("delta4-s8.graph") + " --delta 4 --provenance " + at("delta4-s8.1pg"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "|M|=8 bound=8 holds tight\n");
  ASSERT_EQ(gen("delta4 --s 4").code, 0);
  const Result na = run("check theorem1 " + at("delta4-s4.1pg") + " --delta 4");
  EXPECT_EQ(na.code, 0);
  EXPECT_NE(na.out.find("not-applicable threshold=20"), std::string::npos);
  // A plain edge list carries no provenance.
  EXPECT_EQ(run("check theorem1 " + at("delta4-s8.graph") + " --delta 4").code, 3);
}

TEST_F(Cli, CheckCharge) {
  ASSERT_EQ(gen("delta3 --s 4").code, 0);
  const Result r = run("check charge " + at("delta3-s4.1pg") + " --S " + at("delta3-s4.witness") + " --ledger " + at("l.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("violations: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("total 168 168"), std::string::npos);
  EXPECT_EQ(slurp(at("l.txt")).rfind("ledger\n", 0), 0u);
}

TEST_F(Cli, CheckLemmas) {
  ASSERT_EQ(gen("delta3 --s 4").code, 0);
  EXPECT_EQ(run("check lemma5 " + at("delta3-s4.1pg") + " --T " + [] {
              std::string s;
              for (int v = 4; v < 16; ++v) s += (s.empty() ? "" : ",") + std::to_string(v);
              return s;
            }()).out,
            "lhs=24 rhs=24 holds\n");
  EXPECT_EQ(run("check lemma7 " + at("delta3-s4.1pg") + " --S " + at("delta3-s4.witness") + " --delta 3").out,
            "lhs=8 rhs=8 holds\n");
  EXPECT_EQ(run("check lemma7 " + at("delta3-s4.1pg") + " --S 0 --delta 3").code, 3);
  ASSERT_EQ(gen("delta5 --g 4").code, 0);
  EXPECT_EQ(run("check lemma8 " + at("delta5-g4.graph") + " --S 0 --generator delta5").out, "lhs=3 rhs=3 holds\n");
}

TEST_F(Cli, CheckLemma5OnCubeSide) {
  std::ofstream(at("q3.1pg")) << onepm::format_1pg(onepm::planar_cube());
  const Result r = run("check lemma5 " + at("q3.1pg") + " --T side0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lhs=8 rhs=24 holds\n");
  EXPECT_EQ(run("check lemma6 " + at("q3.1pg") + " --T side0").out, "lhs=24 rhs=24 holds\n");
  EXPECT_EQ(run("check obs1 " + at("q3.1pg")).code, 0);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(gen("bogus").code, 1);
  EXPECT_EQ(run("solve " + at("missing.graph")).code, 2);
  std::ofstream(at("bad.graph")) << "graph 2 1\ne 0 x\n";
  EXPECT_EQ(run("solve " + at("bad.graph")).code, 2);
  std::ofstream(at("crlf.graph")) << "graph 2 1\r\ne 0 1\r\n";
  EXPECT_EQ(run("solve " + at("crlf.graph")).code, 2);
  ASSERT_EQ(gen("delta3 --s 4").code, 0);
  EXPECT_EQ(run("check lemma5 " + at("delta3-s4.1pg") + " --T 0,1").code, 3);
  EXPECT_EQ(run("check charge " + at("delta3-s4.graph") + " --S 0,1,2,3").code, 2);
  // A deliberately broken drawing is a property violation for validate.
  std::string text = slurp(at("delta3-s4.1pg"));
  const auto at_rot = text.find("rot 0:");
  const auto eol = text.find('\n', at_rot);
  text.erase(text.rfind(' ', eol), eol - text.rfind(' ', eol));
  std::ofstream(at("broken.1pg")) << text;
  EXPECT_EQ(run("validate " + at("broken.1pg")).code, 4);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, ManifestReplay) {
  const std::string m = at("run.manifest");
  ASSERT_EQ(run("--manifest " + m + " generate delta4 --s 8 -o " + dir.string()).code, 0);
  const auto manifest = onepm::parse_manifest(slurp(m));
  EXPECT_EQ(manifest.command, "generate");
  EXPECT_EQ(manifest.outputs.size(), 4u);
  const Result again = run("replay " + m);
  EXPECT_EQ(again.code, 0);
  EXPECT_NE(again.out.find("reproduced exit=0"), std::string::npos);

  const std::string m2 = at("solve.manifest");
  ASSERT_EQ(run("--manifest " + m2 + " solve " + at("delta4-s8.graph")).code, 0);
  EXPECT_EQ(onepm::parse_manifest(slurp(m2)).input_digests.size(), 1u);
  EXPECT_EQ(run("replay " + m2).code, 0);

  // A changed input is reported; a clobbered output is regenerated.
  std::ofstream(at("delta4-s8.graph"), std::ios::app) << "e 0 19\n";
  const Result stale = run("replay " + m2);
  EXPECT_EQ(stale.code, 4);
  EXPECT_NE(stale.out.find("changed input"), std::string::npos);
  std::ofstream(at("delta4-s8.1pg")) << "garbage\n";
  EXPECT_EQ(run("replay " + m).code, 0);
  EXPECT_EQ(onepm::fnv1a64(slurp(at("delta4-s8.1pg"))), manifest.outputs[1].second);
}
