#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/jetmod_cli.hpp"
#include "jetmod/serialize.hpp"

namespace fs = std::filesystem;
using jetmod::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  [[nodiscard]] json body() const { return json::parse(out); }
  [[nodiscard]] json error() const { return json::parse(err); }
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = jetmod::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const char* base = std::getenv("JETMOD_TEST_TMP");
    dir_ = (base ? fs::path(base) : fs::temp_directory_path() / "jetmod_cli") /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
  static json read(const std::string& p) {
    std::ifstream in(p);
    return json::parse(in);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, BuildJetWritesModule) {
  const Outcome r = run({"--out", path("j.json"), "build-jet", "--n", "1", "--N", "1", "--type", "0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.body()["dim"], 2);
  const json m = read(path("j.json"));
  EXPECT_EQ(m["rep"]["dim"], 2);
  EXPECT_EQ(m["provenance"]["N"], 1);

  const Outcome big = run({"build-jet", "--n", "2", "--N", "2", "--type", "1,0", "--table", path("t.json")});
  ASSERT_EQ(big.code, 0) << big.err;
  EXPECT_EQ(big.body()["rep"]["dim"], 12);
  EXPECT_TRUE(read(path("t.json")).is_array());
}

TEST_F(Cli, MalformedJsonIsParseError) {
  write("bad.json", "{\"n\": 1, \"lambda\": [");
  const Outcome r = run({"verify", path("bad.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.error()["error"], "parse");
  const Outcome missing = run({"verify", path("nope.json")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(Cli, VerifyPristineAndCorrupted) {
  ASSERT_EQ(run({"--out", path("j.json"), "build-jet", "--n", "2", "--N", "1", "--type", "0,1"}).code, 0);
  const Outcome ok = run({"--window", "1", "verify", path("j.json")});
  ASSERT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(ok.body()["violations"], 0);
  EXPECT_EQ(ok.body()["suites"].size(), 6u);

  json m = read(path("j.json"));
  auto& gens = m["rep"]["generators"];
  ASSERT_FALSE(gens.empty());
  auto& entry = gens[0]["matrix"][0][0];
  entry = (jetmod::decode_rational(entry) + 1).str();
  write("bad.json", m.dump());
  const Outcome bad = run({"--window", "1", "verify", path("bad.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_GE(bad.body()["violations"].get<int>(), 1);

  const Outcome one = run({"--window", "1", "verify", path("j.json"), "--suites", "lemma1"});
  ASSERT_EQ(one.code, 0);
  ASSERT_EQ(one.body()["suites"].size(), 1u);
  EXPECT_EQ(one.body()["suites"][0]["name"], "lemma1");

  const Outcome unknown = run({"verify", path("j.json"), "--suites", "lemma9"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_EQ(unknown.error()["error"], "unknown_suite");
}

TEST_F(Cli, Degrees) {
  ASSERT_EQ(run({"--out", path("j.json"), "build-jet", "--n", "2", "--N", "3", "--type", "0,1"}).code, 0);
  const Outcome r = run({"degrees", path("j.json")});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.body()["s_degree"], 4);
  EXPECT_EQ(r.body()["expected"], 4);

  // Inflated natural gl_2 module, through correspond.
  write("infl.json", jetmod::encode(jetmod::inflate_gln_to_wnplus(jetmod::gln_natural(2))).dump());
  ASSERT_EQ(run({"--out", path("m.json"), "correspond", path("infl.json"), "--lambda", "0,0"}).code, 0);
  EXPECT_EQ(run({"degrees", path("m.json")}).body()["s_degree"], 1);

  write("zero.json", jetmod::encode(jetmod::FiniteRep({jetmod::AlgebraKind::WnPlus, 1, nullptr}, 2)).dump());
  ASSERT_EQ(run({"--out", path("z.json"), "correspond", path("zero.json"), "--lambda", "1/2"}).code, 0);
  EXPECT_EQ(run({"degrees", path("z.json")}).body()["s_degree"], 0);
}

TEST_F(Cli, CorrespondRejectsNonRepresentation) {
  jetmod::FiniteRep bad({jetmod::AlgebraKind::WnPlus, 1, nullptr}, 1);
  bad.set(jetmod::BasisSymbol::wn_plus(0, {2}), jetmod::RationalMatrix{{1}});
  write("bad.json", jetmod::encode(bad).dump());
  const Outcome r = run({"correspond", path("bad.json"), "--lambda", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.body()["error"], "not_a_representation");
}

TEST_F(Cli, PolyfitRoundtrip) {
  ASSERT_EQ(run({"--out", path("j.json"), "build-jet", "--n", "1", "--N", "2", "--type", "0,0"}).code, 0);
  ASSERT_EQ(run({"--out", path("f.json"), "extract", path("j.json"), "--lo", "-4", "--hi", "10"}).code, 0);
  const Outcome r = run({"polyfit", path("f.json")});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.body()["verdict"], "polynomial");
  EXPECT_EQ(r.body()["degree"], 2);

  ASSERT_EQ(run({"--out", path("short.json"), "extract", path("j.json"), "--lo", "-4", "--hi", "5"}).code, 0);
  const Outcome s = run({"polyfit", path("short.json")});
  EXPECT_EQ(s.code, 2);
  EXPECT_EQ(s.body()["required_min"]["hi"], 8);
}

TEST_F(Cli, PolyfitConstantAndPrecondition) {
  jetmod::OperatorFamilyWindow c(1, 2), bad(1, 2);
  for (int s = -4; s <= 10; ++s) {
    c.insert(jetmod::LatticeVector{s}, jetmod::RationalMatrix{{1, 0}, {0, 2}});
    bad.insert(jetmod::LatticeVector{s}, jetmod::RationalMatrix{{0, s}, {s * s * s, 0}});
  }
  write("c.json", jetmod::encode(c).dump());
  write("bad.json", jetmod::encode(bad).dump());
  const Outcome rc = run({"polyfit", path("c.json")});
  ASSERT_EQ(rc.code, 0);
  EXPECT_EQ(rc.body()["degree"], 0);
  const Outcome rb = run({"polyfit", path("bad.json")});
  EXPECT_EQ(rb.code, 1);
  EXPECT_EQ(rb.body()["verdict"], "precondition_failed");
}

TEST_F(Cli, LoopBuildVerifyAndExtract) {
  const Outcome b = run({"--out", path("g.json"), "loop-build", "--n", "1", "--gdot", "sl2", "--gl", "natural"});
  ASSERT_EQ(b.code, 0) << b.err;
  const Outcome v = run({"--window", "1", "verify", path("g.json")});
  ASSERT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(v.body()["suites"].size(), 10u);
  const Outcome e = run({"extract", path("g.json"), "--loop", "1", "--lo", "-1", "--hi", "1"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(e.body()["points"].size(), 3u);

  const Outcome t = run({"--out", path("t.json"), "loop-build", "--n", "1", "--truncate", "2"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(run({"--window", "1", "verify", path("t.json"), "--suites", "check53,j4,check5455"}).code, 0);
}

TEST_F(Cli, Decompose) {
  write("sum.json", jetmod::encode(jetmod::rep_direct_sum(jetmod::gln_natural(1), jetmod::gln_trivial(1))).dump());
  const Outcome r = run({"decompose", path("sum.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.body()["verdict"], "decomposes");
}
