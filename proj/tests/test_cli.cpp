#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "nacalg/demos.hpp"
#include "nacalg/io.hpp"

using namespace nacalg;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(NACALG_TEST_TMP) + "/" + name; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, DemoList) {
  Outcome r = run({"demo", "--list"});
  EXPECT_EQ(r.code, 0);
  for (const char* name : {"alt3", "jordan-sym2", "h2", "h2-trivial", "f-lambda1", "comatrix2", "diamond", "kx-nonsplit"})
    EXPECT_TRUE(contains(r.out, name)) << name;
}

TEST(Cli, CheckQuasiH2) {
  Outcome r = run({"check", "quasi", "demo:h2"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "qb3"));
  EXPECT_FALSE(contains(r.out, "fail"));
}

TEST(Cli, StrictDecidesExpectedNegatives) {
  Outcome lax = run({"check", "algebra", "demo:alt3"});
  EXPECT_EQ(lax.code, 0);
  EXPECT_TRUE(contains(lax.out, "associative  fail"));
  EXPECT_TRUE(contains(lax.out, "witness (1, 1, 2)"));
  EXPECT_EQ(run({"--strict", "check", "algebra", "demo:alt3"}).code, 1);
}

TEST(Cli, JsonIsStable) {
  Outcome a = run({"--json", "check", "coalgebra", "demo:alt3-dual"});
  Outcome b = run({"--json", "check", "coalgebra", "demo:alt3-dual"});
  EXPECT_EQ(a.out, b.out);
  auto doc = io::parse_document(a.out);
  EXPECT_EQ(doc["object"]["dim"], 3);
  bool saw = false;
  for (const auto& c : doc["checks"])
    if (c["name"] == "coassociative") {
      saw = true;
      EXPECT_EQ(c["status"], "fail");
      EXPECT_EQ(c["witness"], io::Json::array({1}));
    }
  EXPECT_TRUE(saw);
}

TEST(Cli, MissingInverseIsComputed) {
  io::Json doc = io::write_quasi(demos::h2());
  doc.erase("phi_inv");
  write_file(tmp("h2_noinv.json"), io::dump_document(doc));
  Outcome r = run({"check", "quasi", tmp("h2_noinv.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, InputErrors) {
  write_file(tmp("broken.json"), "{\n  \"dim\": 3,\n  oops\n}");
  Outcome r = run({"check", "algebra", tmp("broken.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "line 3")) << r.err;

  io::Json doc = io::write_algebra(demos::alt3());
  doc["unit"][1] = 0;
  write_file(tmp("bare.json"), io::dump_document(doc));
  Outcome s = run({"check", "algebra", tmp("bare.json")});
  EXPECT_EQ(s.code, 2);
  EXPECT_TRUE(contains(s.err, "$.unit[1]")) << s.err;

  EXPECT_EQ(run({"check", "algebra", "demo:nope"}).code, 2);
  EXPECT_EQ(run({"--field", "Fp:9", "check", "algebra", "demo:alt3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, CharacteristicGuardExitsThree) {
  EXPECT_EQ(run({"--field", "Fp:2", "check", "algebra", "demo:jordan-sym2"}).code, 3);
  EXPECT_EQ(run({"--field", "Fp:5", "factdet", "--n", "3"}).code, 3);
}

TEST(Cli, DualizeTwiceIsIdentity) {
  ASSERT_EQ(run({"dualize", "demo:alt3", "--out", tmp("alt3_dual.json")}).code, 0);
  ASSERT_EQ(run({"dualize", tmp("alt3_dual.json"), "--out", tmp("alt3_back.json")}).code, 0);
  auto back = io::load_document(tmp("alt3_back.json"));
  EXPECT_EQ(back, io::write_algebra(demos::alt3()));
}

TEST(Cli, FiniteDualThenSplit) {
  Outcome fd = run({"finite-dual", "demo:h2", "--out", tmp("h2_dual.json")});
  EXPECT_EQ(fd.code, 0) << fd.out;
  EXPECT_EQ(run({"check", "dualquasi", tmp("h2_dual.json")}).code, 0);
  Outcome sp = run({"split", tmp("h2_dual.json")});
  EXPECT_EQ(sp.code, 0) << sp.out;
  EXPECT_TRUE(contains(sp.out, "1⊗1⊗1  3/4"));
  EXPECT_TRUE(contains(sp.out, "g⊗g⊗g  1/4"));
}

TEST(Cli, TwistPrintsG) {
  Outcome r = run({"twist", "demo:h2-trivial", "--twist", "demo:f-lambda1"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "β_F·α_F = g\n"));
  ASSERT_EQ(run({"twist", "demo:h2", "--twist", "demo:f-lambda1", "--out", tmp("h2_tw.json")}).code, 0);
  EXPECT_EQ(run({"check", "quasi", tmp("h2_tw.json")}).code, 0);
}

TEST(Cli, AntipodeCheck) {
  EXPECT_EQ(run({"antipode-check", "demo:h2", "demo:h2-qa"}).code, 0);
  EXPECT_EQ(run({"antipode-check", "demo:h2", "demo:c2-qa"}).code, 1);
}

TEST(Cli, FilteredCommands) {
  Outcome h = run({"hankel", "--seq", "factorial", "--max-order", "8"});
  EXPECT_EQ(h.code, 0);
  EXPECT_TRUE(contains(h.out, "none; nonsingular certificates n=1..9")) << h.out;
  EXPECT_TRUE(contains(run({"hankel", "--seq", "fibonacci"}).out, "order 2; coefficients (1, 1)"));
  EXPECT_TRUE(contains(run({"hankel", "--seq", "geometric", "--ratio", "2"}).out, "order 1; coefficients (2)"));
  EXPECT_TRUE(contains(run({"hankel", "--values", "1,2,4,8,16,32,64"}).out, "order 1; coefficients (2)"));

  Outcome f = run({"factdet", "--n", "4"});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(contains(f.out, "82944"));

  Outcome n = run({"nonsplit", "--N", "6"});
  EXPECT_EQ(n.code, 0);
  EXPECT_TRUE(contains(n.out, "1, 1, 2, 6, 24, 120, 720"));

  Outcome d = run({"diamond", "--N", "6"});
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(contains(d.out, "6   7     yes"));

  Outcome t = run({"tensor-bialgebra", "demo:alt3-dual", "--N", "3"});
  EXPECT_EQ(t.code, 0);
  EXPECT_TRUE(contains(t.out, "generator X"));
}

TEST(Cli, EmittedDocumentsRoundTrip) {
  Outcome a = run({"demo", "--show", "h2"});
  Outcome b = run({"finite-dual", "demo:h2", "--out", "-"});
  ASSERT_EQ(a.code, 0);
  auto h = io::read_quasi(io::parse_document(a.out));
  EXPECT_EQ(io::dump_document(io::write_quasi(h)), a.out);
  auto u = io::read_dual_quasi(io::parse_document(b.out));
  EXPECT_EQ(io::dump_document(io::write_dual_quasi(u)), b.out);
}
