#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tdual/commands.hpp"

using namespace tdual;

namespace {

std::string bin() {
  const char* b = std::getenv("TDUAL_BIN");
  REQUIRE(b != nullptr);
  return b;
}
std::string src() {
  const char* s = std::getenv("TDUAL_SRC");
  REQUIRE(s != nullptr);
  return s;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& rel) {
  std::ifstream in(src() + "/" + rel);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void golden(const std::string& args, const std::string& golden_rel,
            int expect_exit = 0) {
  RunResult r = run(args);
  CHECK(r.exit_code == expect_exit);
  CHECK(r.out == slurp("tests/golden/" + golden_rel));
}

}  // namespace

TEST_CASE("cohomology golden outputs") {
  std::string in = "--input " + src() + "/tests/data/catalog_twists.txt ";
  golden("cohomology " + in + "catalog:klein_bottle 0 Z",
         "cohomology_klein_z.txt");
  golden("cohomology " + in + "catalog:s1 e Z", "cohomology_s1_twisted.txt");
  golden("cohomology " + in + "catalog:point 0 Z", "cohomology_point.txt");
  golden("cohomology " + in + "catalog:t2 ex Q", "cohomology_t2_twisted_q.txt");
  golden("cohomology " + in + "catalog:s1 e Z/4", "cohomology_s1_z4.txt");
}

TEST_CASE("kr golden outputs reproduce the example table") {
  std::string in = "--input " + src() + "/tests/data/catalog_twists.txt ";
  golden("kr " + in + "catalog:t2 ex", "kr_t2.txt");
  golden("kr " + in + "catalog:klein_bottle w1", "kr_klein.txt");
  golden("kr " + in + "catalog:point 0", "kr_point.txt");
  golden("kr " + in + "catalog:s1 e", "kr_s1.txt");
}

TEST_CASE("tdual and transform golden outputs") {
  golden("tdual --input " + src() + "/tests/data/torus_klein.txt bg",
         "tdual_torus_klein.txt");
  golden("transform --input " + src() + "/tests/data/transform.txt circle w",
         "transform_unit.txt");
  golden("transform --input " + src() +
             "/tests/data/transform.txt circle one_one",
         "transform_pair.txt");
}

TEST_CASE("axiom suite is deterministic for a fixed seed") {
  golden("axioms --seed 7 --count 60", "axioms_seed7.txt");
  RunResult other = run("axioms --seed 8 --count 60");
  CHECK(other.exit_code == 0);
}

TEST_CASE("corrupted bracket is reported with a failing exit code") {
  RunResult r = run("axioms --seed 1 --count 12 --corrupt");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL derived bracket") != std::string::npos);
  CHECK(r.out.find("suite FAIL") != std::string::npos);
}

TEST_CASE("count zero is an empty pass") {
  RunResult r = run("axioms --seed 1 --count 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("instances = 0") != std::string::npos);
  CHECK(r.out.find("suite PASS") != std::string::npos);
}

TEST_CASE("parse and resolution errors exit with code 2") {
  std::string in = "--input " + src() + "/tests/data/catalog_twists.txt ";
  CHECK(run("cohomology " + in + "catalog:t2 nosuch Z").exit_code == 2);
  CHECK(run("cohomology " + in + "catalog:nosuch 0 Z").exit_code == 2);
  CHECK(run("kr " + in + "catalog:t3 0").exit_code == 2);  // dim cap
}

TEST_CASE("parser reports the offending line and name") {
  try {
    Document::parse(
        "twist e on catalog:s1 { e=1 }\n"
        "twist f on catalog:s1 { nosuchedge=1 }\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("nosuchedge") != std::string::npos);
  }
  try {
    Document::parse("twist e on catalog:t2 { x=1 }");  // not a cocycle
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("cocycle") != std::string::npos);
  }
  try {
    Document::parse(
        "background b { bundle=nope eps=0 t=0 alpha=0 h_base=0 h_fib=0 }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("nope") != std::string::npos);
  }
}

TEST_CASE("document round trip of a user complex") {
  std::string text = R"(
complex K {
  0: v
  1: a(v,v) b(v,v) c(v,v)
  2: T1(c,a,b) T2(b,c,a)
}
twist w1 on K { a=1 c=1 }
)";
  Document doc = Document::parse(text);
  const auto& entry = doc.complex("K");
  CHECK(entry.complex->n(2) == 2);
  auto h = cohomology(*entry.complex, doc.twist("w1"), Coeff::Z);
  CHECK(h[2] == AbelianGroup(1, {}));  // the Klein bottle with its w1 twist
}

TEST_CASE("forward references and redefinitions are rejected") {
  CHECK_THROWS_AS(
      Document::parse("bundle X on catalog:s1 { xi=later chern=0 }\n"
                      "twist later on catalog:s1 { e=1 }"),
      ParseError);
  CHECK_THROWS_AS(
      Document::parse("twist e on catalog:s1 { e=1 }\n"
                      "twist e on catalog:s1 { }"),
      ParseError);
}
