#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string cli_path() {
  const char* p = std::getenv("BARNETTE_CLI");
  return p ? p : "";
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_file = "cli_out.tmp";
  std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream f(out_file);
  std::stringstream ss;
  ss << f.rdbuf();
  std::remove(out_file.c_str());
  return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("cli workflows" * doctest::skip(cli_path().empty())) {
  REQUIRE_FALSE(cli_path().empty());

  SUBCASE("gen + check on the octahedron") {
    auto g = run("gen --catalog octahedron --out cli_oct.rot");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("\"outcome\": \"ok\"") != std::string::npos);
    auto c = run("check cli_oct.rot");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("\"outcome\": \"ok\"") != std::string::npos);
    CHECK(c.out.find("\"satisfying\"") != std::string::npos);

    SUBCASE("byte-identical reports on identical input") {
      auto c2 = run("check cli_oct.rot");
      CHECK(c.out == c2.out);
    }
    SUBCASE("partition through") {
      auto p = run("partition cli_oct.rot --path 0,2,1 --mode through");
      CHECK(p.exit_code == 0);
      CHECK(p.out.find("\"S\"") != std::string::npos);
    }
    SUBCASE("invalid path exits 4") {
      auto p = run("partition cli_oct.rot --path 0,1,2 --mode through");
      CHECK(p.exit_code == 4);
    }
    SUBCASE("verify sweep with oracle") {
      auto v = run("verify cli_oct.rot --sweep --oracle");
      CHECK(v.exit_code == 0);
      CHECK(v.out.find("\"property_failures\": 0") != std::string::npos);
    }
    std::remove("cli_oct.rot");
  }

  SUBCASE("hypothesis failure exits 3 with a witness") {
    auto g = run("gen --catalog oct+2 --out cli_oct2.rot");
    CHECK(g.exit_code == 0);
    auto c = run("check cli_oct2.rot");
    CHECK(c.exit_code == 3);
    CHECK(c.out.find("\"cycle\"") != std::string::npos);
    auto v = run("verify cli_oct2.rot --sweep");
    CHECK(v.exit_code == 3);
    std::remove("cli_oct2.rot");
  }

  SUBCASE("hypothesis-failing instances still partition behind --exhaustive") {
    auto g = run("gen --catalog hypfail --out cli_hf.rot");
    CHECK(g.exit_code == 0);
    auto p = run("partition cli_hf.rot --path 0,2,1 --mode edge-avoid");
    CHECK(p.exit_code == 3);  // constructive drivers refuse
    auto px = run("partition cli_hf.rot --path 0,2,1 --mode edge-avoid --exhaustive");
    CHECK(px.exit_code == 0);
    CHECK(px.out.find("\"exhaustive\"") != std::string::npos);
    std::remove("cli_hf.rot");
  }

  SUBCASE("oracle bound exceeded keeps constructive checks") {
    auto g = run("gen --steps 4 --seed 2 --out cli_big.rot");  // n=18, hypothesis holds
    CHECK(g.exit_code == 0);
    auto v = run("verify cli_big.rot --sweep --oracle");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("\"oracle_skipped\": true") != std::string::npos);
    CHECK(v.out.find("\"property_failures\": 0") != std::string::npos);
    std::remove("cli_big.rot");
  }

  SUBCASE("malformed file exits 2") {
    {
      std::ofstream f("cli_bad.rot");
      f << "3\n0: 1\n";
    }
    auto c = run("check cli_bad.rot");
    CHECK(c.exit_code == 2);
    std::remove("cli_bad.rot");
  }

  SUBCASE("gen --steps 3 --seed 7 gives a 15-vertex instance") {
    auto g = run("gen --steps 3 --seed 7 --out cli_rand.rot");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("\"n\": 15") != std::string::npos);
    CHECK(g.out.find("seed=7") != std::string::npos);
    std::remove("cli_rand.rot");
  }

  SUBCASE("unknown catalog exits 2") {
    auto g = run("gen --catalog nosuch");
    CHECK(g.exit_code == 2);
  }

  SUBCASE("planar_code output and input") {
    auto g = run("gen --catalog oct+1 --format planar_code --out cli_oct1.pc");
    CHECK(g.exit_code == 0);
    auto c = run("check cli_oct1.pc --format planar_code");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("\"n\": 9") != std::string::npos);
    std::remove("cli_oct1.pc");
  }

  SUBCASE("parallel verify matches single-threaded output") {
    auto g = run("gen --catalog ladder11 --out cli_lad.rot");
    CHECK(g.exit_code == 0);
    auto v1 = run("verify cli_lad.rot --sweep --jobs 1");
    auto v4 = run("verify cli_lad.rot --sweep --jobs 4");
    CHECK(v1.exit_code == 0);
    CHECK(v1.out == v4.out);
    std::remove("cli_lad.rot");
  }

  SUBCASE("dot artifact") {
    auto g = run("gen --catalog octahedron --out cli_oct.rot");
    CHECK(g.exit_code == 0);
    auto p = run("partition cli_oct.rot --path 0,2,1 --mode through --dot cli_p.dot");
    CHECK(p.exit_code == 0);
    std::ifstream d("cli_p.dot");
    CHECK(d.good());
    std::remove("cli_p.dot");
    std::remove("cli_oct.rot");
  }
}
