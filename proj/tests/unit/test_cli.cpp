#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "isct/cli.hpp"
#include "isct/errors.hpp"
#include "isct/problem.hpp"

using namespace isct;

namespace {

const char* kQuinticNode =
    "# quintic threefold acquiring an ordinary double point\n"
    "n = 3\n"
    "degree = 5\n"
    "singularity = brieskorn_pham\n"
    "exponents = 2,2,2,2\n";

std::filesystem::path write_problem(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << body;
  return path;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_input") {
  SUBCASE("a valid quintic-node file") {
    const auto path = write_problem("isct_quintic.prob", kQuinticNode);
    const HypersurfaceFamily f = parse_input(path.string());
    CHECK(f.n == 3);
    CHECK(f.degree == 5);
    CHECK(f.germ.exponents == std::vector<long long>{2, 2, 2, 2});
  }
  SUBCASE("n below 3 is rejected with a line number") {
    try {
      parse_input_text("n = 2\ndegree = 4\nsingularity = brieskorn_pham\n"
                       "exponents = 2,2,2\n",
                       "bad.prob");
      FAIL("expected input_error");
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find("bad.prob:1") != std::string::npos);
      CHECK(std::string(e.what()).find("n must be >= 3") != std::string::npos);
    }
  }
  SUBCASE("wrong exponent arity") {
    try {
      parse_input_text("n = 3\ndegree = 4\nsingularity = brieskorn_pham\n"
                       "exponents = 2,3,5\n",
                       "bad.prob");
      FAIL("expected input_error");
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find("expected 4 exponents") != std::string::npos);
    }
  }
  SUBCASE("unknown and duplicate keys") {
    CHECK_THROWS_AS(parse_input_text("n = 3\nfoo = 1\n", "bad.prob"), input_error);
    CHECK_THROWS_AS(
        parse_input_text("n = 3\nn = 4\ndegree = 2\nsingularity = brieskorn_pham\n"
                         "exponents = 2,2,2,2\n",
                         "bad.prob"),
        input_error);
  }
  SUBCASE("missing required key") {
    CHECK_THROWS_AS(parse_input_text("n = 3\ndegree = 2\n", "bad.prob"), input_error);
  }
  SUBCASE("weighted-homogeneous form") {
    const HypersurfaceFamily f = parse_input_text(
        "n = 3\ndegree = 6\nsingularity = weighted_homogeneous\n"
        "weights = 15,10,6,15\nwdegree = 30\n",
        "wh.prob");
    CHECK(f.germ.kind == SingularityGerm::Kind::weighted_homogeneous);
    CHECK(f.germ.wdegree == 30);
  }
}

TEST_CASE("invariants subcommand") {
  const auto path = write_problem("isct_quintic.prob", kQuinticNode);
  SUBCASE("json report carries the expected hi vector") {
    const RunResult r = run_cli({"invariants", path.string(), "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"hi\": [") != std::string::npos);
    CHECK(r.out.find("204") != std::string::npos);
    CHECK(r.out.find("\"verdict\": \"fail\"") == std::string::npos);
  }
  SUBCASE("human-readable report") {
    const RunResult r = run_cli({"invariants", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("milnor number mu") != std::string::npos);
    CHECK(r.out.find("check self-duality: pass") != std::string::npos);
  }
  SUBCASE("weighted-homogeneous input reports the Milnor number only") {
    const auto wh = write_problem(
        "isct_wh.prob",
        "n = 3\ndegree = 6\nsingularity = weighted_homogeneous\n"
        "weights = 15,10,6,15\nwdegree = 30\n");
    const RunResult r = run_cli({"invariants", wh.string(), "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"mu\": 8") != std::string::npos);
    CHECK(r.out.find("hi") == std::string::npos);
  }
}

TEST_CASE("check subcommand") {
  const auto path = write_problem("isct_quintic.prob", kQuinticNode);
  SUBCASE("--all emits one verdict line per check and exits 0") {
    const RunResult r = run_cli({"check", path.string(), "--all"});
    CHECK(r.code == 0);
    for (const char* name :
         {"exactness", "splitting", "self-duality", "poincare", "oracles"}) {
      CHECK(r.out.find(std::string("check ") + name + ": pass") != std::string::npos);
    }
  }
  SUBCASE("a single selected check") {
    const RunResult r = run_cli({"check", path.string(), "--splitting"});
    CHECK(r.code == 0);
    CHECK(r.out == "check splitting: pass\n");
  }
  SUBCASE("no selection is an input error") {
    const RunResult r = run_cli({"check", path.string()});
    CHECK(r.code == 2);
  }
  SUBCASE("byte-identical output across runs") {
    const RunResult a = run_cli({"check", path.string(), "--all", "--json"});
    const RunResult b = run_cli({"check", path.string(), "--all", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("zigzag subcommand") {
  const auto path = write_problem("isct_quintic.prob", kQuinticNode);
  SUBCASE("the IS object of the node has dims (1,1,1,1)") {
    const RunResult r = run_cli({"zigzag", path.string(), "--object", "is"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dims (1, 1, 1, 1)") != std::string::npos);
  }
  SUBCASE("json serialization carries p/q strings") {
    const RunResult r =
        run_cli({"zigzag", path.string(), "--object", "nearby", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"0/1\"") != std::string::npos);
  }
  SUBCASE("an unknown object name is rejected") {
    const RunResult r = run_cli({"zigzag", path.string(), "--object", "bogus"});
    CHECK(r.code == 2);
  }
}

TEST_CASE("oracle subcommand") {
  const auto path = write_problem("isct_quintic.prob", kQuinticNode);
  const RunResult r = run_cli({"oracle", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("milnor oracle          : pass") != std::string::npos);
  CHECK(r.out.find("euler oracle           : pass") != std::string::npos);
}

TEST_CASE("exit codes") {
  SUBCASE("missing file") {
    const RunResult r = run_cli({"invariants", "/nonexistent/file.prob"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
  }
  SUBCASE("resource guard maps to exit 3") {
    const auto path = write_problem(
        "isct_huge.prob",
        "n = 3\ndegree = 5\nsingularity = brieskorn_pham\n"
        "exponents = 101,101,101,11\n");
    const RunResult r = run_cli({"invariants", path.string()});
    CHECK(r.code == 3);
  }
  SUBCASE("no arguments is a usage error") {
    const RunResult r = run_cli({});
    CHECK(r.code == 2);
  }
}

TEST_CASE("--out writes the report to a file") {
  const auto path = write_problem("isct_quintic.prob", kQuinticNode);
  const auto out_path = std::filesystem::temp_directory_path() / "isct_report.json";
  std::filesystem::remove(out_path);
  const RunResult r = run_cli(
      {"check", path.string(), "--all", "--json", "--out", out_path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  REQUIRE(f.good());
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str().find("\"checks\"") != std::string::npos);
}

TEST_CASE("multiple problem files keep input order") {
  const auto p1 = write_problem("isct_a.prob", kQuinticNode);
  const auto p2 = write_problem(
      "isct_b.prob",
      "n = 3\ndegree = 3\nsingularity = brieskorn_pham\nexponents = 3,3,3,3\n");
  const RunResult r = run_cli({"invariants", p1.string(), p2.string(), "--json"});
  CHECK(r.code == 0);
  const auto first = r.out.find("\"degree\": 5");
  const auto second = r.out.find("\"degree\": 3");
  CHECK(first != std::string::npos);
  CHECK(second != std::string::npos);
  CHECK(first < second);
}

}  // TEST_SUITE
