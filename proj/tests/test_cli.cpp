#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "minpres/cli.hpp"

using namespace minpres;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("lr command") {
  Run r = run({"lr", "[3,2,2,2]", "[4,3,1]", "[5,4,3,2,2,1]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("coefficient: 4") != std::string::npos);
  CHECK(r.out.find("pictures: 4") != std::string::npos);
  CHECK(r.out.find("models agree: yes") != std::string::npos);

  CHECK(run({"lr", "[1]", "[1]", "[2]"}).out.find("coefficient: 1") != std::string::npos);
  CHECK(run({"lr", "[1]", "[1]", "[3]"}).out.find("coefficient: 0") != std::string::npos);
  CHECK(run({"lr", "[1]", "[1]", "[2]"}).code == 0);

  // Oversized picture instances are skipped, not fatal.
  Run big = run({"lr", "[]", "[6,5,4,3]", "[6,5,4,3]", "--picture-limit", "5"});
  CHECK(big.code == 0);
  CHECK(big.out.find("pictures: skipped") != std::string::npos);
}

TEST_CASE("lr parse failures exit 2") {
  CHECK(run({"lr", "[1,3]", "[1]", "[2]"}).code == 2);
  CHECK(run({"lr", "nonsense", "[1]", "[2]"}).code == 2);
  CHECK(run({"lr", "[1]", "[1]"}).code == 2);  // missing argument
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("reduce command") {
  Run r = run({"reduce", "--phi", "12,6,3,3,3,3,4", "--nu", "[3,3,3,3,1]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: -1(x)s[2,1,1]") != std::string::npos);
  CHECK(r.out.find("check: OK") != std::string::npos);

  Run base = run({"reduce", "--phi", "4,2,1,1,1,1,1", "--nu", "[1,1]"});
  CHECK(base.code == 0);
  CHECK(base.out.find("result: 1(x)s[1]") != std::string::npos);

  // Wide partition: precondition, exit 4.
  CHECK(run({"reduce", "--phi", "4,2,1,1,1,1,1", "--nu", "[2]"}).code == 4);
  // Invalid tuple: exit 3.
  CHECK(run({"reduce", "--phi", "12,6,3,3,4,3,4", "--nu", "[3,3,3,3,1]"}).code == 3);
  // Malformed tuple: exit 2.
  CHECK(run({"reduce", "--phi", "12,6,3", "--nu", "[3,3,3,3,1]"}).code == 2);
}

TEST_CASE("reduce trace emits intermediate states") {
  Run r = run({"reduce", "--phi", "12,6,3,3,3,3,4", "--nu", "[3,3,3,3,1]", "--trace"});
  CHECK(r.out.find("xi(0):") != std::string::npos);
  CHECK(r.out.find("xi(1):") != std::string::npos);
  CHECK(r.out.find("terminal:") != std::string::npos);
}

TEST_CASE("system command") {
  Run r = run({"system", "--phi", "12,6,3,3,3,3,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("tall equations") != std::string::npos);
  CHECK(r.out.find("[3,3,3,3,1]: A([],[3,1]) + A([1],[3]) + A([1],[2,1]) + "
                   "A([2],[2]) + A([2],[1,1]) + A([1,1],[2]) + A([3],[1]) + "
                   "A([2,1],[1])") != std::string::npos);
  CHECK(run({"system", "--phi", "12,6,3,3,4,3,4"}).code == 3);
  CHECK(run({"system", "--phi", "4,2,1,1,1,1,1"}).out.find("wide equations") !=
        std::string::npos);
  // Guard: n - r = 10 > 8 without --force.
  CHECK(run({"system", "--phi", "19,9,5,4,5,4,4"}).code == 5);
}

TEST_CASE("check-minimality command") {
  Run r = run({"check-minimality", "--bigrassmannian", "2,2,2,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all generators essential: yes") != std::string::npos);

  Run phi_mode = run({"check-minimality", "--phi", "12,6,3,3,3,3,4"});
  CHECK(phi_mode.code == 0);
  CHECK(phi_mode.out.find("all tall rows in wide span: yes") != std::string::npos);
  CHECK(phi_mode.out.find("generators (20):") != std::string::npos);
  CHECK(phi_mode.out.find("all generators essential: yes") != std::string::npos);

  Run degenerate = run({"check-minimality", "--bigrassmannian", "2,2,1,4"});
  CHECK(degenerate.code == 0);
  CHECK(degenerate.out.find("degenerate case") != std::string::npos);
  CHECK(degenerate.out.find("s[2,2]") != std::string::npos);

  CHECK(run({"check-minimality", "--bigrassmannian", "2,3,1,4"}).code == 3);
  CHECK(run({"check-minimality"}).code == 2);
}

TEST_CASE("generators command") {
  Run r = run({"generators", "--bigrassmannian", "4,4,3,8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count: 6") != std::string::npos);
  CHECK(run({"generators", "--bigrassmannian", "2,2,2,4"}).out.find("[1,1]") !=
        std::string::npos);
}

TEST_CASE("essential-set and find-w commands") {
  Run empty = run({"essential-set", "[4,3,2,1]"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("count: 0") != std::string::npos);

  Run id3 = run({"essential-set", "[1,2,3]"});
  CHECK(id3.out.find("[1,3,2]") != std::string::npos);
  CHECK(id3.out.find("[2,1,3]") != std::string::npos);

  Run fw = run({"find-w", "--v", "[1,3,2,4]", "--n", "4"});
  CHECK(fw.code == 0);
  CHECK(fw.out.find("count: 1") != std::string::npos);
  CHECK(fw.out.find("verified") != std::string::npos);

  // Brute-force bound exceeded: exit 5.
  CHECK(run({"essential-set", "[1,2,3,4,5,6,7,8]"}).code == 5);
  CHECK(run({"find-w", "--v", "[1,3,2,4]", "--n", "4", "--bound", "3"}).code == 5);
}

TEST_CASE("verify-paper passes") {
  Run r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
  std::vector<std::vector<std::string>> invocations = {
      {"lr", "[3,2,2,2]", "[4,3,1]", "[5,4,3,2,2,1]", "--json"},
      {"reduce", "--phi", "12,6,3,3,3,3,4", "--nu", "[3,3,3,3,1]", "--trace", "--json"},
      {"reduce", "--phi", "12,6,3,3,3,3,4", "--nu", "[3,3,3,3,1]", "--order", "random",
       "--seed", "7", "--json"},
      {"system", "--phi", "12,6,3,3,3,3,4", "--json"},
      {"check-minimality", "--bigrassmannian", "2,2,2,4", "--json"},
      {"generators", "--bigrassmannian", "4,4,3,8", "--json"},
      {"essential-set", "[1,2,3]", "--json"},
      {"find-w", "--v", "[1,3,2,4]", "--n", "4", "--json"},
      {"verify-paper", "--json"},
  };
  for (const auto& args : invocations) {
    Run first = run(args);
    Run second = run(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
    CHECK(first.out.find("\"schema\": 1") != std::string::npos);
  }
}

TEST_CASE("threaded runs produce identical output") {
  Run serial = run({"check-minimality", "--bigrassmannian", "4,4,3,8", "--json"});
  Run threaded =
      run({"check-minimality", "--bigrassmannian", "4,4,3,8", "--threads", "4", "--json"});
  CHECK(serial.out == threaded.out);
}

TEST_CASE("random order with equal seeds is reproducible") {
  auto args = std::vector<std::string>{"reduce",  "--phi", "12,6,3,3,3,3,4", "--nu",
                                       "[3,3,3,3,1]", "--order", "random", "--seed", "3"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("timing goes to stderr, keeping stdout deterministic") {
  Run r = run({"lr", "[1]", "[1]", "[2]"});
  CHECK(r.err.find("elapsed:") != std::string::npos);
  CHECK(r.out.find("elapsed:") == std::string::npos);
}

TEST_CASE("help exits zero") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"lr", "--help"}).code == 0);
}
