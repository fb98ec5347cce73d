#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using airy::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(call({"roots", "--series", "Z", "--rank", "1"}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"roots", "--series", "A"}).code == 2);  // missing --rank
  CHECK(call({"roots", "--series", "A", "--rank", "2", "--bogus"}).code == 2);
  CHECK(call({"trace", "airy", "--n", "4", "--prime", "7", "--lambda", "1,0", "--format", "xml"}).code == 2);
  auto odd = call({"compare", "--n", "3", "--prime", "7", "--lambda", "1"});
  CHECK(odd.code == 2);
  CHECK(odd.err.find("odd n unsupported") != std::string::npos);
  CHECK(call({"compare", "--n", "4", "--prime", "5", "--lambda", "1,0"}).code == 2);  // p ≤ n+1
  CHECK(call({"trace", "hecke", "--n", "4", "--prime", "11", "--lambda", "1,0", "--method", "brute", "--budget", "10"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("roots") {
  auto r = call({"roots", "--series", "G", "--rank", "2", "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["h"] == 6);
  CHECK(j["num_roots"] == 12);
  CHECK(j["exponents"] == json::array({1, 5}));
}

TEST_CASE("grading") {
  auto r = call({"grading", "--series", "A", "--rank", "3", "--json"});
  REQUIRE(r.code == 0);
  CHECK_FALSE(r.out.empty());
  CHECK_NOTHROW(json::parse(r.out));
}

TEST_CASE("chi") {
  auto r = call({"chi", "--n", "4", "--prime", "11", "--lambda", "1,0", "--m1", "3", "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.dump().find("2*m^5 + m") != std::string::npos);
}

TEST_CASE("trace tables") {
  auto csv = call({"trace", "airy", "--n", "2", "--prime", "5", "--lambda", "1"});
  REQUIRE(csv.code == 0);
  std::istringstream in(csv.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "a,coeffs,re,im");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 5);

  auto js = call({"trace", "hecke", "--n", "2", "--prime", "5", "--ext", "2", "--lambda", "1", "--format", "json", "--method", "brute"});
  REQUIRE(js.code == 0);
  CHECK_NOTHROW(json::parse(js.out));

  // closed and brute agree row for row
  auto closed = call({"trace", "hecke", "--n", "4", "--prime", "7", "--lambda", "1,0", "--method", "closed"});
  auto brute = call({"trace", "hecke", "--n", "4", "--prime", "7", "--lambda", "1,0", "--method", "brute", "--threads", "3"});
  CHECK(closed.code == 0);
  CHECK(closed.out == brute.out);
}

TEST_CASE("compare") {
  auto r = call({"compare", "--n", "4", "--prime", "7", "--lambda", "1,0", "--ext", "1"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["mismatches"].empty());
}

TEST_CASE("verify") {
  auto fz = call({"verify", "factorization", "--n", "4", "--prime", "7", "--mu", "last", "--samples", "100", "--seed", "42"});
  CHECK(fz.code == 0);
  auto j = json::parse(fz.out);
  CHECK(j["pass"] == true);
  CHECK(j["seed"] == 42);

  CHECK(call({"verify", "decomposition", "--series", "D", "--rank", "4"}).code == 0);
  CHECK(call({"verify", "rigidity-kernel", "--series", "B", "--rank", "3", "--form", "sc"}).code == 0);
  CHECK(call({"verify", "s1-graph", "--n", "4", "--prime", "7", "--samples", "20"}).code == 0);
  CHECK(call({"verify", "stab", "--series", "A", "--rank", "2"}).code == 0);
  CHECK(call({"verify", "dim", "--series", "A", "--rank", "4"}).code == 0);
  CHECK(call({"verify", "nonsense"}).code == 2);
  CHECK(call({"verify", "all", "--suite", "huge"}).code == 2);
}

TEST_CASE("reports do not depend on worker count") {
  auto a = call({"verify", "factorization", "--n", "3", "--prime", "7", "--samples", "30", "--no-timings", "--threads", "1"});
  auto b = call({"verify", "factorization", "--n", "3", "--prime", "7", "--samples", "30", "--no-timings", "--threads", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("report file output") {
  auto path = std::filesystem::temp_directory_path() / "airy-cli-test-report.json";
  std::filesystem::remove(path);
  auto r = call({"verify", "dim", "--series", "G", "--rank", "2", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  auto j = json::parse(in);
  CHECK(j["report"] == "airy");
  std::filesystem::remove(path);
}

TEST_CASE("the self-test fails where it should") {
  auto r = call({"verify", "selftest", "--no-timings"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  auto inner = j["checks"][0]["params"]["corrupted_check"];
  CHECK(inner["pass"] == false);
  CHECK(inner["witness"].contains("mu"));
  CHECK(inner["witness"].contains("r"));
}
