#include <doctest.h>

#include <stdexcept>

#include "airy/error.hpp"
#include "airy/suite.hpp"
#include "airy/verdict.hpp"

using namespace airy;

TEST_CASE("empty report") { CHECK(emit_report({}).dump() == R"({"checks":[]})"); }

TEST_CASE("report layout") {
  Verdict v;
  v.check = "x";
  v.pass = true;
  ReportMeta meta;
  meta.suite = "desk";
  meta.seed = 42;
  Json r = emit_report({v}, meta);
  std::vector<std::string> keys;
  for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"report", "versions", "suite", "seed", "grids", "pass", "checks"});
  CHECK(r["pass"] == true);
  CHECK(r["versions"]["airy"] == library_version());
  CHECK(r["checks"].size() == 1);
  CHECK_FALSE(r["checks"][0].contains("witness"));
}

TEST_CASE("run_check") {
  auto ok = run_check("ok", Json::object(), [](Verdict&) {});
  CHECK(ok.pass);
  CHECK_FALSE(ok.witness.has_value());

  auto thrown = run_check("boom", Json::object(), [](Verdict&) { throw InvalidArgument("bad p"); });
  CHECK_FALSE(thrown.pass);
  REQUIRE(thrown.witness.has_value());
  CHECK((*thrown.witness)["error"] == "bad p");

  auto bare = run_check("bare", Json::object(), [](Verdict& v) { v.pass = false; });
  CHECK_FALSE(bare.pass);
  CHECK(bare.witness.has_value());

  auto first = run_check("first", Json::object(), [](Verdict& v) {
    v.fail(Json{{"a", 1}});
    v.fail(Json{{"a", 2}});
  });
  CHECK((*first.witness)["a"] == 1);
  CHECK(to_json(first)["witness"]["a"] == 1);
}

TEST_CASE("a corrupted structure constant yields a (type, μ, r) witness") {
  auto v = corrupted_constant_selftest();
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  const Json& w = *v.witness;
  CHECK(w.contains("type"));
  CHECK(w.contains("mu"));
  CHECK(w.contains("r"));
  CHECK(w["type"].get<std::string>().find("A2") != std::string::npos);
}

TEST_CASE("suite helpers") {
  auto types = desk_types();
  CHECK(types.size() == 30);  // 15 types, adjoint and simply connected
  CHECK(label(parse_type("A", 3, "sc")) == "A3(sc)");
  CHECK_THROWS_AS(parse_type("Q", 3), InvalidArgument);
  auto t = parse_type("GL", 4);
  CHECK(t.series == Series::GL);
}

TEST_CASE("verify functions report failures honestly") {
  CHECK(verify_trace_identity(4, 7, 1, {1, 0}).pass);
  auto bad = verify_trace_identity(3, 7, 1, {1});
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness.has_value());
  CHECK(verify_decomposition(parse_type("C", 2, "sc")).pass);
  CHECK(verify_factorization(4, 7, std::nullopt, 20, 42).pass);
  CHECK(verify_s1_graph(4, 7, 50, 42).pass);
  CHECK(verify_character(2, 11, 50, 42).pass);
}

TEST_CASE("reports are reproducible for a fixed seed") {
  auto a = verify_factorization(3, 7, std::nullopt, 30, 7);
  auto b = verify_factorization(3, 7, std::nullopt, 30, 7);
  a.runtime_ms = b.runtime_ms = 0;
  CHECK(to_json(a).dump() == to_json(b).dump());
}
