#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace airy {

/// Insertion-ordered JSON, so reports have a stable field order.
using Json = nlohmann::ordered_json;

/// Outcome of one check. A failing verdict always carries a witness.
struct Verdict {
  std::string check;
  Json params = Json::object();
  bool pass = false;
  std::optional<Json> witness;
  double runtime_ms = 0;

  /// Marks the verdict failed with `w` unless it already holds a witness
  /// (the first counterexample is kept).
  void fail(Json w) {
    pass = false;
    if (!witness) witness = std::move(w);
  }
};

Json to_json(const Verdict& v);

struct ReportMeta {
  std::string suite;
  std::uint64_t seed = 0;
  Json grids = Json::object();
};

/// {"checks": [...]}
Json emit_report(const std::vector<Verdict>& verdicts);
/// {"report", "versions", "suite", "seed", "grids", "pass", "checks"}.
/// Worker counts are deliberately absent: results do not depend on them.
Json emit_report(const std::vector<Verdict>& verdicts, const ReportMeta& meta);

std::string library_version();

/// Runs body(v) with v.pass preset to true and the wall clock recorded.
/// Library errors become a failing verdict whose witness names the error.
template <class Body>
Verdict run_check(std::string name, Json params, Body&& body) {
  Verdict v;
  v.check = std::move(name);
  v.params = std::move(params);
  v.pass = true;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.fail(Json{{"error", e.what()}});
  }
  v.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!v.pass && !v.witness) v.witness = Json{{"error", "unspecified failure"}};
  return v;
}

}  // namespace airy
