#include "airy/verdict.hpp"

#include <gmp.h>

namespace airy {

#ifndef AIRY_VERSION
#define AIRY_VERSION "unknown"
#endif

std::string library_version() { return AIRY_VERSION; }

Json to_json(const Verdict& v) {
  Json j;
  j["check"] = v.check;
  j["params"] = v.params;
  j["pass"] = v.pass;
  if (v.witness) j["witness"] = *v.witness;
  j["runtime_ms"] = v.runtime_ms;
  return j;
}

Json emit_report(const std::vector<Verdict>& verdicts) {
  Json j;
  Json checks = Json::array();
  for (const auto& v : verdicts) checks.push_back(to_json(v));
  j["checks"] = std::move(checks);
  return j;
}

Json emit_report(const std::vector<Verdict>& verdicts, const ReportMeta& meta) {
  Json j;
  j["report"] = "airy";
  j["versions"] = Json{{"airy", library_version()}, {"gmp", gmp_version}, {"json", "nlohmann " +
                        std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                        "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
  j["suite"] = meta.suite;
  j["seed"] = meta.seed;
  j["grids"] = meta.grids;
  bool all = true;
  for (const auto& v : verdicts) all = all && v.pass;
  j["pass"] = all;
  j["checks"] = emit_report(verdicts)["checks"];
  return j;
}

}  // namespace airy
