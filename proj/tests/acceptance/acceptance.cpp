// Runs the twelve acceptance criteria and prints one line per criterion.
// Exit status is 0 only if every criterion passes.

#include <cstdio>
#include <cstring>
#include <string>

#include "airy/suite.hpp"

int main(int argc, char** argv) {
  airy::SuiteOptions opt;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--seed") == 0) opt.seed = std::stoull(argv[i + 1]);

  const auto verdicts = airy::run_acceptance(opt);
  int failed = 0;
  for (const auto& v : verdicts) {
    std::printf("%s %-20s %10.1f ms\n", v.pass ? "PASS" : "FAIL", v.check.c_str(), v.runtime_ms);
    if (!v.pass) {
      ++failed;
      if (v.witness) std::printf("     witness: %s\n", v.witness->dump().c_str());
    }
  }
  std::printf("%zu criteria, %d failed\n", verdicts.size(), failed);
  return verdicts.size() == 12 && failed == 0 ? 0 : 1;
}
