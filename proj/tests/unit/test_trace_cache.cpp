#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "airy/trace_cache.hpp"

using namespace airy;
namespace fs = std::filesystem;

namespace {

// Scoped AIRY_CACHE_DIR pointing at a fresh directory.
struct TempCache {
  fs::path dir;
  TempCache() {
    dir = fs::temp_directory_path() / ("airy-cache-test-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    ::setenv("AIRY_CACHE_DIR", dir.c_str(), 1);
  }
  ~TempCache() {
    ::unsetenv("AIRY_CACHE_DIR");
    fs::remove_all(dir);
  }
  std::size_t files() const {
    if (!fs::exists(dir)) return 0;
    return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator()));
  }
};

}  // namespace

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("cache keys separate every parameter") {
  auto params = make_character_params(4, FqField(7, 1), std::vector<std::int64_t>{1, 0});
  auto a = table_shape(params, Provenance::HeckeBrute);
  CHECK(trace_key(a) == "v1|hecke-brute|p=7|e=1|n=4|lambda=1,0|f=0,1,0,0,0,4");
  auto b = table_shape(params, Provenance::HeckeClosed);
  auto c = table_shape(make_character_params(4, FqField(7, 1), std::vector<std::int64_t>{2, 0}), Provenance::HeckeBrute);
  auto d = table_shape(make_character_params(4, FqField(7, 2), std::vector<std::int64_t>{1, 0}), Provenance::HeckeBrute);
  CHECK(trace_key(a) != trace_key(b));
  CHECK(trace_key(a) != trace_key(c));
  CHECK(trace_key(a) != trace_key(d));
}

TEST_CASE("environment variable") {
  ::unsetenv("AIRY_CACHE_DIR");
  CHECK_FALSE(cache_dir_from_env().has_value());
  ::setenv("AIRY_CACHE_DIR", "", 1);
  CHECK_FALSE(cache_dir_from_env().has_value());
  ::setenv("AIRY_CACHE_DIR", "/tmp/x", 1);
  CHECK(cache_dir_from_env() == fs::path("/tmp/x"));
  ::unsetenv("AIRY_CACHE_DIR");
}

TEST_CASE("round trip through the store") {
  TempCache tc;
  auto params = make_character_params(4, FqField(7, 1), std::vector<std::int64_t>{2, 3});
  auto table = hecke_table_bruteforce(params);
  TraceCache cache(tc.dir);
  CHECK_FALSE(cache.load(table_shape(params, Provenance::HeckeBrute)).has_value());
  cache.store(table);
  CHECK(tc.files() == 1);
  auto back = cache.load(table_shape(params, Provenance::HeckeBrute));
  REQUIRE(back.has_value());
  CHECK(back->entries == table.entries);
  CHECK(back->q == 7);
  CHECK(back->lambda == table.lambda);
  // another provenance is a miss
  CHECK_FALSE(cache.load(table_shape(params, Provenance::HeckeClosed)).has_value());
}

TEST_CASE("corrupt or foreign files are ignored") {
  TempCache tc;
  auto params = make_character_params(2, FqField(5, 1), std::vector<std::int64_t>{1});
  auto shape = table_shape(params, Provenance::HeckeClosed);
  TraceCache cache(tc.dir);
  fs::create_directories(tc.dir);
  const fs::path file = tc.dir / (fnv1a_hex(trace_key(shape)) + ".json");
  {
    std::ofstream(file) << "{ not json";
  }
  CHECK_FALSE(cache.load(shape).has_value());
  {
    std::ofstream(file) << R"({"key": "v1|something-else", "provenance": "hecke-closed", "q": 5, "entries": []})";
  }
  CHECK_FALSE(cache.load(shape).has_value());
}

TEST_CASE("load_or_build consults AIRY_CACHE_DIR") {
  auto params = make_character_params(2, FqField(7, 1), std::vector<std::int64_t>{2});
  auto shape = table_shape(params, Provenance::HeckeClosed);
  int builds = 0;
  auto build = [&] {
    ++builds;
    return hecke_table_closed(params);
  };
  SUBCASE("without the variable every call builds") {
    ::unsetenv("AIRY_CACHE_DIR");
    load_or_build(shape, build);
    load_or_build(shape, build);
    CHECK(builds == 2);
  }
  SUBCASE("with the variable the second call is served from disk") {
    TempCache tc;
    auto first = load_or_build(shape, build);
    auto second = load_or_build(shape, build);
    CHECK(builds == 1);
    CHECK(first.entries == second.entries);
    // a comparison through the cache gives the same verdict
    CHECK(compare_traces(params).pass);
    CHECK(compare_traces(params).pass);
    CHECK(tc.files() == 3);
  }
}
