#include "airy/trace_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace airy {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::optional<Provenance> provenance_from(const std::string& s) {
  for (auto p : {Provenance::Airy, Provenance::HeckeClosed, Provenance::HeckeBrute})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

}  // namespace

std::string trace_key(const TraceTable& t) {
  std::ostringstream os;
  os << "v1|" << to_string(t.provenance) << "|p=" << t.p << "|e=" << t.e << "|n=" << t.n << "|lambda=" << join(t.lambda)
     << "|f=" << join(t.f_coeffs);
  return os.str();
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* v = std::getenv("AIRY_CACHE_DIR");
  if (!v || !*v) return std::nullopt;
  return std::filesystem::path(v);
}

std::filesystem::path TraceCache::path_for(const std::string& key) const { return dir_ / (fnv1a_hex(key) + ".json"); }

std::optional<TraceTable> TraceCache::load(const TraceTable& shape) const {
  const std::string key = trace_key(shape);
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    TraceTable t = shape;
    auto prov = provenance_from(j.at("provenance").get<std::string>());
    if (!prov || *prov != shape.provenance) return std::nullopt;
    t.q = j.at("q").get<std::uint32_t>();
    t.entries.clear();
    for (const auto& e : j.at("entries")) {
      // coefficients are stored as decimal strings (arbitrary precision)
      std::vector<std::int64_t> counts(t.p, 0);
      const auto& c = e.get_ref<const json::array_t&>();
      if (c.size() + 1 != t.p) return std::nullopt;
      for (std::size_t k = 0; k < c.size(); ++k) counts[k] = std::stoll(c[k].get<std::string>());
      t.entries.push_back(CyclotomicValue::from_counts(t.p, counts));
    }
    if (t.entries.size() != t.q) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void TraceCache::store(const TraceTable& t) const {
  try {
    std::filesystem::create_directories(dir_);
    json j;
    j["key"] = trace_key(t);
    j["provenance"] = to_string(t.provenance);
    j["p"] = t.p;
    j["e"] = t.e;
    j["q"] = t.q;
    j["n"] = t.n;
    j["lambda"] = t.lambda;
    j["f"] = t.f_coeffs;
    json entries = json::array();
    for (const auto& v : t.entries) {
      json c = json::array();
      for (const auto& x : v.coeffs()) c.push_back(x.get_str());
      entries.push_back(std::move(c));
    }
    j["entries"] = std::move(entries);
    const auto final_path = path_for(trace_key(t));
    std::random_device rd;
    auto tmp = final_path;
    tmp += ".tmp" + std::to_string(rd());
    {
      std::ofstream out(tmp);
      out << j.dump();
      if (!out) return;
    }
    std::filesystem::rename(tmp, final_path);
  } catch (const std::exception&) {
  }
}

TraceTable load_or_build(const TraceTable& shape, const std::function<TraceTable()>& build) {
  auto dir = cache_dir_from_env();
  if (!dir) return build();
  TraceCache cache(*dir);
  if (auto hit = cache.load(shape)) return *hit;
  TraceTable t = build();
  cache.store(t);
  return t;
}

}  // namespace airy
