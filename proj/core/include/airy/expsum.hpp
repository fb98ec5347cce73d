#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "airy/arith/cyclotomic.hpp"
#include "airy/gln_airy.hpp"

namespace airy {

enum class Provenance { Airy, HeckeClosed, HeckeBrute };
std::string to_string(Provenance p);

/// Exact trace values for every a ∈ F_q, indexed by the field index of a.
struct TraceTable {
  Provenance provenance = Provenance::Airy;
  std::uint32_t p = 0, e = 1, q = 0;
  int n = 0;                            // 0 when built from a bare polynomial
  std::vector<std::uint32_t> lambda;    // field indices
  std::vector<std::uint32_t> f_coeffs;  // field indices, c_0 first
  std::vector<CyclotomicValue> entries;

  const CyclotomicValue& at(std::uint32_t a) const { return entries.at(a); }
};

/// Metadata of the table of `prov` for these parameters, without entries.
/// Airy tables depend on f only, so their λ is left empty.
TraceTable table_shape(const CharacterParams& params, Provenance prov);

/// Default cap on ψ-evaluations per table.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct ExpsumOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Entry at t: −Σ_{x ∈ F_q} ψ(Tr(f(x) + t x)). f has degree n+1 with p ∤ n+1
/// and coefficients in the field of the table.
TraceTable airy_trace_table(const FqField& field, const std::vector<Fq>& f, const ExpsumOptions& opt = {});

/// −q^{n/2−1} Σ_{m ∈ F_q} ψ(Tr(f(m) + m a)).
CyclotomicValue hecke_trace_closed(const CharacterParams& params, Fq a);
TraceTable hecke_table_closed(const CharacterParams& params, const ExpsumOptions& opt = {});

/// (−1)^{n−1} Σ_{m ∈ F_q^{1+n/2}, p₂(m) = a} ψ(Tr p₁(m)), by enumeration.
CyclotomicValue hecke_trace_bruteforce(const CharacterParams& params, Fq a, const ExpsumOptions& opt = {});
/// The whole table in one pass over F_q^{1+n/2}.
TraceTable hecke_table_bruteforce(const CharacterParams& params, const ExpsumOptions& opt = {});

/// q^k · v
CyclotomicValue scale_by_power(const CyclotomicValue& v, std::uint32_t q, int k);

struct TraceMismatch {
  std::uint32_t a = 0;
  CyclotomicValue closed, brute, airy_scaled;
};

struct TraceComparison {
  bool pass = false;
  TraceTable airy, closed, brute;
  std::vector<TraceMismatch> mismatches;
};

/// closed(a) = q^{n/2−1}·airy(a) and closed(a) = brute(a) for all a.
/// Tables are served from the trace cache when AIRY_CACHE_DIR is set.
TraceComparison compare_traces(const CharacterParams& params, const ExpsumOptions& opt = {});

struct WeilResult {
  bool pass = false;
  double bound = 0;
  double max_abs = 0;
  std::uint32_t worst_a = 0;
};

/// |entry| ≤ rank·√q + 1e−6 in the complex embedding, rank = deg f − 1.
WeilResult weil_check(const TraceTable& table);

/// Integer vector (base-p digits) of a field index, c_0 first.
std::vector<std::uint32_t> field_digits(std::uint32_t p, std::uint32_t e, std::uint32_t a);

}  // namespace airy
