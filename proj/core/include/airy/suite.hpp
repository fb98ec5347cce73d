#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "airy/expsum.hpp"
#include "airy/rootdata.hpp"
#include "airy/verdict.hpp"

namespace airy {

struct TypeSpec {
  Series series;
  int rank;
  Form form;
};

/// A1–A6, B2–B4, C2–C4, D4, G2, F4, each in adjoint and simply connected form.
std::vector<TypeSpec> desk_types();
std::string label(const TypeSpec& t);
/// Parses "A3", "GL4" ...; the form defaults to adjoint (GL for GL_n).
TypeSpec parse_type(const std::string& series, int rank, const std::string& form = "ad");

struct SuiteOptions {
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::uint64_t budget = kDefaultBudget;
};

// Parametrized checks, one verdict each.
Verdict verify_trace_identity(int n, std::uint32_t p, std::uint32_t e, const std::vector<std::int64_t>& lambda,
                              const SuiteOptions& opt = {});
/// All μ (or the given one) and all 1 ≤ r ≤ h−1, plus dim z_r and p_minus.
Verdict verify_decomposition(const TypeSpec& t, const std::optional<Coweight>& mu = std::nullopt);
Verdict verify_rigidity_kernel(const TypeSpec& t);
/// Quadratic relevance by enumeration over F_p, all minuscule μ.
Verdict verify_rigidity_quadratic(const TypeSpec& t, std::uint32_t p, std::uint64_t budget = kDefaultBudget);
Verdict verify_factorization(int n, std::uint32_t p, const std::optional<Coweight>& mu, int samples, std::uint64_t seed);
Verdict verify_s1_graph(int n, std::uint32_t p, int samples, std::uint64_t seed);
Verdict verify_stab(const TypeSpec& t, int box = 2);
Verdict verify_dim(const TypeSpec& t);
Verdict verify_weyl(const TypeSpec& t);
Verdict verify_character(int n, std::uint32_t p, int samples, std::uint64_t seed);
Verdict verify_swan(const TypeSpec& t);

/// The twelve acceptance criteria, in order.
std::vector<Verdict> run_acceptance(const SuiteOptions& opt = {});
/// Parameter grids of the acceptance run, for report metadata.
Json acceptance_grids();

/// Decomposition check on A_2 with one structure constant deliberately
/// corrupted. Returns the (failing) verdict; its witness names (type, μ, r).
Verdict corrupted_constant_selftest();

}  // namespace airy
