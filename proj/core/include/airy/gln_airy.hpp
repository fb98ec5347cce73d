#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "airy/arith/galois_field.hpp"
#include "airy/rootdata.hpp"

namespace airy {

/// Parameters of the character χ of S(1) for GL_n, n even.
///
/// Invariants (checked by make_character_params): n ≥ 2 even, p > n + 1,
/// lambda.size() == n/2. λ may lie in any extension F_q of F_p.
struct CharacterParams {
  int n = 0;
  FqField field;
  std::vector<Fq> lambda;  // λ_1 .. λ_{n/2}
};

/// Throws Unsupported("odd n unsupported") for odd n and InvalidArgument for
/// the other violations.
CharacterParams make_character_params(int n, const FqField& field, std::vector<Fq> lambda);
/// Same, with λ given as integers reduced into F_p ⊂ F_q.
CharacterParams make_character_params(int n, const FqField& field, const std::vector<std::int64_t>& lambda);

/// Id + Σ_{r=1}^{n+1} x_r Z_r; x[0] holds x_1.
struct SectionElement {
  std::vector<Fq> x;
};

/// Integer loop matrix: terms[k] is the t^k coefficient (n × n).
struct IntLoopMatrix {
  int n = 0;
  std::map<int, IMat> terms;
};

/// Cyclic shift Σ E_{i,i+1} + E_{n,1}; E_1^n = Id.
IMat e1_matrix(int n);
/// Z_r = σ⁻¹(u^r E_1^r): the height (r mod n) entries at t^⌊r/n⌋, the
/// height (r mod n) − n entries at t^(⌊r/n⌋+1). Requires 1 ≤ r ≤ n+1.
IntLoopMatrix Z_element(int n, int r);
/// φ(Y) = Res tr(X̃ Y) = tr(N⁻ Y_1) + tr(E_{1n} Y_2) with the trace form.
std::int64_t phi_gl(const IntLoopMatrix& y);

/// Group law on the section: Z_i Z_j = Z_{i+j}, Z_k = 0 for k > n+1.
SectionElement section_mul(const SectionElement& a, const SectionElement& b);
SectionElement section_identity(const FqField& f, int n);

/// Truncated power series exp / log in Z. Both need p > n+1.
SectionElement exp_section(const FqField& f, int n, const std::vector<Fq>& y);
std::vector<Fq> log_section(const FqField& f, int n, const SectionElement& g);

/// Σ λ_r y_r + n·y_{n+1} with y = log_section(g).
Fq chi_eval(const CharacterParams& params, const SectionElement& g);
/// Σ λ_r/r m^r + n/(n+1) m^{n+1}.
Fq chi_geometric(const CharacterParams& params, Fq m1);

/// Hecke kernel maps on m = (m_1, …, m_{1+n/2}).
/// p₁ evaluates χ(Id + Σ_{r≤n/2} m₁^r Z_r) through chi_eval, not the closed form.
Fq hecke_p1(const CharacterParams& params, const std::vector<Fq>& m);
Fq hecke_p2(const CharacterParams& params, const std::vector<Fq>& m);

/// Coefficients c_0..c_{n+1} of f(m) = −m^{n+1}/(n+1) + Σ λ_r/r m^r.
std::vector<Fq> f_poly(const CharacterParams& params);
Fq poly_eval(const std::vector<Fq>& coeffs, Fq x);
/// "-1/5*m^5 + m" style rendering with F_q indices for non-prime coefficients.
std::string poly_to_string(const std::vector<Fq>& coeffs, const std::string& var = "m");

}  // namespace airy
