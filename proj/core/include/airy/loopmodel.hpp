#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "airy/chevalley.hpp"

namespace airy {

/// One Moy–Prasad line t^power·(root vector), or the Cartan slot at t^power.
/// Depth = power·h + Ht.
struct AffineLine {
  std::optional<std::size_t> root;
  int power = 0;
  int depth = 0;
  friend bool operator<(const AffineLine& a, const AffineLine& b) {
    return std::make_pair(a.power, a.root.value_or(SIZE_MAX)) < std::make_pair(b.power, b.root.value_or(SIZE_MAX));
  }
};

/// Lines of depth exactly r (a basis of I(r)/I(r+1) ≅ g_r), r ≥ 0.
std::vector<AffineLine> filtration_basis(const RootDatum& rd, int r);
/// dim I(lo)/I(hi), Cartan slots counted with dim T.
std::size_t filtration_quotient_dim(const RootDatum& rd, int lo, int hi);

/// φ(Y) = Res κ(X̃, Y) = κ(N⁻, Y_1) + κ(E_θ, Y_2).
template <class F>
typename F::Element phi_eval(const ChevalleyAlgebra<F>& alg, const LaurentLie<F>& y) {
  auto v = alg.field().zero();
  if (auto it = y.find(1); it != y.end()) v += alg.kappa(alg.n_minus(), it->second);
  if (auto it = y.find(2); it != y.end()) v += alg.kappa(alg.e_theta(), it->second);
  return v;
}

/// φ is nonzero on each affine simple line of depth h+1 and vanishes on
/// every line of depth h+2 .. 3h+2.
template <class F>
bool phi_generic_check(const ChevalleyAlgebra<F>& alg) {
  const RootDatum& d = alg.rd();
  const int h = alg.h();
  auto line = [&](int power, std::size_t idx) {
    LaurentLie<F> y;
    y[power] = alg.basis(idx);
    return phi_eval(alg, y);
  };
  for (int i = 0; i < d.semisimple_rank(); ++i)
    if (alg.field().is_zero(line(1, static_cast<std::size_t>(i)))) return false;
  if (alg.field().is_zero(line(2, d.negative(d.highest_root())))) return false;
  for (int power = 0; power <= 3; ++power)
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      int depth = power * h + alg.structure().height(i);
      if (depth >= h + 2 && !alg.field().is_zero(line(power, i))) return false;
    }
  return true;
}

struct StabRoots {
  std::set<std::pair<std::size_t, int>> lines;     // (root, power) of Ad_{t^{−μ}}L⁻G ∩ I(1)
  std::set<std::pair<std::size_t, int>> expected;  // u_M at t^0, u_P⁻ at t^1
  bool match() const { return lines == expected; }
};

StabRoots stab_affine_roots(const RootDatum& rd, const Coweight& mu);

struct OddParahoric {
  int n = 0;  // h = 2n+1
  bool p2_in_i2 = false;
  bool i_n2_in_p = false;
  bool p_in_i_n1 = false;
  std::size_t top = 0, bottom = 0;                    // P(1+n)/I(n+2), I(n+1)/P(1+n)
  std::size_t expected_top = 0, expected_bottom = 0;  // dim g(n+1), dim g(n+1−h)
  bool pass() const {
    return p2_in_i2 && i_n2_in_p && p_in_i_n1 && top == expected_top && bottom == expected_bottom;
  }
};

/// Filtration checks for the parahoric with barycenter ρ̌/2n in type A_{2n}.
/// Throws InvalidArgument for any other type.
OddParahoric odd_parahoric_check(const RootDatum& rd);

/// Matrix over F_q[t]/t^N; c[k] is the t^k coefficient.
struct LoopMatrix {
  std::vector<Matrix<FqField>> c;
  friend bool operator==(const LoopMatrix& a, const LoopMatrix& b) { return a.c == b.c; }
};

struct Factorization {
  LoopMatrix u, a, s, residual;
  std::vector<Fq> s_coeffs;  // s = Π_r (Id + c_r Z_r)
  int residual_depth = 0;
  bool reconstructs = false;  // u·a·s·residual == g
  bool u_ok = false;          // t^μ u t^{−μ} ∈ U_μ(k)
  bool a_ok = false;          // log a ∈ Ad_{t^{−μ}}(t·a^μ)
  bool s_ok = false;          // s commutes with t²X̃
  bool pass(int target_depth) const {
    return reconstructs && u_ok && a_ok && s_ok && residual_depth >= target_depth;
  }
};

/// GL_n truncated loop group modulo t^(n+2) over F_p with the Iwahori
/// filtration of depth k·n + (j − i) for entry (i, j) at t^k.
class GLLoopModel {
 public:
  GLLoopModel(int n, std::uint32_t p, Coweight mu);

  int n() const { return n_; }
  int truncation() const { return N_; }
  /// ⌈h/2⌉
  int steps() const { return (n_ + 1) / 2; }
  const FqField& field() const { return f_; }
  const ChevalleyAlgebra<FqField>& algebra() const { return alg_; }
  const Coweight& mu() const { return mu_; }

  LoopMatrix identity() const;
  LoopMatrix zero() const;
  LoopMatrix mul(const LoopMatrix& a, const LoopMatrix& b) const;
  LoopMatrix inverse(const LoopMatrix& a) const;
  /// exp of a nilpotent loop matrix; throws InvalidArgument otherwise.
  LoopMatrix exp(const LoopMatrix& x) const;
  LoopMatrix add(const LoopMatrix& a, const LoopMatrix& b) const;
  LoopMatrix scaled(const LoopMatrix& a, Fq s) const;
  /// Depth of g − Id (INT_MAX for the identity).
  int depth(const LoopMatrix& g) const;
  /// Depth of x itself (INT_MAX for 0).
  int depth_of_lie(const LoopMatrix& x) const;

  /// Random element of I(1).
  LoopMatrix random_I1(std::mt19937_64& rng) const;
  /// Homogeneous Lie vector of g_r placed on its depth-r lines.
  LoopMatrix place(const std::vector<Fq>& v, int r) const;
  /// Depth-r part of x as a Lie vector of g_r.
  std::vector<Fq> image(const LoopMatrix& x, int r) const;
  /// Z_r: E_1^r with the height-d entries at t^((r−d)/n).
  LoopMatrix z_element(int r) const;
  /// t²X̃ = t·Σ E_{i+1,i} + E_{1n}.
  LoopMatrix x_tilde_t2() const;

  Factorization factorize_I1(const LoopMatrix& g) const;

  /// Depth of exp(−(Y₁+Y₂)t)exp(Y₁t)exp(Y₂t) for Y₁ ∈ a, Y₂ ∈ a_r.
  int exp_product_valuation(const std::vector<Fq>& y1, const std::vector<Fq>& y2) const;
  /// Basis of a = ⊕_{2≤r≤⌈h/2⌉} a_r (μ = 0) as Lie vectors, with their r.
  const std::vector<std::pair<int, std::vector<Fq>>>& a_basis() const { return a_plain_; }

 private:
  std::pair<std::size_t, std::size_t> ends(std::size_t root) const { return ends_[root]; }
  std::size_t root_at(std::size_t i, std::size_t j) const { return at_[i * static_cast<std::size_t>(n_) + j]; }

  int n_, N_;
  FqField f_;
  Coweight mu_;
  ChevalleyAlgebra<FqField> alg_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::size_t> at_;
  struct StepBasis {
    std::vector<std::vector<Fq>> z, a, u;
    Matrix<FqField> solve_inverse;  // coordinates of a g_r vector in z ∪ a ∪ u
    std::vector<std::size_t> rows;  // basis indices of g_r
  };
  std::vector<StepBasis> steps_;
  std::vector<std::pair<int, std::vector<Fq>>> a_plain_;
  std::vector<bool> in_umu_;
};

}  // namespace airy
