#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "airy/arith/galois_field.hpp"
#include "airy/arith/matrix.hpp"
#include "airy/arith/multipoly.hpp"
#include "airy/arith/rational.hpp"
#include "airy/error.hpp"
#include "airy/lie_structure.hpp"
#include "airy/rootdata.hpp"

namespace airy {

/// Lie algebra of a root datum over a field context F (ℚ or F_q with p > h),
/// in the integer Chevalley basis of LieStructure. Immutable.
template <class F>
class ChevalleyAlgebra {
 public:
  using E = typename F::Element;
  using Vec = std::vector<E>;

  ChevalleyAlgebra(std::shared_ptr<const LieStructure> s, F f = F{}) : s_(std::move(s)), f_(std::move(f)) {
    const std::uint32_t p = f_.characteristic();
    const int h = s_->rd().coxeter_number();
    if (p != 0 && static_cast<int>(p) <= h)
      throw InvalidArgument("characteristic must exceed the Coxeter number " + std::to_string(h));
    const std::size_t D = s_->dim();
    table_.resize(D * D);
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j)
        for (const auto& t : s_->bracket(i, j)) table_[i * D + j].push_back({t.index, f_.from_int(t.coeff)});
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j)
        if (s_->kappa(i, j)) kappa_.push_back({i, j, f_.from_int(s_->kappa(i, j))});
    build_sl2();
  }

  const LieStructure& structure() const { return *s_; }
  std::shared_ptr<const LieStructure> structure_ptr() const { return s_; }
  const RootDatum& rd() const { return s_->rd(); }
  const F& field() const { return f_; }
  std::size_t dim() const { return s_->dim(); }
  int h() const { return rd().coxeter_number(); }

  Vec zero_vec() const { return Vec(dim(), f_.zero()); }
  Vec basis(std::size_t i) const {
    Vec v = zero_vec();
    v[i] = f_.one();
    return v;
  }
  bool is_zero(const Vec& v) const {
    for (const auto& x : v)
      if (!f_.is_zero(x)) return false;
    return true;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    const std::size_t D = dim();
    Vec out = zero_vec();
    for (std::size_t i = 0; i < D; ++i) {
      if (f_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < D; ++j) {
        if (f_.is_zero(y[j])) continue;
        const auto& terms = table_[i * D + j];
        if (terms.empty()) continue;
        E c = x[i] * y[j];
        for (const auto& [k, v] : terms) out[k] += c * v;
      }
    }
    return out;
  }

  E kappa(const Vec& x, const Vec& y) const {
    E s = f_.zero();
    for (const auto& k : kappa_)
      if (!f_.is_zero(x[k.i]) && !f_.is_zero(y[k.j])) s += x[k.i] * y[k.j] * k.v;
    return s;
  }

  /// Column j is [x, b_j].
  Matrix<F> ad_matrix(const Vec& x) const {
    const std::size_t D = dim();
    Matrix<F> m(f_, D, D);
    for (std::size_t j = 0; j < D; ++j) {
      Vec c = bracket(x, basis(j));
      for (std::size_t i = 0; i < D; ++i) m(i, j) = c[i];
    }
    return m;
  }

  /// Principal sl2-triple: N⁻ = Σ E_{−α_i}, H = 2ρ̌ = Σ c_i H_{α_i}, N⁺ = Σ c_i E_{α_i}.
  const Vec& n_minus() const { return n_minus_; }
  const Vec& n_plus() const { return n_plus_; }
  const Vec& h_elem() const { return h_; }
  const Vec& e_theta() const { return e_theta_; }
  /// X_{−1} = N⁻ + E_θ.
  const Vec& x_minus_1() const { return x_minus_1_; }
  const std::vector<E>& sl2_coefficients() const { return c_; }

  /// Integer coefficient of a basis vector as a field element.
  E from_int(std::int64_t v) const { return f_.from_int(v); }

 private:
  struct KappaEntry {
    std::size_t i, j;
    E v;
  };

  void build_sl2() {
    const RootDatum& d = rd();
    const std::size_t n = static_cast<std::size_t>(d.semisimple_rank());
    Matrix<F> m(f_, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(j, i) = f_.from_int(d.cartan_matrix()[i][j]);
    auto c = solve(f_, m, Vec(n, f_.from_int(2)));
    AIRY_ENSURE(c.has_value(), "principal sl2 system is singular");
    c_ = *c;
    n_minus_ = zero_vec();
    n_plus_ = zero_vec();
    h_ = zero_vec();
    for (std::size_t i = 0; i < n; ++i) {
      n_minus_[d.negative(i)] = f_.one();
      n_plus_[i] = c_[i];
      const IVec& cr = s_->coroot_cartan(i);
      for (std::size_t k = 0; k < cr.size(); ++k) h_[s_->cartan_index(k)] += c_[i] * f_.from_int(cr[k]);
    }
    e_theta_ = basis(d.highest_root());
    x_minus_1_ = n_minus_;
    x_minus_1_[d.highest_root()] += f_.one();
  }

  std::shared_ptr<const LieStructure> s_;
  F f_;
  std::vector<std::vector<std::pair<std::size_t, E>>> table_;
  std::vector<KappaEntry> kappa_;
  std::vector<E> c_;
  Vec n_minus_, n_plus_, h_, e_theta_, x_minus_1_;
};

template <class F>
ChevalleyAlgebra<F> build_algebra(std::shared_ptr<const RootDatum> rd, F f = F{}) {
  return ChevalleyAlgebra<F>(std::make_shared<const LieStructure>(std::move(rd)), std::move(f));
}

template <class F>
struct GradedSubspace {
  int r = 0;
  std::vector<std::vector<typename F::Element>> basis;
  std::size_t dim() const { return basis.size(); }
};

namespace detail {

template <class F>
std::vector<typename F::Element> combine(const F& f, const std::vector<std::vector<typename F::Element>>& vs,
                                         const std::vector<typename F::Element>& c, std::size_t dim) {
  std::vector<typename F::Element> out(dim, f.zero());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (f.is_zero(c[k])) continue;
    for (std::size_t i = 0; i < dim; ++i)
      if (!f.is_zero(vs[k][i])) out[i] += c[k] * vs[k][i];
  }
  return out;
}

/// Row-reduced basis of the span.
template <class F>
std::vector<std::vector<typename F::Element>> span_basis(const F& f,
                                                        const std::vector<std::vector<typename F::Element>>& vs,
                                                        std::size_t dim) {
  if (vs.empty()) return {};
  auto m = Matrix<F>::from_rows(f, vs, dim);
  auto piv = rref(f, m);
  std::vector<std::vector<typename F::Element>> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(m.row(i));
  return out;
}

inline int mod_h(int x, int h) { return ((x % h) + h) % h; }

}  // namespace detail

/// g_r = g(r) ⊕ g(r−h) for 0 ≤ r ≤ h−1 (Cartan included at r = 0).
template <class F>
GradedSubspace<F> grading_piece(const ChevalleyAlgebra<F>& alg, int r) {
  const int h = alg.h();
  if (r < 0 || r >= h) throw InvalidArgument("grading_piece: r out of range");
  GradedSubspace<F> g{r, {}};
  const auto& s = alg.structure();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (detail::mod_h(s.height(i), h) == r) g.basis.push_back(alg.basis(i));
  return g;
}

/// g(r): root vectors of height r, or the Cartan for r = 0.
template <class F>
GradedSubspace<F> height_piece(const ChevalleyAlgebra<F>& alg, int r) {
  const int h = alg.h();
  if (r <= -h || r >= h) throw InvalidArgument("height_piece: r out of range");
  GradedSubspace<F> g{r, {}};
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (alg.structure().height(i) == r) g.basis.push_back(alg.basis(i));
  return g;
}

/// Kernel of ad_{X_{−1}} restricted to g_r.
template <class F>
GradedSubspace<F> centralizer_piece(const ChevalleyAlgebra<F>& alg, int r) {
  const auto& f = alg.field();
  auto g = grading_piece(alg, r);
  Matrix<F> m(f, alg.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    auto c = alg.bracket(alg.x_minus_1(), g.basis[j]);
    for (std::size_t i = 0; i < alg.dim(); ++i) m(i, j) = c[i];
  }
  GradedSubspace<F> z{r, {}};
  for (const auto& k : kernel(f, m)) z.basis.push_back(detail::combine(f, g.basis, k, alg.dim()));
  return z;
}

/// z_r for r = 0..h−1.
template <class F>
std::vector<GradedSubspace<F>> centralizer_z(const ChevalleyAlgebra<F>& alg) {
  std::vector<GradedSubspace<F>> out;
  for (int r = 0; r < alg.h(); ++r) out.push_back(centralizer_piece(alg, r));
  return out;
}

/// Ad_{w_P} for the lift of the reduced word of w_P, corrected by an adjoint
/// torus element so that X_{−1} is fixed.
template <class F>
struct WeylLift {
  Coweight mu;
  std::vector<int> word;
  Matrix<F> ad;                                // column j = Ad(b_j)
  std::vector<typename F::Element> torus;      // d_i, E_β scaled by Π d_i^{β_i}
  bool fixes_x_minus_1 = false;
  bool conjugates_u = false;                   // Ad u = u_μ
  bool monomial = false;                       // root vectors go to multiples of root vectors
};

/// Matrix exponential of a nilpotent matrix. Throws InvalidArgument when
/// the input is not nilpotent or a needed factorial vanishes.
template <class F>
Matrix<F> nilpotent_exp(const F& f, const Matrix<F>& x) {
  const std::size_t n = x.rows();
  Matrix<F> result = Matrix<F>::identity(f, n);
  Matrix<F> term = Matrix<F>::identity(f, n);
  const Matrix<F> zero(f, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = mat_mul(f, term, x);
    if (term == zero) return result;
    auto kk = f.from_int(static_cast<std::int64_t>(k));
    if (f.is_zero(kk)) throw InvalidArgument("nilpotent_exp: factorial not invertible");
    typename F::Element inv = f.one() / kk;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) term(i, j) = term(i, j) * inv;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) result(i, j) += term(i, j);
  }
  throw InvalidArgument("nilpotent_exp: input is not nilpotent");
}

/// Inverse of nilpotent_exp on unipotent matrices.
template <class F>
Matrix<F> nilpotent_log(const F& f, const Matrix<F>& u) {
  const std::size_t n = u.rows();
  Matrix<F> y = u;
  for (std::size_t i = 0; i < n; ++i) y(i, i) -= f.one();
  Matrix<F> result(f, n, n);
  Matrix<F> power = Matrix<F>::identity(f, n);
  const Matrix<F> zero(f, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = mat_mul(f, power, y);
    if (power == zero) return result;
    auto kk = f.from_int(static_cast<std::int64_t>(k));
    if (f.is_zero(kk)) throw InvalidArgument("nilpotent_log: denominator not invertible");
    typename F::Element c = (k % 2 ? f.one() : -f.one()) / kk;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) result(i, j) += power(i, j) * c;
  }
  throw InvalidArgument("nilpotent_log: input is not unipotent");
}

template <class F>
WeylLift<F> wP_representative(const ChevalleyAlgebra<F>& alg, const Coweight& mu) {
  using E = typename F::Element;
  const auto& f = alg.field();
  const RootDatum& d = alg.rd();
  const std::size_t D = alg.dim();
  WeylElement w = weyl_wP(d, mu);
  WeylLift<F> out;
  out.mu = mu;
  out.word = w.word();
  out.ad = Matrix<F>::identity(f, D);
  std::map<int, Matrix<F>> cache;
  for (int i : out.word) {
    auto it = cache.find(i);
    if (it == cache.end()) {
      auto ep = alg.ad_matrix(alg.basis(static_cast<std::size_t>(i)));
      auto em = alg.ad_matrix(alg.basis(d.negative(static_cast<std::size_t>(i))));
      for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < D; ++b) em(a, b) = -em(a, b);
      auto x = nilpotent_exp(f, ep);
      auto y = nilpotent_exp(f, em);
      it = cache.emplace(i, mat_mul(f, mat_mul(f, x, y), x)).first;
    }
    out.ad = mat_mul(f, out.ad, it->second);
  }
  // Torus correction: scale E_β by Π d_i^{β_i}, d_i = coefficient of E_{−α_i} in Ad X_{−1}.
  auto img = mat_vec(f, out.ad, alg.x_minus_1());
  const std::size_t n = static_cast<std::size_t>(d.semisimple_rank());
  out.torus.assign(n, f.one());
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    out.torus[i] = img[d.negative(i)];
    if (f.is_zero(out.torus[i])) ok = false;
  }
  if (ok) {
    std::vector<E> scale(D, f.one());
    for (std::size_t r = 0; r < d.num_roots(); ++r) {
      E s = f.one();
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t k = d.roots()[r].simple[i];
        E base = k >= 0 ? out.torus[i] : f.one() / out.torus[i];
        for (std::int64_t t = 0; t < (k >= 0 ? k : -k); ++t) s = s * base;
      }
      scale[r] = s;
    }
    for (std::size_t a = 0; a < D; ++a)
      for (std::size_t b = 0; b < D; ++b) out.ad(a, b) = out.ad(a, b) * scale[a];
    out.fixes_x_minus_1 = mat_vec(f, out.ad, alg.x_minus_1()) == alg.x_minus_1();
  }
  // Monomiality and Ad u = u_μ.
  auto um = u_mu_roots(d, mu);
  std::vector<bool> in_umu(d.num_roots(), false);
  for (auto r : um.u_mu) in_umu[r] = true;
  out.monomial = true;
  out.conjugates_u = true;
  for (std::size_t r = 0; r < d.num_roots(); ++r) {
    std::size_t target = w.act(r);
    for (std::size_t a = 0; a < D; ++a) {
      bool nz = !f.is_zero(out.ad(a, r));
      if (nz != (a == target)) out.monomial = false;
    }
    if (r < d.num_positive() && !in_umu[target]) out.conjugates_u = false;
  }
  return out;
}

/// a_r = [g(r−1−h), N⁺] for 1 ≤ r ≤ h−1 (zero for r = 1).
template <class F>
GradedSubspace<F> a_subspace(const ChevalleyAlgebra<F>& alg, int r) {
  if (r < 1 || r >= alg.h()) throw InvalidArgument("a_subspace: r out of range");
  GradedSubspace<F> a{r, {}};
  if (r == 1) return a;
  std::vector<std::vector<typename F::Element>> vs;
  for (const auto& b : height_piece(alg, r - 1 - alg.h()).basis) vs.push_back(alg.bracket(b, alg.n_plus()));
  a.basis = detail::span_basis(alg.field(), vs, alg.dim());
  return a;
}

/// a_r^μ = Ad_{w_P} a_r.
template <class F>
GradedSubspace<F> a_subspace(const ChevalleyAlgebra<F>& alg, int r, const WeylLift<F>& lift) {
  auto a = a_subspace(alg, r);
  for (auto& v : a.basis) v = mat_vec(alg.field(), lift.ad, v);
  return a;
}

template <class F>
GradedSubspace<F> a_subspace(const ChevalleyAlgebra<F>& alg, int r, const Coweight& mu) {
  return a_subspace(alg, r, wP_representative(alg, mu));
}

/// Root vectors of Φ(u_μ) in g_r.
template <class F>
GradedSubspace<F> u_mu_piece(const ChevalleyAlgebra<F>& alg, const UMuRoots& um, int r) {
  GradedSubspace<F> u{r, {}};
  std::vector<std::size_t> roots = um.u_mu;
  std::sort(roots.begin(), roots.end());
  for (auto a : roots)
    if (detail::mod_h(alg.rd().roots()[a].height, alg.h()) == r) u.basis.push_back(alg.basis(a));
  return u;
}

/// The projection z_r → g(r−h) lands in ker ad_{N⁻} and is an isomorphism onto it.
template <class F>
bool p_minus_bijective(const ChevalleyAlgebra<F>& alg, const GradedSubspace<F>& z_r) {
  const auto& f = alg.field();
  const int r = z_r.r;
  const int h = alg.h();
  if (r < 1 || r >= h) throw InvalidArgument("p_minus_bijective: r out of range");
  std::vector<std::vector<typename F::Element>> proj;
  for (const auto& z : z_r.basis) {
    auto v = alg.zero_vec();
    for (std::size_t i = 0; i < alg.dim(); ++i)
      if (!alg.structure().is_cartan(i) && alg.structure().height(i) == r - h) v[i] = z[i];
    if (!alg.is_zero(alg.bracket(alg.n_minus(), v))) return false;
    proj.push_back(std::move(v));
  }
  if (rank_of(f, proj, alg.dim()) != z_r.dim()) return false;
  auto g = height_piece(alg, r - h);
  Matrix<F> m(f, alg.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    auto c = alg.bracket(alg.n_minus(), g.basis[j]);
    for (std::size_t i = 0; i < alg.dim(); ++i) m(i, j) = c[i];
  }
  return kernel(f, m).size() == z_r.dim();
}

template <class F>
bool p_minus_bijective(const ChevalleyAlgebra<F>& alg, int r) {
  return p_minus_bijective(alg, centralizer_piece(alg, r));
}

struct DecompositionResult {
  int r = 0;
  std::size_t dim_g = 0, dim_z = 0, dim_a = 0, dim_u = 0, rank = 0;
  bool homogeneous = true;
  bool pass() const { return homogeneous && dim_z + dim_a + dim_u == dim_g && rank == dim_g; }
};

/// g_r = z_r ⊕ a_r^μ ⊕ u_{μ,r} by exact rank.
template <class F>
DecompositionResult decomposition_check(const ChevalleyAlgebra<F>& alg, const WeylLift<F>& lift,
                                        const GradedSubspace<F>& z_r) {
  const int r = z_r.r;
  const int h = alg.h();
  DecompositionResult res;
  res.r = r;
  auto g = grading_piece(alg, r);
  auto a = a_subspace(alg, r, lift);
  auto um = u_mu_roots(alg.rd(), lift.mu);
  auto u = u_mu_piece(alg, um, r);
  res.dim_g = g.dim();
  res.dim_z = z_r.dim();
  res.dim_a = a.dim();
  res.dim_u = u.dim();
  std::vector<std::vector<typename F::Element>> all;
  for (const GradedSubspace<F>* part : {&z_r, static_cast<const GradedSubspace<F>*>(&a), static_cast<const GradedSubspace<F>*>(&u)})
    for (const auto& v : part->basis) {
      for (std::size_t i = 0; i < alg.dim(); ++i)
        if (!alg.field().is_zero(v[i]) && detail::mod_h(alg.structure().height(i), h) != r) res.homogeneous = false;
      all.push_back(v);
    }
  res.rank = rank_of(alg.field(), all, alg.dim());
  return res;
}

template <class F>
DecompositionResult decomposition_check(const ChevalleyAlgebra<F>& alg, const Coweight& mu, int r) {
  return decomposition_check(alg, wP_representative(alg, mu), centralizer_piece(alg, r));
}

struct LinearKernelResult {
  int r = 0;
  std::size_t dim_a = 0, rank = 0;
  bool split_ok = false;  // g(h−r) = ker ad_{N⁺} ⊕ [N⁻, g(h+1−r)]
  bool pass() const { return split_ok && rank == dim_a; }
};

/// {e ∈ a_r : κ([e, N⁻], g(h+1−r)) = 0} = {0}, together with the splitting of g(h−r).
template <class F>
LinearKernelResult relevance_linear_kernel(const ChevalleyAlgebra<F>& alg, int r) {
  const auto& f = alg.field();
  const int h = alg.h();
  if (r < 2 || 2 * r > h + 1) throw InvalidArgument("relevance_linear_kernel: r out of range");
  LinearKernelResult res;
  res.r = r;
  auto a = a_subspace(alg, r);
  auto g = height_piece(alg, h + 1 - r);
  res.dim_a = a.dim();
  if (a.dim()) {
    Matrix<F> m(f, a.dim(), g.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto c = alg.bracket(a.basis[i], alg.n_minus());
      for (std::size_t j = 0; j < g.dim(); ++j) m(i, j) = alg.kappa(c, g.basis[j]);
    }
    res.rank = rank(f, m);
  }
  auto target = height_piece(alg, h - r);
  Matrix<F> adp(f, alg.dim(), target.dim());
  for (std::size_t j = 0; j < target.dim(); ++j) {
    auto c = alg.bracket(alg.n_plus(), target.basis[j]);
    for (std::size_t i = 0; i < alg.dim(); ++i) adp(i, j) = c[i];
  }
  std::vector<std::vector<typename F::Element>> parts;
  for (const auto& k : kernel(f, adp)) parts.push_back(detail::combine(f, target.basis, k, alg.dim()));
  std::size_t nker = parts.size();
  for (const auto& b : g.basis) parts.push_back(alg.bracket(alg.n_minus(), b));
  std::size_t nimg = rank_of(f, std::vector<std::vector<typename F::Element>>(parts.begin() + nker, parts.end()),
                             alg.dim());
  res.split_ok = nker + nimg == target.dim() && rank_of(f, parts, alg.dim()) == target.dim();
  return res;
}

/// Element of g((t)) truncated by affine depth: components t^k·b_i with
/// depth k·h + Ht(b_i).
template <class F>
using LaurentLie = std::map<int, std::vector<typename F::Element>>;

template <class F>
struct QuadraticRelevance {
  std::size_t dim_a = 0;
  std::size_t searched = 0;
  std::size_t lines = 0;  // stabilizer lines imposing conditions
  std::vector<std::vector<typename F::Element>> solutions;  // coordinates in the a-basis
};

/// Enumerates e ∈ a(F_p) = ⊕_{2≤r≤⌈h/2⌉} a_r with
/// Res κ(Ad_{exp e'} X̃, Y) = 0 for all lines Y of Ad_{t^{−μ}} u_μ ∩ Lie I(⌊h/2⌋+1),
/// where e' = Ad_{t^{−μ}}(t·Ad_{w_P} e) and X̃ = t^{−1}N⁻ + t^{−2}E_θ.
/// Rigidity means the only solution is e = 0.
inline QuadraticRelevance<FqField> relevance_quadratic_bruteforce(const ChevalleyAlgebra<FqField>& alg,
                                                                  const Coweight& mu,
                                                                  std::uint64_t budget = 10'000'000) {
  using F = FqField;
  using E = F::Element;
  using Vec = std::vector<E>;
  const F& f = alg.field();
  const RootDatum& d = alg.rd();
  const auto& s = alg.structure();
  const int h = alg.h();
  const std::size_t D = alg.dim();
  const std::uint32_t q = f.gf->q();
  const int thr = h / 2 + 1;
  const int cutoff = -thr;  // components of depth > cutoff cannot pair with the lines

  auto lift = wP_representative(alg, mu);
  std::vector<Vec> abasis;
  for (int r = 2; 2 * r <= h + 1; ++r)
    for (auto& v : a_subspace(alg, r, lift).basis) abasis.push_back(v);
  QuadraticRelevance<F> res;
  res.dim_a = abasis.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < abasis.size(); ++i) {
    total *= q;
    if (total > budget) throw BudgetExceeded("relevance_quadratic_bruteforce: search space exceeds budget");
  }

  auto depth = [&](int k, std::size_t i) { return k * h + s.height(i); };
  auto mu_pair = [&](std::size_t root) { return static_cast<int>(d.pair_root(root, mu.coords)); };

  struct Line {
    int power;
    std::size_t root;
  };
  std::vector<Line> lines;
  for (auto b : u_mu_roots(d, mu).u_mu) {
    int i = -mu_pair(b);
    if (depth(i, b) >= thr) lines.push_back({i, b});
  }
  res.lines = lines.size();

  auto bracket_loop = [&](const LaurentLie<F>& x, const LaurentLie<F>& y) {
    LaurentLie<F> out;
    for (const auto& [kx, vx] : x)
      for (const auto& [ky, vy] : y) {
        auto b = alg.bracket(vx, vy);
        auto& slot = out.try_emplace(kx + ky, Vec(D, f.zero())).first->second;
        for (std::size_t i = 0; i < D; ++i)
          if (!f.is_zero(b[i]) && depth(kx + ky, i) <= cutoff) slot[i] += b[i];
      }
    return out;
  };
  auto loop_zero = [&](const LaurentLie<F>& x) {
    for (const auto& [k, v] : x)
      if (!alg.is_zero(v)) return false;
    return true;
  };

  LaurentLie<F> xt;
  xt[-1] = alg.n_minus();
  xt[-2] = alg.e_theta();

  std::vector<std::uint32_t> digits(abasis.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rem = idx;
    for (auto& dg : digits) {
      dg = static_cast<std::uint32_t>(rem % q);
      rem /= q;
    }
    Vec e = alg.zero_vec();
    std::vector<E> coords;
    for (std::size_t k = 0; k < abasis.size(); ++k) {
      E c = f.of(digits[k]);
      coords.push_back(c);
      if (f.is_zero(c)) continue;
      for (std::size_t i = 0; i < D; ++i) e[i] += c * abasis[k][i];
    }
    LaurentLie<F> el;
    for (std::size_t i = 0; i < d.num_roots(); ++i) {
      if (f.is_zero(e[i])) continue;
      int k = 1 - mu_pair(i);
      el.try_emplace(k, Vec(D, f.zero())).first->second[i] = e[i];
    }
    // Z = Σ_j ad_e^j X̃ / j!
    LaurentLie<F> z = xt, term = xt;
    for (int j = 1; j <= 2 * h + 2; ++j) {
      term = bracket_loop(el, term);
      if (loop_zero(term)) break;
      E inv = f.one() / f.from_int(j);
      for (auto& [k, v] : term) {
        for (auto& x : v) x = x * inv;
        auto& slot = z.try_emplace(k, Vec(D, f.zero())).first->second;
        for (std::size_t i = 0; i < D; ++i) slot[i] += v[i];
      }
    }
    bool relevant = true;
    for (const auto& ln : lines) {
      auto it = z.find(-ln.power);
      if (it == z.end()) continue;
      if (!f.is_zero(alg.kappa(it->second, alg.basis(ln.root)))) {
        relevant = false;
        break;
      }
    }
    ++res.searched;
    if (relevant) res.solutions.push_back(coords);
  }
  return res;
}

/// Graph structure of p_−(S(1)) modulo I(1+h/2).
///
/// λ-variables: one per basis vector of z_r, 1 ≤ r ≤ h/2 (block r). Z[β]
/// is the coefficient of t·E_β (Ht β ≤ −h/2) in log(exp(−v⁺)exp(v)).
/// Φ_S picks, per block, roots of height r−h whose coefficient minor is
/// invertible; f_β expresses the remaining coordinates in the Φ_S ones.
template <class F>
struct S1Graph {
  std::size_t nvars = 0;
  std::vector<int> var_block;                      // r of each λ variable
  std::vector<std::vector<std::size_t>> blocks;     // variable indices per r
  std::vector<std::size_t> kept_roots;              // Ht β ≤ −h/2, root order
  std::map<std::size_t, MultiPoly<F>> z;            // β → Z_β(λ)
  std::vector<std::size_t> phi_s;                   // block order
  std::vector<MultiPoly<F>> lambda_of_y;            // λ_i(y), y indexed like phi_s
  std::map<std::size_t, MultiPoly<F>> graph;        // β ∉ Φ_S → f_β(y)
  bool triangular_ok = false;
};

namespace detail {

template <class F>
std::vector<MultiPoly<F>> poly_bracket(const ChevalleyAlgebra<F>& alg, const std::vector<MultiPoly<F>>& x,
                                       const std::vector<MultiPoly<F>>& y, std::size_t nvars) {
  const auto& s = alg.structure();
  const auto& f = alg.field();
  const std::size_t D = alg.dim();
  std::vector<MultiPoly<F>> out(D, MultiPoly<F>(f, nvars));
  for (std::size_t i = 0; i < D; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < D; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = s.bracket(i, j);
      if (terms.empty()) continue;
      auto prod = x[i] * y[j];
      for (const auto& t : terms) out[t.index] += prod.scaled(f.from_int(t.coeff));
    }
  }
  return out;
}

}  // namespace detail

template <class F>
S1Graph<F> s1_graph(const ChevalleyAlgebra<F>& alg) {
  using P = MultiPoly<F>;
  const auto& f = alg.field();
  const auto& s = alg.structure();
  const RootDatum& d = alg.rd();
  const int h = alg.h();
  const std::size_t D = alg.dim();
  S1Graph<F> g;

  std::vector<std::vector<typename F::Element>> wvec;
  for (int r = 1; 2 * r <= h; ++r) {
    auto z = centralizer_piece(alg, r);
    std::vector<std::size_t> blk;
    for (auto& w : z.basis) {
      blk.push_back(wvec.size());
      g.var_block.push_back(r);
      wvec.push_back(w);
    }
    g.blocks.push_back(blk);
  }
  g.nvars = wvec.size();
  const std::size_t N = g.nvars;

  std::vector<P> vplus(D, P(f, N)), vminus(D, P(f, N));
  for (std::size_t k = 0; k < N; ++k) {
    auto lam = P::variable(f, N, k);
    for (std::size_t i = 0; i < d.num_roots(); ++i) {
      if (f.is_zero(wvec[k][i])) continue;
      auto& dst = s.height(i) > 0 ? vplus : vminus;
      dst[i] += lam.scaled(wvec[k][i]);
    }
  }
  auto keep = [&](std::size_t i) { return i < d.num_roots() && 2 * s.height(i) <= -h; };
  for (std::size_t i = 0; i < d.num_roots(); ++i)
    if (keep(i)) g.kept_roots.push_back(i);

  // Z = Σ_j (−1)^j/(j+1)! ad_{v⁺}^j(v⁻), restricted to kept roots.
  std::vector<P> zsum = vminus, term = vminus;
  typename F::Element fact = f.one();
  for (int j = 1; j <= h; ++j) {
    term = detail::poly_bracket(alg, vplus, term, N);
    for (std::size_t i = 0; i < D; ++i)
      if (!keep(i)) term[i] = P(f, N);
    bool zero = true;
    for (const auto& t : term) zero = zero && t.is_zero();
    if (zero) break;
    fact = fact * f.from_int(j + 1);
    if (f.is_zero(fact)) throw InvalidArgument("s1_graph: BCH denominator not invertible");
    typename F::Element c = (j % 2 ? -f.one() : f.one()) / fact;
    for (std::size_t i = 0; i < D; ++i) zsum[i] += term[i].scaled(c);
  }
  for (auto b : g.kept_roots) g.z.emplace(b, zsum[b]);

  // Φ_S: per block, lex-first subset of height-(r−h) roots with invertible minor.
  std::vector<std::vector<std::size_t>> phi_blocks;
  std::vector<std::size_t> y_of_var;  // position of each chosen root
  for (std::size_t b = 0; b < g.blocks.size(); ++b) {
    const auto& blk = g.blocks[b];
    const int r = static_cast<int>(b) + 1;
    std::vector<std::size_t> cand;
    for (auto i : g.kept_roots)
      if (s.height(i) == r - h) cand.push_back(i);
    const std::size_t k = blk.size();
    std::vector<std::size_t> choice;
    if (k > 0) {
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      bool found = false;
      while (!found && k <= cand.size()) {
        Matrix<F> m(f, k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t c = 0; c < k; ++c) m(a, c) = wvec[blk[c]][cand[idx[a]]];
        if (rank(f, m) == k) {
          found = true;
          break;
        }
        // next combination
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == cand.size() - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t a = pos; a < k; ++a) idx[a] = idx[a - 1] + 1;
      }
      AIRY_ENSURE(found, "s1_graph: no admissible Φ_S choice");
      for (auto i : idx) choice.push_back(cand[i]);
    }
    phi_blocks.push_back(choice);
    for (auto c : choice) g.phi_s.push_back(c);
  }

  // y_a = Z_{Φ_S[a]}(λ); invert block-triangularly. The variable sets are
  // matched positionally: y_a lives in slot `blocks`-order of λ.
  std::vector<std::size_t> order;  // λ variables in block order
  for (const auto& blk : g.blocks)
    for (auto i : blk) order.push_back(i);
  std::vector<P> ys(N, P(f, N));
  for (std::size_t a = 0; a < N; ++a) ys[order[a]] = g.z.at(g.phi_s[a]);
  try {
    g.lambda_of_y = invert_block_triangular(f, ys, g.blocks);
    g.triangular_ok = true;
  } catch (const InvalidArgument&) {
    g.triangular_ok = false;
    return g;
  }
  // λ_of_y[i] is expressed in variables y indexed by the λ slot order; rename
  // so that y-variable a corresponds to phi_s[a].
  std::vector<std::size_t> slot_to_y(N);
  for (std::size_t a = 0; a < N; ++a) slot_to_y[order[a]] = a;
  std::vector<P> yvars(N);
  for (std::size_t i = 0; i < N; ++i) yvars[i] = P::variable(f, N, slot_to_y[i]);
  for (auto& poly : g.lambda_of_y) poly = poly.substitute(yvars);
  std::vector<bool> in_phi(d.num_roots(), false);
  for (auto b : g.phi_s) in_phi[b] = true;
  for (auto b : g.kept_roots)
    if (!in_phi[b]) g.graph.emplace(b, g.z.at(b).substitute(g.lambda_of_y));
  // The substitution must reproduce the Φ_S coordinates themselves.
  for (std::size_t a = 0; a < N; ++a)
    if (g.z.at(g.phi_s[a]).substitute(g.lambda_of_y) != P::variable(f, N, a)) g.triangular_ok = false;
  return g;
}

/// First Jacobi violation among basis triples, if any.
template <class F>
std::optional<std::array<std::size_t, 3>> jacobi_violation(const ChevalleyAlgebra<F>& alg) {
  const std::size_t D = alg.dim();
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = i + 1; j < D; ++j) {
      auto bij = alg.bracket(alg.basis(i), alg.basis(j));
      for (std::size_t k = j + 1; k < D; ++k) {
        auto x = alg.bracket(alg.basis(k), bij);
        auto y = alg.bracket(alg.basis(i), alg.bracket(alg.basis(j), alg.basis(k)));
        auto z = alg.bracket(alg.basis(j), alg.bracket(alg.basis(k), alg.basis(i)));
        for (std::size_t a = 0; a < D; ++a) x[a] += y[a] + z[a];
        if (!alg.is_zero(x)) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

/// First basis triple violating κ([x,y],z) = κ(x,[y,z]), if any.
template <class F>
std::optional<std::array<std::size_t, 3>> kappa_invariance_violation(const ChevalleyAlgebra<F>& alg) {
  const std::size_t D = alg.dim();
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      auto bij = alg.bracket(alg.basis(i), alg.basis(j));
      for (std::size_t k = 0; k < D; ++k) {
        auto lhs = alg.kappa(bij, alg.basis(k));
        auto rhs = alg.kappa(alg.basis(i), alg.bracket(alg.basis(j), alg.basis(k)));
        if (lhs != rhs) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

/// Gram matrix of κ.
template <class F>
Matrix<F> kappa_matrix(const ChevalleyAlgebra<F>& alg) {
  Matrix<F> m(alg.field(), alg.dim(), alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) m(i, j) = alg.from_int(alg.structure().kappa(i, j));
  return m;
}

/// n×n matrix of the w_P lift for GL_n: D · Π n_i with
/// n_i = exp(E_{i,i+1})exp(−E_{i+1,i})exp(E_{i,i+1}) and D the torus
/// correction (D_n = 1, D_i = d_i D_{i+1}). Conjugation by it equals lift.ad.
template <class F>
Matrix<F> gl_wP_matrix(const F& f, int n, const WeylLift<F>& lift) {
  const std::size_t N = static_cast<std::size_t>(n);
  Matrix<F> g = Matrix<F>::identity(f, N);
  for (int i : lift.word) {
    Matrix<F> ni = Matrix<F>::identity(f, N);
    const std::size_t a = static_cast<std::size_t>(i);
    ni(a, a) = f.zero();
    ni(a + 1, a + 1) = f.zero();
    ni(a, a + 1) = f.one();
    ni(a + 1, a) = -f.one();
    g = mat_mul(f, g, ni);
  }
  Matrix<F> dm(f, N, N);
  typename F::Element acc = f.one();
  dm(N - 1, N - 1) = acc;
  for (std::size_t k = N - 1; k-- > 0;) {
    acc = lift.torus[k] * acc;
    dm(k, k) = acc;
  }
  return mat_mul(f, dm, g);
}

}  // namespace airy
