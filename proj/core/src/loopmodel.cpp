#include "airy/loopmodel.hpp"

#include <algorithm>

namespace airy {

std::vector<AffineLine> filtration_basis(const RootDatum& rd, int r) {
  if (r < 0) throw InvalidArgument("filtration_basis: r must be non-negative");
  const int h = rd.coxeter_number();
  std::vector<AffineLine> out;
  for (int k = 0; k <= r / h + 1; ++k) {
    if (k * h == r) out.push_back({std::nullopt, k, r});
    for (std::size_t a = 0; a < rd.num_roots(); ++a)
      if (k * h + rd.roots()[a].height == r) out.push_back({a, k, r});
  }
  return out;
}

std::size_t filtration_quotient_dim(const RootDatum& rd, int lo, int hi) {
  std::size_t total = 0;
  for (int r = lo; r < hi; ++r)
    for (const auto& l : filtration_basis(rd, r)) total += l.root ? 1 : static_cast<std::size_t>(rd.dim_torus());
  return total;
}

StabRoots stab_affine_roots(const RootDatum& rd, const Coweight& mu) {
  if (!is_minuscule(rd, mu)) throw InvalidArgument("stab_affine_roots: μ is not minuscule");
  const int h = rd.coxeter_number();
  StabRoots s;
  for (std::size_t a = 0; a < rd.num_roots(); ++a) {
    const auto m = rd.pair_root(a, mu.coords);
    const int ht = rd.roots()[a].height;
    // i = −m' − <α,μ> for m' ≥ 0, intersected with depth ≥ 1 and i ≥ 0
    for (std::int64_t i = 0; i <= -m; ++i)
      if (i * h + ht >= 1) s.lines.insert({a, static_cast<int>(i)});
    if (ht > 0 && m == 0) s.expected.insert({a, 0});
    if (ht < 0 && m == -1) s.expected.insert({a, 1});
  }
  return s;
}

OddParahoric odd_parahoric_check(const RootDatum& rd) {
  const int h = rd.coxeter_number();
  const bool type_a = rd.series() == Series::A || rd.series() == Series::GL;
  if (!type_a || h % 2 == 0) throw InvalidArgument("odd_parahoric_check: requires type A_{2n}");
  OddParahoric o;
  o.n = (h - 1) / 2;
  const int n = o.n;
  const int period = 2 * n;
  std::size_t cartan = static_cast<std::size_t>(rd.dim_torus());
  o.p2_in_i2 = o.i_n2_in_p = o.p_in_i_n1 = true;
  for (int k = -1; k <= 4; ++k) {
    auto visit = [&](int ht, std::size_t weight) {
      int di = k * h + ht;
      int dp = k * period + ht;
      if (dp >= 2 && di < 2) o.p2_in_i2 = false;
      if (di >= n + 2 && dp < n + 1) o.i_n2_in_p = false;
      if (dp >= n + 1 && di < n + 1) o.p_in_i_n1 = false;
      if (dp >= n + 1 && di < n + 2) o.top += weight;
      if (di >= n + 1 && dp < n + 1) o.bottom += weight;
    };
    visit(0, cartan);
    for (const auto& root : rd.roots()) visit(root.height, 1);
  }
  o.expected_top = static_cast<std::size_t>(rd.positive_height_count(n + 1));
  o.expected_bottom = static_cast<std::size_t>(rd.positive_height_count(h - n - 1));
  return o;
}

namespace {

std::shared_ptr<const LieStructure> gl_structure(int n) {
  return make_lie_structure(Series::GL, n, Form::GL);
}

}  // namespace

GLLoopModel::GLLoopModel(int n, std::uint32_t p, Coweight mu)
    : n_(n), N_(n + 2), f_(p, 1), mu_(std::move(mu)), alg_(gl_structure(n), f_) {
  const RootDatum& d = alg_.rd();
  if (!is_minuscule(d, mu_)) throw InvalidArgument("GLLoopModel: μ is not minuscule");
  const std::size_t un = static_cast<std::size_t>(n);
  ends_.resize(d.num_roots());
  at_.assign(un * un, SIZE_MAX);
  for (std::size_t r = 0; r < d.num_roots(); ++r) {
    const auto& ch = d.roots()[r].character;
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < un; ++i) {
      if (ch[i] == 1) a = i;
      if (ch[i] == -1) b = i;
    }
    ends_[r] = {a, b};
    at_[a * un + b] = r;
  }
  auto um = u_mu_roots(d, mu_);
  in_umu_.assign(d.num_roots(), false);
  for (auto r : um.u_mu) in_umu_[r] = true;

  auto lift = wP_representative(alg_, mu_);
  if (!lift.fixes_x_minus_1) throw InternalError("GLLoopModel: w_P lift does not fix X_{-1}");
  for (int r = 1; r <= steps(); ++r) {
    StepBasis sb;
    sb.z = centralizer_piece(alg_, r).basis;
    sb.a = a_subspace(alg_, r, lift).basis;
    sb.u = u_mu_piece(alg_, um, r).basis;
    for (std::size_t i = 0; i < alg_.dim(); ++i)
      if (detail::mod_h(alg_.structure().height(i), n_) == r) sb.rows.push_back(i);
    std::vector<std::vector<Fq>> cols;
    for (auto* part : {&sb.z, &sb.a, &sb.u})
      for (auto& v : *part) cols.push_back(v);
    if (cols.size() != sb.rows.size()) throw InternalError("GLLoopModel: g_r decomposition has wrong dimension");
    Matrix<FqField> m(f_, sb.rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < sb.rows.size(); ++i) m(i, j) = cols[j][sb.rows[i]];
    auto inv = airy::inverse(f_, m);
    if (!inv) throw InternalError("GLLoopModel: g_r decomposition is not direct");
    sb.solve_inverse = *inv;
    steps_.push_back(std::move(sb));
    if (r >= 2)
      for (auto& v : a_subspace(alg_, r).basis) a_plain_.push_back({r, v});
  }
}

LoopMatrix GLLoopModel::zero() const {
  const std::size_t un = static_cast<std::size_t>(n_);
  return LoopMatrix{std::vector<Matrix<FqField>>(static_cast<std::size_t>(N_), Matrix<FqField>(f_, un, un))};
}

LoopMatrix GLLoopModel::identity() const {
  auto g = zero();
  g.c[0] = Matrix<FqField>::identity(f_, static_cast<std::size_t>(n_));
  return g;
}

LoopMatrix GLLoopModel::mul(const LoopMatrix& a, const LoopMatrix& b) const {
  auto r = zero();
  const std::size_t un = static_cast<std::size_t>(n_);
  for (int i = 0; i < N_; ++i)
    for (int j = 0; i + j < N_; ++j) {
      const auto& x = a.c[static_cast<std::size_t>(i)];
      const auto& y = b.c[static_cast<std::size_t>(j)];
      auto& out = r.c[static_cast<std::size_t>(i + j)];
      for (std::size_t p = 0; p < un; ++p)
        for (std::size_t k = 0; k < un; ++k) {
          if (FqField::is_zero(x(p, k))) continue;
          for (std::size_t q = 0; q < un; ++q) out(p, q) += x(p, k) * y(k, q);
        }
    }
  return r;
}

LoopMatrix GLLoopModel::add(const LoopMatrix& a, const LoopMatrix& b) const {
  auto r = a;
  const std::size_t un = static_cast<std::size_t>(n_);
  for (std::size_t k = 0; k < r.c.size(); ++k)
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) r.c[k](i, j) += b.c[k](i, j);
  return r;
}

LoopMatrix GLLoopModel::scaled(const LoopMatrix& a, Fq s) const {
  auto r = a;
  for (auto& m : r.c)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * s;
  return r;
}

LoopMatrix GLLoopModel::inverse(const LoopMatrix& a) const {
  auto inv0 = airy::inverse(f_, a.c[0]);
  if (!inv0) throw InvalidArgument("GLLoopModel::inverse: not invertible mod t");
  auto b = zero();
  b.c[0] = *inv0;
  const std::size_t un = static_cast<std::size_t>(n_);
  for (int k = 1; k < N_; ++k) {
    Matrix<FqField> acc(f_, un, un);
    for (int j = 1; j <= k; ++j) {
      auto t = mat_mul(f_, a.c[static_cast<std::size_t>(j)], b.c[static_cast<std::size_t>(k - j)]);
      for (std::size_t p = 0; p < un; ++p)
        for (std::size_t q = 0; q < un; ++q) acc(p, q) += t(p, q);
    }
    auto t = mat_mul(f_, *inv0, acc);
    for (std::size_t p = 0; p < un; ++p)
      for (std::size_t q = 0; q < un; ++q) b.c[static_cast<std::size_t>(k)](p, q) = -t(p, q);
  }
  return b;
}

LoopMatrix GLLoopModel::exp(const LoopMatrix& x) const {
  auto result = identity();
  auto term = identity();
  const auto z = zero();
  const int cap = n_ * N_ + 1;
  for (int k = 1; k <= cap; ++k) {
    term = mul(term, x);
    if (term == z) return result;
    Fq kk = f_.from_int(k);
    if (FqField::is_zero(kk)) throw InvalidArgument("GLLoopModel::exp: factorial not invertible");
    term = scaled(term, f_.one() / kk);
    result = add(result, term);
  }
  throw InvalidArgument("GLLoopModel::exp: input is not nilpotent");
}

int GLLoopModel::depth_of_lie(const LoopMatrix& x) const {
  int best = INT_MAX;
  const std::size_t un = static_cast<std::size_t>(n_);
  for (int k = 0; k < N_; ++k)
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j)
        if (!FqField::is_zero(x.c[static_cast<std::size_t>(k)](i, j)))
          best = std::min(best, k * n_ + static_cast<int>(j) - static_cast<int>(i));
  return best;
}

int GLLoopModel::depth(const LoopMatrix& g) const {
  auto x = g;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) x.c[0](i, i) -= f_.one();
  return depth_of_lie(x);
}

LoopMatrix GLLoopModel::random_I1(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(0, f_.gf->q() - 1);
  auto g = identity();
  const std::size_t un = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j) g.c[0](i, j) = f_.of(dist(rng));
  for (int k = 1; k < N_; ++k)
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) g.c[static_cast<std::size_t>(k)](i, j) = f_.of(dist(rng));
  return g;
}

LoopMatrix GLLoopModel::place(const std::vector<Fq>& v, int r) const {
  auto x = zero();
  const auto& s = alg_.structure();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (FqField::is_zero(v[i])) continue;
    std::size_t a, b;
    if (s.is_cartan(i)) {
      a = b = i - s.num_roots();
    } else {
      std::tie(a, b) = ends_[i];
    }
    int ht = s.height(i);
    if ((r - ht) % n_ != 0 || r < ht) throw InvalidArgument("GLLoopModel::place: vector not homogeneous of depth r");
    int k = (r - ht) / n_;
    if (k < N_) x.c[static_cast<std::size_t>(k)](a, b) += v[i];
  }
  return x;
}

std::vector<Fq> GLLoopModel::image(const LoopMatrix& x, int r) const {
  std::vector<Fq> v = alg_.zero_vec();
  const std::size_t un = static_cast<std::size_t>(n_);
  for (int k = 0; k < N_; ++k)
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) {
        if (k * n_ + static_cast<int>(j) - static_cast<int>(i) != r) continue;
        const Fq& c = x.c[static_cast<std::size_t>(k)](i, j);
        if (FqField::is_zero(c)) continue;
        std::size_t idx = i == j ? alg_.structure().num_roots() + i : root_at(i, j);
        v[idx] += c;
      }
  return v;
}

LoopMatrix GLLoopModel::z_element(int r) const {
  if (r < 1 || r > n_ + 1) throw InvalidArgument("z_element: r out of range");
  auto z = zero();
  const std::size_t un = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < un; ++i) {
    std::size_t j = (i + static_cast<std::size_t>(r)) % un;
    int d = static_cast<int>(j) - static_cast<int>(i);
    int k = (r - d) / n_;
    if (k < N_) z.c[static_cast<std::size_t>(k)](i, j) = f_.one();
  }
  return z;
}

LoopMatrix GLLoopModel::x_tilde_t2() const {
  auto x = zero();
  const std::size_t un = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i + 1 < un; ++i) x.c[1](i + 1, i) = f_.one();
  x.c[0](0, un - 1) += f_.one();
  return x;
}

Factorization GLLoopModel::factorize_I1(const LoopMatrix& g) const {
  if (depth(g) < 1) throw InvalidArgument("factorize_I1: input is not in I(1)");
  const std::size_t un = static_cast<std::size_t>(n_);
  Factorization out;
  auto u = identity();
  auto v = zero();
  auto s = identity();
  for (int r = 1; r <= steps(); ++r) {
    const auto& sb = steps_[static_cast<std::size_t>(r - 1)];
    auto rem = mul(inverse(mul(mul(u, exp(v)), s)), g);
    AIRY_ENSURE(depth(rem) >= r, "factorize_I1: remainder left the filtration step");
    for (std::size_t i = 0; i < un; ++i) rem.c[0](i, i) -= f_.one();
    auto img = image(rem, r);
    std::vector<Fq> rhs;
    for (auto i : sb.rows) rhs.push_back(img[i]);
    auto coords = mat_vec(f_, sb.solve_inverse, rhs);
    std::vector<Fq> zv = alg_.zero_vec(), av = alg_.zero_vec(), xv = alg_.zero_vec();
    std::size_t k = 0;
    auto accumulate = [&](const std::vector<std::vector<Fq>>& basis, std::vector<Fq>& dst) {
      for (const auto& b : basis) {
        const Fq c = coords[k++];
        if (FqField::is_zero(c)) continue;
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * b[i];
      }
    };
    accumulate(sb.z, zv);
    accumulate(sb.a, av);
    accumulate(sb.u, xv);

    u = mul(u, exp(place(xv, r)));
    v = add(v, place(av, r));
    auto zl = place(zv, r);
    s = mul(s, add(identity(), zl));
    // coefficient against Z_r
    auto zr = z_element(r);
    Fq coeff = f_.zero();
    for (int kk = 0; kk < N_ && FqField::is_zero(coeff); ++kk)
      for (std::size_t i = 0; i < un && FqField::is_zero(coeff); ++i)
        for (std::size_t j = 0; j < un; ++j)
          if (!FqField::is_zero(zr.c[static_cast<std::size_t>(kk)](i, j))) {
            coeff = zl.c[static_cast<std::size_t>(kk)](i, j) / zr.c[static_cast<std::size_t>(kk)](i, j);
            break;
          }
    out.s_coeffs.push_back(coeff);
  }
  out.u = u;
  out.a = exp(v);
  out.s = s;
  out.residual = mul(inverse(mul(mul(u, out.a), s)), g);
  out.residual_depth = depth(out.residual);
  out.reconstructs = mul(mul(mul(u, out.a), s), out.residual) == g;

  // t^μ u t^{−μ} is t-free, unipotent, supported on Φ(u_μ).
  out.u_ok = true;
  for (int kk = 0; kk < N_; ++kk)
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) {
        const Fq& c = u.c[static_cast<std::size_t>(kk)](i, j);
        const bool diag = i == j;
        if (diag) {
          Fq expect = kk == 0 ? f_.one() : f_.zero();
          if (c != expect) out.u_ok = false;
          continue;
        }
        if (FqField::is_zero(c)) continue;
        std::int64_t shift = mu_.coords[i] - mu_.coords[j];
        if (kk + shift != 0 || !in_umu_[root_at(i, j)]) out.u_ok = false;
      }
  // log a = v has each root entry α at t^{1−<α,μ>}, off Φ(u_μ).
  out.a_ok = true;
  for (int kk = 0; kk < N_; ++kk)
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) {
        const Fq& c = v.c[static_cast<std::size_t>(kk)](i, j);
        if (FqField::is_zero(c)) continue;
        if (i == j) {
          out.a_ok = false;
          continue;
        }
        std::int64_t pair = mu_.coords[i] - mu_.coords[j];
        if (kk != 1 - pair || in_umu_[root_at(i, j)]) out.a_ok = false;
      }
  auto xt = x_tilde_t2();
  out.s_ok = mul(s, xt) == mul(xt, s);
  return out;
}

int GLLoopModel::exp_product_valuation(const std::vector<Fq>& y1, const std::vector<Fq>& y2) const {
  auto at_t = [&](const std::vector<Fq>& y) {
    auto x = zero();
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (FqField::is_zero(y[i])) continue;
      AIRY_ENSURE(!alg_.structure().is_cartan(i) && alg_.structure().height(i) < 0,
                  "exp_product_valuation: input must lie in the negative part");
      auto [a, b] = ends_[i];
      x.c[1](a, b) += y[i];
    }
    return x;
  };
  auto x1 = at_t(y1), x2 = at_t(y2);
  auto sum = add(x1, x2);
  auto prod = mul(mul(exp(scaled(sum, -f_.one())), exp(x1)), exp(x2));
  return depth(prod);
}

}  // namespace airy
