#include "airy/lie_structure.hpp"

#include <map>

#include "airy/error.hpp"

namespace airy {

namespace {

// Carter's algorithm: all N_{α,β} from the extraspecial pairs.
class ConstantSolver {
 public:
  explicit ConstantSolver(const RootDatum& rd) : rd_(rd), P_(rd.num_positive()) {
    ext_.assign(rd.num_roots(), {P_, P_});
    for (std::size_t a = 0; a < P_; ++a)
      for (std::size_t b = a + 1; b < P_; ++b) {
        auto s = rd.sum(a, b);
        if (s && ext_[*s].first == P_) ext_[*s] = {a, b};
      }
  }

  std::int64_t N(std::size_t a, std::size_t b) {
    auto s = rd_.sum(a, b);
    if (!s) return 0;
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::int64_t v = compute(a, b, *s);
    memo_[key] = v;
    return v;
  }

 private:
  bool pos(std::size_t r) const { return r < P_; }
  std::size_t neg(std::size_t r) const { return rd_.negative(r); }

  // r = max k with β - kα a root
  std::int64_t string_below(std::size_t a, std::size_t b) const {
    IVec v = rd_.roots()[b].simple;
    std::int64_t k = 0;
    while (true) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= rd_.roots()[a].simple[i];
      if (!rd_.find_simple(v)) return k;
      ++k;
    }
  }

  std::int64_t to_int(const Rational& x) const {
    AIRY_ENSURE(x.get_den() == 1, "non-integral structure constant");
    return x.get_num().get_si();
  }

  std::int64_t compute(std::size_t a, std::size_t b, std::size_t xi) {
    if (pos(a) && pos(b)) {
      if (a > b) return -N(b, a);
      auto [g, d] = ext_[xi];
      if (g == a && d == b) return string_below(a, b) + 1;
      Rational acc = 0;
      if (auto bg = rd_.sum(b, neg(g))) {
        acc += Rational(N(b, neg(g)) * N(a, neg(d))) / rd_.norm2(*bg);
      }
      if (auto ag = rd_.sum(a, neg(g))) {
        acc += Rational(N(neg(g), a) * N(b, neg(d))) / rd_.norm2(*ag);
      }
      return to_int(rd_.norm2(xi) * acc / Rational(N(g, d)));
    }
    if (!pos(a) && !pos(b)) return -N(neg(a), neg(b));
    if (!pos(a)) return -N(b, a);
    // a > 0 > b
    if (pos(xi)) return to_int(-rd_.norm2(xi) / rd_.norm2(a) * Rational(N(neg(b), xi)));
    return to_int(rd_.norm2(xi) / rd_.norm2(b) * Rational(N(neg(xi), a)));
  }

  const RootDatum& rd_;
  std::size_t P_;
  std::vector<std::pair<std::size_t, std::size_t>> ext_;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> memo_;
};

}  // namespace

LieStructure::LieStructure(std::shared_ptr<const RootDatum> rd) : rd_(std::move(rd)) {
  const RootDatum& d = *rd_;
  R_ = d.num_roots();
  const std::size_t c = d.series() == Series::GL ? static_cast<std::size_t>(d.rank())
                                                  : static_cast<std::size_t>(d.semisimple_rank());
  dim_ = R_ + c;
  pairing_.assign(R_, IVec(c, 0));
  coroot_.assign(R_, IVec(c, 0));
  for (std::size_t r = 0; r < R_; ++r) {
    const auto& root = d.roots()[r];
    if (d.series() == Series::GL) {
      pairing_[r] = root.character;
      coroot_[r] = root.coroot;
    } else {
      for (std::size_t k = 0; k < c; ++k) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < c; ++j) s += root.simple[j] * d.cartan_matrix()[k][j];
        pairing_[r][k] = s;
      }
      coroot_[r] = root.coroot_simple;
    }
  }
  if (d.series() == Series::GL) build_gl_constants();
  else build_semisimple_constants();

  kappa_.assign(dim_ * dim_, 0);
  for (std::size_t r = 0; r < R_; ++r) {
    Rational v = Rational(2) / d.norm2(r);
    AIRY_ENSURE(v.get_den() == 1, "non-integral form value");
    kappa_[r * dim_ + d.negative(r)] = v.get_num().get_si();
  }
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      std::int64_t v;
      if (d.series() == Series::GL) {
        v = i == j ? 1 : 0;
      } else {
        const auto& g = d.simple_form();
        Rational x = Rational(4) * g[i][j] / (g[i][i] * g[j][j]);
        AIRY_ENSURE(x.get_den() == 1, "non-integral Cartan form");
        v = x.get_num().get_si();
      }
      kappa_[(R_ + i) * dim_ + (R_ + j)] = v;
    }
  build_table();
}

void LieStructure::build_semisimple_constants() {
  const RootDatum& d = *rd_;
  ConstantSolver solver(d);
  N_.assign(R_, std::vector<std::int64_t>(R_, 0));
  for (std::size_t a = 0; a < R_; ++a)
    for (std::size_t b = 0; b < R_; ++b) {
      if (!d.sum(a, b)) continue;
      std::int64_t v = solver.N(a, b);
      // |N_{α,β}| = r + 1 where r = max k with β - kα a root
      IVec w = d.roots()[b].simple;
      std::int64_t r = 0;
      while (true) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= d.roots()[a].simple[i];
        if (!d.find_simple(w)) break;
        ++r;
      }
      AIRY_ENSURE(v == r + 1 || v == -(r + 1), "structure constant has wrong magnitude");
      N_[a][b] = v;
    }
}

void LieStructure::build_gl_constants() {
  const RootDatum& d = *rd_;
  N_.assign(R_, std::vector<std::int64_t>(R_, 0));
  auto ends = [&](std::size_t r) {
    const auto& ch = d.roots()[r].character;
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (ch[i] == 1) a = i;
      if (ch[i] == -1) b = i;
    }
    return std::make_pair(a, b);
  };
  for (std::size_t x = 0; x < R_; ++x)
    for (std::size_t y = 0; y < R_; ++y) {
      if (!d.sum(x, y)) continue;
      auto [a, b] = ends(x);
      auto [c, e] = ends(y);
      // [E_ab, E_ce] = δ_bc E_ae − δ_ea E_cb
      if (b == c) N_[x][y] = 1;
      else if (e == a) N_[x][y] = -1;
    }
}

void LieStructure::build_table() {
  const RootDatum& d = *rd_;
  table_.assign(dim_ * dim_, {});
  const std::size_t c = dim_ - R_;
  for (std::size_t a = 0; a < R_; ++a)
    for (std::size_t b = 0; b < R_; ++b) {
      auto& out = table_[a * dim_ + b];
      if (b == d.negative(a)) {
        for (std::size_t k = 0; k < c; ++k)
          if (coroot_[a][k]) out.push_back({R_ + k, coroot_[a][k]});
      } else if (auto s = d.sum(a, b)) {
        out.push_back({*s, N_[a][b]});
      }
    }
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t a = 0; a < R_; ++a) {
      std::int64_t v = pairing_[a][k];
      if (!v) continue;
      table_[(R_ + k) * dim_ + a].push_back({a, v});
      table_[a * dim_ + (R_ + k)].push_back({a, -v});
    }
}

std::int64_t LieStructure::N(std::size_t a, std::size_t b) const { return N_[a][b]; }

void LieStructure::debug_set_constant(std::size_t a, std::size_t b, std::int64_t value) {
  auto s = rd_->sum(a, b);
  if (!s) throw InvalidArgument("debug_set_constant: α+β is not a root");
  N_[a][b] = value;
  N_[b][a] = -value;
  table_[a * dim_ + b] = {{*s, value}};
  table_[b * dim_ + a] = {{*s, -value}};
}

std::shared_ptr<const LieStructure> make_lie_structure(Series series, int rank, Form form) {
  auto rd = std::make_shared<const RootDatum>(series, rank, form);
  return std::make_shared<const LieStructure>(rd);
}

}  // namespace airy
