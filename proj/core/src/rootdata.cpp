#include "airy/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "airy/error.hpp"

namespace airy {

std::string to_string(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::E: return "E";
    case Series::F: return "F";
    case Series::G: return "G";
    case Series::GL: return "GL";
  }
  return "?";
}

std::string to_string(Form f) {
  switch (f) {
    case Form::Adjoint: return "adjoint";
    case Form::SimplyConnected: return "sc";
    case Form::GL: return "gl";
  }
  return "?";
}

Series parse_series(const std::string& s) {
  std::string u;
  for (char c : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "A") return Series::A;
  if (u == "B") return Series::B;
  if (u == "C") return Series::C;
  if (u == "D") return Series::D;
  if (u == "E") return Series::E;
  if (u == "F") return Series::F;
  if (u == "G") return Series::G;
  if (u == "GL") return Series::GL;
  throw InvalidArgument("unknown series '" + s + "'");
}

Form parse_form(const std::string& s) {
  std::string u;
  for (char c : s) u += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (u == "adjoint" || u == "ad") return Form::Adjoint;
  if (u == "sc" || u == "simply-connected" || u == "simply_connected") return Form::SimplyConnected;
  if (u == "gl") return Form::GL;
  throw InvalidArgument("unknown form '" + s + "'");
}

std::int64_t RootDatum::pair(const IVec& chi, const IVec& lam) {
  if (chi.size() != lam.size()) throw InvalidArgument("pair: lattice rank mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) s += chi[i] * lam[i];
  return s;
}

RootDatum::RootDatum(Series series, int rank, Form form) : series_(series), rank_(rank), form_(form) {
  const bool gl_series = series == Series::GL;
  const bool gl_form = form == Form::GL;
  if (gl_series != gl_form) throw InvalidArgument("form 'gl' goes with series GL and only with it");
  bool ok = false;
  switch (series) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 2; break;
    case Series::D: ok = rank >= 4; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
    case Series::GL: ok = rank >= 2; break;
  }
  if (!ok) throw InvalidArgument("invalid type " + to_string(series) + std::to_string(rank));
  ss_rank_ = gl_series ? rank - 1 : rank;
  lat_rank_ = gl_series ? rank : rank;
  build_cartan();
  enumerate_roots();
  build_lattices();
  finish();
}

std::string RootDatum::label() const {
  if (series_ == Series::GL) return "GL" + std::to_string(rank_);
  return to_string(series_) + std::to_string(rank_) + "(" + to_string(form_) + ")";
}

void RootDatum::build_cartan() {
  const int n = ss_rank_;
  cartan_.assign(n, IVec(n, 0));
  std::vector<Rational> d(n, Rational(1));  // (α_i, α_i)/2
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {
    cartan_[i][j] = aij;
    cartan_[j][i] = aji;
  };
  switch (series_) {
    case Series::A:
    case Series::GL:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case Series::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);
      d[n - 1] = Rational(1, 2);
      break;
    case Series::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);
      for (int i = 0; i + 1 < n; ++i) d[i] = Rational(1, 2);
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case Series::E:
      link(0, 2, -1, -1);
      link(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case Series::F:
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);
      link(2, 3, -1, -1);
      d[2] = d[3] = Rational(1, 2);
      break;
    case Series::G:
      link(0, 1, -3, -1);
      d[0] = Rational(1, 3);
      break;
  }
  form_gram_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form_gram_[i][j] = d[i] * Rational(static_cast<long>(cartan_[i][j]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      AIRY_ENSURE(form_gram_[i][j] == form_gram_[j][i], "Cartan matrix is not symmetrizable");
}

void RootDatum::enumerate_roots() {
  const int n = ss_rank_;
  std::set<IVec> found;
  std::deque<IVec> queue;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    found.insert(e);
    queue.push_back(e);
  }
  // <β, α_i^∨> = Σ_j β_j A_ij
  auto pair_coroot = [&](const IVec& b, int i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += b[j] * cartan_[i][j];
    return s;
  };
  while (!queue.empty()) {
    IVec b = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      // p = max k with b - kα_i a root (positive roots suffice here)
      std::int64_t p = 0;
      IVec c = b;
      while (true) {
        c[i] -= 1;
        if (!found.count(c)) break;
        ++p;
      }
      std::int64_t q = p - pair_coroot(b, i);
      if (q > 0) {
        IVec up = b;
        up[i] += 1;
        if (found.insert(up).second) queue.push_back(up);
      }
    }
  }
  std::vector<IVec> pos(found.begin(), found.end());
  auto height = [](const IVec& v) {
    std::int64_t s = 0;
    for (auto x : v) s += x;
    return s;
  };
  std::sort(pos.begin(), pos.end(), [&](const IVec& a, const IVec& b) {
    auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  roots_.clear();
  for (const auto& v : pos) {
    Root r;
    r.simple = v;
    r.height = static_cast<int>(height(v));
    roots_.push_back(r);
  }
  for (const auto& v : pos) {
    Root r;
    r.simple = v;
    for (auto& x : r.simple) x = -x;
    r.height = -static_cast<int>(height(v));
    roots_.push_back(r);
  }
}

void RootDatum::build_lattices() {
  const int n = ss_rank_;
  for (auto& r : roots_) {
    Rational nb = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        nb += Rational(static_cast<long>(r.simple[i] * r.simple[j])) * form_gram_[i][j];
    r.coroot_simple.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      Rational c = Rational(static_cast<long>(r.simple[j])) * form_gram_[j][j] / nb;
      AIRY_ENSURE(c.get_den() == 1, "non-integral coroot");
      r.coroot_simple[j] = c.get_num().get_si();
    }
    switch (form_) {
      case Form::Adjoint: {
        r.character = r.simple;
        r.coroot.assign(n, 0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) r.coroot[i] += r.coroot_simple[j] * cartan_[j][i];
        break;
      }
      case Form::SimplyConnected: {
        r.character.assign(n, 0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) r.character[i] += r.simple[j] * cartan_[i][j];
        r.coroot = r.coroot_simple;
        break;
      }
      case Form::GL: {
        r.character.assign(rank_, 0);
        for (int j = 0; j < n; ++j) {
          r.character[j] += r.simple[j];
          r.character[j + 1] -= r.simple[j];
        }
        r.coroot.assign(rank_, 0);
        for (int j = 0; j < n; ++j) {
          r.coroot[j] += r.coroot_simple[j];
          r.coroot[j + 1] -= r.coroot_simple[j];
        }
        break;
      }
    }
  }
}

void RootDatum::finish() {
  by_simple_.clear();
  by_character_.clear();
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    by_simple_[roots_[i].simple] = i;
    AIRY_ENSURE(by_character_.emplace(roots_[i].character, i).second, "roots not distinct in X^*");
    AIRY_ENSURE(pair(roots_[i].character, roots_[i].coroot) == 2, "<α, α^∨> != 2");
  }
  highest_ = num_positive() - 1;
  h_ = roots_[highest_].height + 1;
  height_counts_.assign(h_ + 1, 0);
  for (std::size_t i = 0; i < num_positive(); ++i) height_counts_[roots_[i].height] += 1;
  exponents_.clear();
  for (int r = 1; r < h_; ++r) {
    int m = height_counts_[r] - height_counts_[r + 1];
    AIRY_ENSURE(m >= 0, "height counts not monotone");
    for (int k = 0; k < m; ++k) exponents_.push_back(r);
  }
  AIRY_ENSURE(static_cast<int>(exponents_.size()) == ss_rank_, "wrong number of exponents");
}

Rational RootDatum::inner(std::size_t a, std::size_t b) const {
  Rational s = 0;
  const auto& x = roots_[a].simple;
  const auto& y = roots_[b].simple;
  for (int i = 0; i < ss_rank_; ++i)
    for (int j = 0; j < ss_rank_; ++j)
      if (x[i] && y[j]) s += Rational(static_cast<long>(x[i] * y[j])) * form_gram_[i][j];
  return s;
}

Rational RootDatum::norm2(std::size_t root) const { return inner(root, root); }

std::size_t RootDatum::negative(std::size_t i) const {
  const std::size_t P = num_positive();
  return i < P ? i + P : i - P;
}

std::optional<std::size_t> RootDatum::find_simple(const IVec& simple) const {
  auto it = by_simple_.find(simple);
  if (it == by_simple_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootDatum::find_character(const IVec& ch) const {
  auto it = by_character_.find(ch);
  if (it == by_character_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootDatum::sum(std::size_t a, std::size_t b) const {
  IVec s = roots_[a].simple;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += roots_[b].simple[i];
  return find_simple(s);
}

int RootDatum::positive_height_count(int r) const {
  if (r < 1 || r >= static_cast<int>(height_counts_.size())) return 0;
  return height_counts_[r];
}

int RootDatum::exponent_multiplicity(int r) const {
  return static_cast<int>(std::count(exponents_.begin(), exponents_.end(), r));
}

IMat RootDatum::simple_coroots() const {
  IMat m;
  for (int i = 0; i < ss_rank_; ++i) m.push_back(roots_[i].coroot);
  return m;
}

IMat RootDatum::simple_roots_character() const {
  IMat m;
  for (int i = 0; i < ss_rank_; ++i) m.push_back(roots_[i].character);
  return m;
}

RootDatum RootDatum::dual() const {
  Series s = series_;
  if (s == Series::B) s = Series::C;
  else if (s == Series::C) s = Series::B;
  Form f = form_;
  if (f == Form::Adjoint) f = Form::SimplyConnected;
  else if (f == Form::SimplyConnected) f = Form::Adjoint;
  return RootDatum(s, rank_, f);
}

RootDatum build_root_datum(Series series, int rank, Form form) { return RootDatum(series, rank, form); }
int coxeter_number(const RootDatum& rd) { return rd.coxeter_number(); }
std::vector<int> exponents(const RootDatum& rd) { return rd.exponents(); }

std::string to_string(const Coweight& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(mu.coords[i]);
  }
  return s + ")";
}

bool is_minuscule(const RootDatum& rd, const Coweight& mu) {
  if (static_cast<int>(mu.coords.size()) != rd.lattice_rank()) return false;
  for (std::size_t i = 0; i < rd.num_positive(); ++i) {
    auto v = rd.pair_root(i, mu.coords);
    if (v < 0 || v > 1) return false;
  }
  return true;
}

bool is_dominant(const RootDatum& rd, const Coweight& mu) {
  for (int i = 0; i < rd.semisimple_rank(); ++i)
    if (rd.pair_root(i, mu.coords) < 0) return false;
  return true;
}

namespace {

// Solves A^T x = e_k over Q where A is the Cartan matrix.
std::vector<Rational> fundamental_coweight_in_coroots(const RootDatum& rd, int k) {
  const int n = rd.semisimple_rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(rd.cartan_matrix()[j][i]));
    m[i][n] = (i == k) ? 1 : 0;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    Rational inv = 1 / m[c][c];
    for (int j = c; j <= n; ++j) m[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

// Coordinates x with Σ x_i (simple coroot i) = μ, for semisimple data.
std::vector<Rational> coroot_coordinates(const RootDatum& rd, const IVec& mu) {
  const int n = rd.semisimple_rank();
  IMat cor = rd.simple_coroots();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(cor[j][i]));
    m[i][n] = Rational(static_cast<long>(mu[i]));
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    Rational inv = 1 / m[c][c];
    for (int j = c; j <= n; ++j) m[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

std::int64_t abs_det(IMat a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(a[i][j]));
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return std::abs(det.get_num().get_si());
}

struct SideResult {
  bool ok = false;
  std::size_t count = 0;
  std::size_t classes = 0;
};

SideResult coweight_side(const RootDatum& rd, DegreeWindow window) {
  SideResult s;
  auto M = minuscule_coweights(rd, window);
  s.count = M.size();
  if (rd.series() == Series::GL) {
    std::set<std::int64_t> degrees;
    for (const auto& mu : M) {
      std::int64_t d = 0;
      for (auto x : mu.coords) d += x;
      degrees.insert(d);
    }
    s.classes = static_cast<std::size_t>(window.hi - window.lo + 1);
    bool cover = degrees.size() == M.size() && degrees.size() == s.classes;
    if (cover)
      for (auto d : degrees)
        if (d < window.lo || d > window.hi) cover = false;
    s.ok = cover;
    return s;
  }
  s.classes = static_cast<std::size_t>(abs_det(rd.simple_coroots()));
  std::set<std::vector<Rational>> classes;
  for (const auto& mu : M) {
    auto x = coroot_coordinates(rd, mu.coords);
    for (auto& c : x) {
      // fractional part in [0, 1)
      BigInt fl;
      mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
      c -= Rational(fl);
    }
    classes.insert(x);
  }
  s.ok = classes.size() == M.size() && classes.size() == s.classes;
  return s;
}

}  // namespace

std::vector<Coweight> minuscule_coweights(const RootDatum& rd, DegreeWindow window) {
  std::vector<Coweight> out;
  if (rd.series() == Series::GL) {
    const std::int64_t n = rd.rank();
    for (std::int64_t d = window.lo; d <= window.hi; ++d) {
      std::int64_t c = d >= 0 ? d / n : -((-d + n - 1) / n);
      std::int64_t k = d - n * c;
      Coweight mu;
      mu.coords.assign(n, c);
      for (std::int64_t i = 0; i < k; ++i) mu.coords[i] = c + 1;
      AIRY_ENSURE(is_minuscule(rd, mu), "GL window coweight not minuscule");
      out.push_back(mu);
    }
    return out;
  }
  const int n = rd.semisimple_rank();
  out.push_back(Coweight{IVec(n, 0)});
  const auto& theta = rd.roots()[rd.highest_root()].simple;
  for (int k = 0; k < n; ++k) {
    if (theta[k] != 1) continue;
    Coweight mu;
    if (rd.form() == Form::Adjoint) {
      mu.coords.assign(n, 0);
      mu.coords[k] = 1;
    } else {
      auto x = fundamental_coweight_in_coroots(rd, k);
      bool integral = true;
      for (const auto& c : x)
        if (c.get_den() != 1) integral = false;
      if (!integral) continue;
      for (const auto& c : x) mu.coords.push_back(c.get_num().get_si());
    }
    if (is_minuscule(rd, mu)) out.push_back(mu);
  }
  return out;
}

MinusculeBijection minuscule_bijection_check(const RootDatum& rd, DegreeWindow window) {
  MinusculeBijection r;
  auto cw = coweight_side(rd, window);
  r.coweights_ok = cw.ok;
  r.num_coweights = cw.count;
  r.coweight_classes = cw.classes;
  auto w = coweight_side(rd.dual(), window);
  r.weights_ok = w.ok;
  r.num_weights = w.count;
  r.weight_classes = w.classes;
  return r;
}

std::optional<int> alpha_mu(const RootDatum& rd, const Coweight& mu) {
  if (!is_minuscule(rd, mu)) throw InvalidArgument("alpha_mu: coweight " + to_string(mu) + " is not minuscule");
  std::optional<int> found;
  for (int i = 0; i < rd.semisimple_rank(); ++i) {
    if (rd.pair_root(i, mu.coords) == 1) {
      AIRY_ENSURE(!found, "two simple roots pair to 1 with a minuscule coweight");
      found = i;
    }
  }
  return found;
}

// ---------------------------------------------------------------- Weyl group

WeylElement WeylElement::identity(const RootDatum& rd) {
  WeylElement w;
  const int n = rd.lattice_rank();
  w.m_.assign(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) w.m_[i][i] = 1;
  w.rebuild_perm(rd);
  return w;
}

WeylElement WeylElement::reflection(const RootDatum& rd, int i) {
  return identity(rd).times_reflection(rd, i);
}

IVec WeylElement::act_character(const IVec& x) const {
  IVec y(m_.size(), 0);
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m_[i][j] * x[j];
  return y;
}

void WeylElement::rebuild_perm(const RootDatum& rd) {
  perm_.assign(rd.num_roots(), 0);
  for (std::size_t r = 0; r < rd.num_roots(); ++r) {
    auto img = rd.find_character(act_character(rd.roots()[r].character));
    AIRY_ENSURE(img.has_value(), "lattice map does not permute the roots");
    perm_[r] = *img;
  }
}

WeylElement WeylElement::times_reflection(const RootDatum& rd, int i) const {
  const auto& a = rd.roots()[i].character;
  const auto& c = rd.roots()[i].coroot;
  const std::size_t n = a.size();
  // S_i = I - a c^T
  WeylElement w;
  w.m_.assign(n, IVec(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        std::int64_t sk = (k == col ? 1 : 0) - a[k] * c[col];
        s += m_[r][k] * sk;
      }
      w.m_[r][col] = s;
    }
  w.word_ = word_;
  w.word_.push_back(i);
  w.rebuild_perm(rd);
  return w;
}

WeylElement compose(const RootDatum& rd, const WeylElement& a, const WeylElement& b) {
  WeylElement w;
  const std::size_t n = a.m_.size();
  w.m_.assign(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) w.m_[i][j] += a.m_[i][k] * b.m_[k][j];
  w.word_ = a.word_;
  w.word_.insert(w.word_.end(), b.word_.begin(), b.word_.end());
  w.rebuild_perm(rd);
  return w;
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = 0; j < m_.size(); ++j)
      if (m_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

namespace {

// Same lattice map, reduced word recovered by right descents.
WeylElement reduced(const RootDatum& rd, const WeylElement& w) {
  std::vector<int> word;
  WeylElement x = w;
  const std::size_t P = rd.num_positive();
  while (!x.is_identity()) {
    int j = -1;
    for (int i = 0; i < rd.semisimple_rank(); ++i)
      if (x.act(i) >= P) {
        j = i;
        break;
      }
    AIRY_ENSURE(j >= 0, "non-identity element without descent");
    x = x.times_reflection(rd, j);
    word.push_back(j);
  }
  WeylElement r = WeylElement::identity(rd);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = r.times_reflection(rd, *it);
  return r;
}

}  // namespace

WeylElement longest_element(const RootDatum& rd, const std::vector<int>& subset) {
  WeylElement w = WeylElement::identity(rd);
  const std::size_t P = rd.num_positive();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j : subset) {
      if (w.act(j) < P) {
        w = w.times_reflection(rd, j);
        grew = true;
        break;
      }
    }
  }
  return w;
}

WeylElement weyl_w0(const RootDatum& rd) {
  std::vector<int> all(rd.semisimple_rank());
  for (int i = 0; i < rd.semisimple_rank(); ++i) all[i] = i;
  return longest_element(rd, all);
}

WeylElement weyl_wP0(const RootDatum& rd, const Coweight& mu) {
  auto am = alpha_mu(rd, mu);
  std::vector<int> levi;
  for (int i = 0; i < rd.semisimple_rank(); ++i)
    if (!am || *am != i) levi.push_back(i);
  return longest_element(rd, levi);
}

WeylElement weyl_wP(const RootDatum& rd, const Coweight& mu) {
  return reduced(rd, compose(rd, weyl_wP0(rd, mu), weyl_w0(rd)));
}

bool check_wP_heights(const RootDatum& rd, const Coweight& mu) {
  auto w = weyl_wP(rd, mu);
  const int h = rd.coxeter_number();
  for (std::size_t r = 0; r < rd.num_roots(); ++r) {
    int a = rd.roots()[r].height, b = rd.roots()[w.act(r)].height;
    if (((a - b) % h + h) % h != 0) return false;
  }
  return true;
}

UMuRoots u_mu_roots(const RootDatum& rd, const Coweight& mu) {
  UMuRoots out;
  for (std::size_t r = 0; r < rd.num_roots(); ++r) {
    auto v = rd.pair_root(r, mu.coords);
    bool pos = rd.roots()[r].positive();
    if ((pos && v == 0) || (!pos && v == -1)) out.u_mu.push_back(r);
    else out.u_mu_minus.push_back(r);
  }
  auto w = weyl_wP(rd, mu);
  std::set<std::size_t> image;
  for (std::size_t r = 0; r < rd.num_positive(); ++r) image.insert(w.act(r));
  out.conjugation_ok = image == std::set<std::size_t>(out.u_mu.begin(), out.u_mu.end());
  return out;
}

std::int64_t stab_dimension(const RootDatum& rd, const Coweight& mu) {
  const std::int64_t h = rd.coxeter_number();
  std::int64_t total = rd.dim_torus();
  for (std::size_t r = 0; r < rd.num_roots(); ++r) {
    std::int64_t num = rd.roots()[r].height - 1;
    std::int64_t upper = num >= 0 ? num / h : -((-num + h - 1) / h);
    std::int64_t lower = rd.pair_root(r, mu.coords);
    total += std::max<std::int64_t>(0, upper - lower + 1);
  }
  return total;
}

std::int64_t dim_bunJ_defect(const RootDatum& rd) {
  const int h = rd.coxeter_number();
  const int t = rd.dim_torus();
  // Lines (x, i): x a root or one of the t Cartan slots, i >= 0 the t-power.
  auto count_below = [&](int period, int threshold) {
    std::int64_t c = 0;
    for (int i = 0; i <= 3; ++i) {
      if (period * i < threshold) c += t;
      for (const auto& r : rd.roots())
        if (period * i + r.height < threshold) c += 1;
    }
    return c;
  };
  const auto& ex = rd.exponents();
  if (h % 2 == 0) {
    std::int64_t quotient = count_below(h, 1 + h / 2);
    std::int64_t s = std::count_if(ex.begin(), ex.end(), [&](int e) { return e <= h / 2; });
    return quotient - s - rd.dim_group();
  }
  if (rd.series() != Series::A && rd.series() != Series::GL)
    throw Unsupported("dim_bunJ_defect: odd Coxeter number outside type A");
  const int n = (h - 1) / 2;
  std::int64_t quotient = count_below(2 * n, n + 1);
  std::int64_t s = std::count_if(ex.begin(), ex.end(), [&](int e) { return e < n + 2; });
  return quotient - s - rd.dim_group();
}

bool swan_identity_check(const RootDatum& rd) {
  const std::int64_t n = rd.semisimple_rank();
  const std::int64_t h = rd.coxeter_number();
  const std::int64_t roots = static_cast<std::int64_t>(rd.num_roots());
  return n * (h + 1) == n + roots;
}

}  // namespace airy
