#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "airy/arith/matrix.hpp"
#include "airy/error.hpp"

namespace airy {

/// Sparse multivariate polynomial over a field context F.
/// Zero coefficients are never stored. `degree_cap` (0 = none) drops every
/// term of larger total degree after each multiplication.
template <class F>
class MultiPoly {
 public:
  using Element = typename F::Element;
  using Monomial = std::vector<std::uint16_t>;

  MultiPoly() = default;
  MultiPoly(const F& f, std::size_t nvars, unsigned degree_cap = 0)
      : f_(f), nvars_(nvars), cap_(degree_cap) {}

  static MultiPoly constant(const F& f, std::size_t nvars, const Element& c, unsigned cap = 0) {
    MultiPoly r(f, nvars, cap);
    r.add_term(Monomial(nvars, 0), c);
    return r;
  }
  static MultiPoly variable(const F& f, std::size_t nvars, std::size_t i, unsigned cap = 0) {
    if (i >= nvars) throw InvalidArgument("MultiPoly::variable: index out of range");
    MultiPoly r(f, nvars, cap);
    Monomial m(nvars, 0);
    m[i] = 1;
    r.add_term(m, f.one());
    return r;
  }

  const F& field() const { return f_; }
  std::size_t nvars() const { return nvars_; }
  unsigned degree_cap() const { return cap_; }
  const std::map<Monomial, Element>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Element& c) {
    if (f_.is_zero(c)) return;
    if (cap_ && total_degree(m) > cap_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (f_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Element coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? f_.zero() : it->second;
  }
  Element constant_term() const { return coefficient(Monomial(nvars_, 0)); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }
  static unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto x : m) d += x;
    return d;
  }
  /// True iff variable i occurs in some term.
  bool depends_on(std::size_t i) const {
    for (const auto& [m, c] : terms_)
      if (m[i]) return true;
    return false;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly operator-() const {
    MultiPoly r(f_, nvars_, cap_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  MultiPoly scaled(const Element& s) const {
    MultiPoly r(f_, nvars_, cap_);
    if (f_.is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.f_, a.nvars_, a.cap_ ? a.cap_ : b.cap_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(a.nvars_);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
        r.add_term(m, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(f_, nvars_, f_.one(), cap_);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  Element eval(const std::vector<Element>& x) const {
    if (x.size() != nvars_) throw InvalidArgument("MultiPoly::eval: arity mismatch");
    Element s = f_.zero();
    for (const auto& [m, c] : terms_) {
      Element t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < m[i]; ++k) t *= x[i];
      s += t;
    }
    return s;
  }

  /// Replace variable i by subs[i]; all subs share a variable set.
  MultiPoly substitute(const std::vector<MultiPoly>& subs) const {
    if (subs.size() != nvars_) throw InvalidArgument("MultiPoly::substitute: arity mismatch");
    if (subs.empty()) return *this;
    const std::size_t nv = subs.front().nvars();
    MultiPoly r(f_, nv, cap_);
    for (const auto& [m, c] : terms_) {
      MultiPoly t = constant(f_, nv, c, cap_);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i]) t *= subs[i].pow(m[i]);
      r += t;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Human-readable form such as "3*x0^2*x1 + -1/2*x2".
  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) s += " + ";
      first = false;
      s += F::to_string(it->second);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (!it->first[i]) continue;
        s += "*" + (i < names.size() ? names[i] : "x" + std::to_string(i));
        if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
      }
    }
    return s;
  }

 private:
  F f_{};
  std::size_t nvars_ = 0;
  unsigned cap_ = 0;
  std::map<Monomial, Element> terms_;
};

/// Inverts a block-triangular polynomial change of variables.
///
/// `ys[i]` is a polynomial in x_0..x_{n-1}. `blocks` partitions 0..n-1 in
/// order; for a variable in block b, y is (invertible linear form in the
/// block-b variables) + (polynomial in variables of earlier blocks) and
/// must not depend on later blocks. Returns polynomials x_i(y).
/// Throws InvalidArgument when a block's linear part is singular or the
/// triangular shape is violated.
template <class F>
std::vector<MultiPoly<F>> invert_block_triangular(const F& f, const std::vector<MultiPoly<F>>& ys,
                                                  const std::vector<std::vector<std::size_t>>& blocks) {
  using E = typename F::Element;
  using P = MultiPoly<F>;
  const std::size_t n = ys.size();
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto i : blocks[b]) block_of.at(i) = static_cast<int>(b);
  for (auto b : block_of)
    if (b < 0) throw InvalidArgument("invert_block_triangular: blocks do not cover all variables");

  const unsigned cap = n ? ys.front().degree_cap() : 0;
  std::vector<P> xs(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    const std::size_t k = blk.size();
    if (k == 0) continue;
    Matrix<F> lin(f, k, k);
    std::vector<P> rest(k);
    for (std::size_t a = 0; a < k; ++a) {
      const P& y = ys[blk[a]];
      rest[a] = P(f, n, cap);
      for (const auto& [m, c] : y.terms()) {
        int latest = -1;
        std::size_t lone = n;
        unsigned deg = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (m[i]) {
            latest = std::max(latest, block_of[i]);
            deg += m[i];
            lone = i;
          }
        if (latest > static_cast<int>(b))
          throw InvalidArgument("invert_block_triangular: depends on a later block");
        if (latest == static_cast<int>(b)) {
          if (deg != 1) throw InvalidArgument("invert_block_triangular: nonlinear in its own block");
          std::size_t col = 0;
          while (blk[col] != lone) ++col;
          lin(a, col) = c;
        } else {
          rest[a].add_term(m, c);
        }
      }
    }
    auto inv = inverse(f, lin);
    if (!inv) throw InvalidArgument("invert_block_triangular: non-unit pivot block");
    // x_blk = lin^{-1} (y_blk - rest(x_earlier(y)))
    std::vector<P> subs(n);
    for (std::size_t i = 0; i < n; ++i)
      subs[i] = block_of[i] < static_cast<int>(b) ? xs[i] : P(f, n, cap);
    for (std::size_t a = 0; a < k; ++a) {
      P acc(f, n, cap);
      for (std::size_t c = 0; c < k; ++c) {
        E coef = (*inv)(a, c);
        if (f.is_zero(coef)) continue;
        P term = P::variable(f, n, blk[c], cap) - rest[c].substitute(subs);
        acc += term.scaled(coef);
      }
      xs[blk[a]] = acc;
    }
  }
  return xs;
}

}  // namespace airy
