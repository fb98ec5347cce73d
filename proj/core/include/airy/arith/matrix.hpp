#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "airy/error.hpp"

namespace airy {

/// Dense row-major matrix over a field context F.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix() = default;
  Matrix(const F& f, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static Matrix identity(const F& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  /// Matrix whose rows are the given vectors.
  static Matrix from_rows(const F& f, const std::vector<std::vector<Element>>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Element& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Element> row(std::size_t i) const {
    return std::vector<Element>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<Element> col(std::size_t j) const {
    std::vector<Element> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose(const F& f) const {
    Matrix t(f, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Element> a_;
};

template <class F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.cols() != y.rows()) throw InvalidArgument("mat_mul: shape mismatch");
  Matrix<F> r(f, x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const typename F::Element& xik = x(i, k);
      if (f.is_zero(xik)) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

template <class F>
std::vector<typename F::Element> mat_vec(const F& f, const Matrix<F>& m, const std::vector<typename F::Element>& v) {
  if (m.cols() != v.size()) throw InvalidArgument("mat_vec: shape mismatch");
  std::vector<typename F::Element> r(m.rows(), f.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!f.is_zero(v[j])) r[i] += m(i, j) * v[j];
  return r;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& f, Matrix<F>& m) {
  using E = typename F::Element;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (!f.is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    E inv = f.one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      E factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& f, Matrix<F> m) {
  return rref(f, m).size();
}

/// Rank of a list of vectors of common length `dim`.
template <class F>
std::size_t rank_of(const F& f, const std::vector<std::vector<typename F::Element>>& vecs, std::size_t dim) {
  if (vecs.empty()) return 0;
  return rank(f, Matrix<F>::from_rows(f, vecs, dim));
}

/// Basis of {x : m x = 0}.
template <class F>
std::vector<std::vector<typename F::Element>> kernel(const F& f, Matrix<F> m) {
  auto piv = rref(f, m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    std::vector<typename F::Element> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A solution of m x = b, or nullopt.
template <class F>
std::optional<std::vector<typename F::Element>> solve(const F& f, const Matrix<F>& m,
                                                       const std::vector<typename F::Element>& b) {
  if (b.size() != m.rows()) throw InvalidArgument("solve: shape mismatch");
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(f, aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<typename F::Element> x(m.cols(), f.zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const F& f, const Matrix<F>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidArgument("inverse: not square");
  if (n == 0) return Matrix<F>(f, 0, 0);
  Matrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto piv = rref(f, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class F>
typename F::Element determinant(const F& f, Matrix<F> m) {
  using E = typename F::Element;
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidArgument("determinant: not square");
  E det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!f.is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    E inv = f.one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      E factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

}  // namespace airy
