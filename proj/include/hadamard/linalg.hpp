// Copyright 2026 The hadamard-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact dense linear algebra over a coefficient field, plus determinants and
// minors of small polynomial matrices.

#ifndef HADAMARD_LINALG_HPP
#define HADAMARD_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hadamard/arith.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/polynomial.hpp"

namespace hadamard {

/// Row-major rows x cols matrix of field elements or polynomials.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const noexcept { return data_; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    std::vector<T> d;
    d.reserve(rs.size() * cs.size());
    for (std::size_t r : rs)
      for (std::size_t c : cs) d.push_back((*this)(r, c));
    return Matrix(rs.size(), cs.size(), std::move(d));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Field K>
Matrix<K> identity_matrix(std::size_t n, const CoeffField& f) {
  Matrix<K> m(n, n, field_traits<K>::zero(f));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field_traits<K>::one(f);
  return m;
}

/// Reduced row echelon form and its pivot columns.
template <Field K>
std::pair<Matrix<K>, std::vector<std::size_t>> rref(Matrix<K> a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    K inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      K f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <Field K>
std::size_t rank(const Matrix<K>& a) {
  return rref(a).second.size();
}

/// Fraction-free (Bareiss) elimination with row pivoting.
template <Field K>
K determinant(Matrix<K> a) {
  if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) throw InputError("determinant of an empty matrix");
  const K zero = a(0, 0) - a(0, 0);
  K prev = zero;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return zero;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        if (k > 0) a(i, j) /= prev;
      }
      a(i, k) = zero;
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

/// Laplace expansion along rows with memoization on the remaining column set.
/// A `reduce` map (e.g. a normal form modulo an ideal) is applied to every
/// partial expansion, giving the determinant modulo that ideal.
template <Field K>
Polynomial<K> determinant(const Matrix<Polynomial<K>>& a,
                          const std::function<Polynomial<K>(const Polynomial<K>&)>& reduce = {}) {
  if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) throw InputError("determinant of an empty matrix");
  if (n > 20) throw InputError("polynomial determinant limited to 20x20");
  RingPtr ring = a(0, 0).ring_ptr();
  std::unordered_map<std::uint32_t, Polynomial<K>> memo;
  std::function<Polynomial<K>(std::size_t, std::uint32_t)> rec = [&](std::size_t row, std::uint32_t cols) {
    if (row == n) return Polynomial<K>::one(ring);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    Polynomial<K> sum(ring);
    bool plus = true;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      if (!a(row, c).is_zero()) {
        Polynomial<K> term = a(row, c) * rec(row + 1, cols & ~(1u << c));
        if (plus) sum += term;
        else sum -= term;
      }
      plus = !plus;
    }
    if (reduce) sum = reduce(sum);
    memo.emplace(cols, sum);
    return sum;
  };
  return rec(0, (1u << n) - 1);
}

/// Basis of the right null space from the reduced echelon form; each vector
/// is scaled so its first nonzero entry is 1.
template <Field K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& a, const CoeffField& field) {
  auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(a.cols(), field_traits<K>::zero(field));
    v[f] = field_traits<K>::one(field);
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(row, f);
    for (const auto& x : v)
      if (!x.is_zero()) {
        K s = x.inverse();
        for (auto& y : v) y *= s;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Extends A (rows >= cols, full column rank) to a square invertible matrix
/// by appending standard basis columns e_0, e_1, ... that raise the rank.
template <Field K>
Matrix<K> complete_to_invertible(const Matrix<K>& a, const CoeffField& field) {
  if (a.rows() < a.cols()) throw InputError("completion needs rows >= cols");
  if (rank(a) != a.cols()) throw CannotComplete("matrix does not have full column rank");
  std::vector<std::vector<K>> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  auto as_matrix = [&](const std::vector<std::vector<K>>& cs) {
    Matrix<K> m(a.rows(), cs.size(), field_traits<K>::zero(field));
    for (std::size_t j = 0; j < cs.size(); ++j)
      for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = cs[j][i];
    return m;
  };
  std::size_t current = a.cols();
  for (std::size_t e = 0; e < a.rows() && cols.size() < a.rows(); ++e) {
    std::vector<K> col(a.rows(), field_traits<K>::zero(field));
    col[e] = field_traits<K>::one(field);
    cols.push_back(col);
    std::size_t rk = rank(as_matrix(cols));
    if (rk > current) current = rk;
    else cols.pop_back();
  }
  return as_matrix(cols);
}

/// All c x c minors, row subsets in lexicographic order outermost, column
/// subsets inner.
template <Field K>
std::vector<Polynomial<K>> minors(const Matrix<Polynomial<K>>& a, std::size_t c,
                                  const std::function<Polynomial<K>(const Polynomial<K>&)>& reduce = {}) {
  if (c == 0 || c > a.rows() || c > a.cols()) throw InputError("minor size out of range");
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
      out.push_back(cur);
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  };
  std::vector<Polynomial<K>> out;
  auto rs = subsets(a.rows(), c);
  auto cs = subsets(a.cols(), c);
  for (const auto& r : rs)
    for (const auto& col : cs) out.push_back(determinant(a.submatrix(r, col), reduce));
  return out;
}

template <Field K>
std::vector<K> mat_vec(const Matrix<K>& a, const std::vector<K>& v, const CoeffField& field) {
  if (v.size() != a.cols()) throw InputError("vector length does not match matrix");
  std::vector<K> out(a.rows(), field_traits<K>::zero(field));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

}  // namespace hadamard

#endif  // HADAMARD_LINALG_HPP
