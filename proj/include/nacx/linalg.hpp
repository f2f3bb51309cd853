// Dense exact linear algebra over an arbitrary field.
//
// Matrix<T> is a plain row-major container; the algorithms are free function
// templates over an Ops object supplying the field arithmetic (see ScalarOps).
// Pivoting picks the first nonzero entry, so results are deterministic and no
// ordering of field elements is ever needed.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nacx/errors.hpp"

namespace nacx {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, T fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void set_row(size_t i, const std::vector<T>& r) {
    for (size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
  }
  std::vector<T> col(size_t j) const {
    std::vector<T> out(rows_);
    for (size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
  }
  void set_col(size_t j, const std::vector<T>& c) {
    for (size_t i = 0; i < rows_; ++i) at(i, j) = c[i];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class Ops>
Matrix<typename Ops::Elem> identity_matrix(const Ops& ops, size_t n) {
  Matrix<typename Ops::Elem> out(n, n, ops.zero());
  for (size_t i = 0; i < n; ++i) out.at(i, i) = ops.one();
  return out;
}

template <class Ops>
Matrix<typename Ops::Elem> mat_mul(const Ops& ops, const Matrix<typename Ops::Elem>& a,
                                   const Matrix<typename Ops::Elem>& b) {
  Matrix<typename Ops::Elem> out(a.rows(), b.cols(), ops.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (ops.is_zero(a.at(i, k))) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = ops.add(out.at(i, j), ops.mul(a.at(i, k), b.at(k, j)));
    }
  return out;
}

template <class Ops>
std::vector<typename Ops::Elem> mat_vec(const Ops& ops, const Matrix<typename Ops::Elem>& a,
                                        const std::vector<typename Ops::Elem>& x) {
  std::vector<typename Ops::Elem> out(a.rows(), ops.zero());
  for (size_t j = 0; j < a.cols(); ++j) {
    if (ops.is_zero(x[j])) continue;
    for (size_t i = 0; i < a.rows(); ++i)
      out[i] = ops.add(out[i], ops.mul(a.at(i, j), x[j]));
  }
  return out;
}

// In-place reduced row echelon form; returns the pivot column of each pivot row.
template <class Ops>
std::vector<size_t> rref(const Ops& ops, Matrix<typename Ops::Elem>& m) {
  std::vector<size_t> pivots;
  size_t prow = 0;
  for (size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    size_t sel = prow;
    while (sel < m.rows() && ops.is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(prow, j), m.at(sel, j));
    typename Ops::Elem piv_inv = ops.inv(m.at(prow, col));
    for (size_t j = col; j < m.cols(); ++j) m.at(prow, j) = ops.mul(m.at(prow, j), piv_inv);
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == prow || ops.is_zero(m.at(i, col))) continue;
      typename Ops::Elem factor = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = ops.sub(m.at(i, j), ops.mul(factor, m.at(prow, j)));
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

template <class Ops>
size_t rank(const Ops& ops, Matrix<typename Ops::Elem> m) {
  return rref(ops, m).size();
}

// Basis of {x : m x = 0}, one kernel vector per row, in canonical order
// (free columns ascending, free coordinate set to one).
template <class Ops>
Matrix<typename Ops::Elem> kernel_basis(const Ops& ops, Matrix<typename Ops::Elem> m) {
  std::vector<size_t> pivots = rref(ops, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  size_t nfree = m.cols() - pivots.size();
  Matrix<typename Ops::Elem> out(nfree, m.cols(), ops.zero());
  size_t row = 0;
  for (size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    out.at(row, fc) = ops.one();
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      out.at(row, pivots[pr]) = ops.neg(m.at(pr, fc));
    ++row;
  }
  return out;
}

// One solution of a x = b, or nullopt when inconsistent.
template <class Ops>
std::optional<std::vector<typename Ops::Elem>> solve(const Ops& ops,
                                                     const Matrix<typename Ops::Elem>& a,
                                                     const std::vector<typename Ops::Elem>& b) {
  Matrix<typename Ops::Elem> aug(a.rows(), a.cols() + 1, ops.zero());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<size_t> pivots = rref(ops, aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<typename Ops::Elem> x(a.cols(), ops.zero());
  for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(pr, a.cols());
  return x;
}

template <class Ops>
std::optional<Matrix<typename Ops::Elem>> inverse_matrix(const Ops& ops,
                                                         const Matrix<typename Ops::Elem>& a) {
  size_t n = a.rows();
  Matrix<typename Ops::Elem> aug(n, 2 * n, ops.zero());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = ops.one();
  }
  std::vector<size_t> pivots = rref(ops, aug);
  // Invertible iff every pivot lands in the left block, one per column.
  if (pivots.size() < n) return std::nullopt;
  for (size_t i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  Matrix<typename Ops::Elem> out(n, n, ops.zero());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

// Canonical form of a row space: RREF with zero rows dropped. Two subspaces
// are equal iff their canonical forms are identical matrices.
template <class Ops>
Matrix<typename Ops::Elem> canonical_rowspace(const Ops& ops, Matrix<typename Ops::Elem> m) {
  std::vector<size_t> pivots = rref(ops, m);
  Matrix<typename Ops::Elem> out(pivots.size(), m.cols(), ops.zero());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

}  // namespace nacx
