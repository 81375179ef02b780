#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gw/scalar.hpp"

namespace gw {

/// Dense row-major matrix over an arbitrary field scalar. Used for the exact
/// rational paths; the float paths go through Eigen instead.
template <class S>
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, ScalarTraits<S>::zero()) {
    if (rows < 0 || cols < 0) {
      throw std::invalid_argument("DenseMatrix: negative dimension");
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const S& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

 private:
  int rows_, cols_;
  std::vector<S> data_;
};

/// Determinant by Gaussian elimination with pivoting (largest magnitude for
/// float scalars, first nonzero for exact ones).
template <class S>
S determinant(DenseMatrix<S> m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant: matrix not square");
  }
  const int n = m.rows();
  S det = ScalarTraits<S>::one();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    if constexpr (ScalarTraits<S>::exact) {
      for (int r = col; r < n; ++r) {
        if (!ScalarTraits<S>::is_zero(m.at(r, col))) {
          pivot = r;
          break;
        }
      }
    } else {
      double best = 0.0;
      for (int r = col; r < n; ++r) {
        double mag = ScalarTraits<S>::magnitude(m.at(r, col));
        if (mag > best) {
          best = mag;
          pivot = r;
        }
      }
    }
    if (pivot < 0) return ScalarTraits<S>::zero();
    if (pivot != col) {
      for (int c = col; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (ScalarTraits<S>::is_zero(m.at(r, col))) continue;
      S factor = m.at(r, col) / m.at(col, col);
      m.at(r, col) = ScalarTraits<S>::zero();
      for (int c = col + 1; c < n; ++c) {
        m.at(r, c) -= factor * m.at(col, c);
      }
    }
  }
  return det;
}

/// Solves A x = b exactly over a field. Returns nullopt when the system is
/// inconsistent; when it is underdetermined, free variables are set to zero.
/// Intended for exact scalars (pivot choice is first-nonzero, no sizing).
template <class S>
std::optional<std::vector<S>> solve_exact(DenseMatrix<S> a, std::vector<S> b) {
  static_assert(ScalarTraits<S>::exact,
                "solve_exact is for exact scalar kinds");
  const int rows = a.rows();
  const int cols = a.cols();
  if (static_cast<int>(b.size()) != rows) {
    throw std::invalid_argument("solve_exact: rhs size mismatch");
  }
  std::vector<int> pivot_col_of_row(rows, -1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!ScalarTraits<S>::is_zero(a.at(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < cols; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
      std::swap(b[pivot], b[rank]);
    }
    S inv = ScalarTraits<S>::one() / a.at(rank, col);
    for (int c = col; c < cols; ++c) a.at(rank, c) *= inv;
    b[rank] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || ScalarTraits<S>::is_zero(a.at(r, col))) continue;
      S factor = a.at(r, col);
      for (int c = col; c < cols; ++c) {
        a.at(r, c) -= factor * a.at(rank, c);
      }
      b[r] -= factor * b[rank];
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  for (int r = rank; r < rows; ++r) {
    if (!ScalarTraits<S>::is_zero(b[r])) return std::nullopt;
  }
  std::vector<S> x(cols, ScalarTraits<S>::zero());
  for (int r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = b[r];
  return x;
}

/// Basis of the right nullspace of A over a field, exact scalars only.
/// Each returned vector has length cols().
template <class S>
std::vector<std::vector<S>> kernel_basis(DenseMatrix<S> a) {
  static_assert(ScalarTraits<S>::exact,
                "kernel_basis is for exact scalar kinds");
  const int rows = a.rows();
  const int cols = a.cols();
  std::vector<int> pivot_col_of_row;
  pivot_col_of_row.reserve(rows);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!ScalarTraits<S>::is_zero(a.at(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < cols; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
    }
    S inv = ScalarTraits<S>::one() / a.at(rank, col);
    for (int c = col; c < cols; ++c) a.at(rank, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || ScalarTraits<S>::is_zero(a.at(r, col))) continue;
      S factor = a.at(r, col);
      for (int c = col; c < cols; ++c) {
        a.at(r, c) -= factor * a.at(rank, c);
      }
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<S> v(cols, ScalarTraits<S>::zero());
    v[free_col] = ScalarTraits<S>::one();
    for (int r = 0; r < rank; ++r) {
      v[pivot_col_of_row[r]] = -a.at(r, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gw
