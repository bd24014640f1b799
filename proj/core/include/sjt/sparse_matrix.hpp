#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sjt/rational.hpp"

namespace sjt {

/// Sorted (index, value) pairs with no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// y += a * x, keeping y sorted and free of zeros.
void axpy(SparseVector& y, const Rational& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Rational& a);
Rational dot(const SparseVector& x, const SparseVector& y);
SparseVector to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t n);

/// Exact sparse matrix, stored row by row. Every stored entry is nonzero and
/// in range; equality is structural.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix zero(std::size_t rows, std::size_t cols) { return SparseMatrix(rows, cols); }
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  /// Unit matrix e_{row,col}.
  static SparseMatrix unit(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  Rational at(std::size_t row, std::size_t col) const;
  /// Writes a value; zero erases the entry.
  void set(std::size_t row, std::size_t col, const Rational& value);
  void add_to(std::size_t row, std::size_t col, const Rational& value);

  const SparseVector& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, SparseVector v);
  SparseVector column(std::size_t c) const;

  SparseMatrix transpose() const;
  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix operator-(const SparseMatrix& other) const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix operator-() const;
  SparseMatrix scaled(const Rational& a) const;
  SparseVector apply(const SparseVector& v) const;

  /// Rows and columns selected (in the given order).
  SparseMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool operator==(const SparseMatrix& other) const = default;

  /// Triplets (row, col, value) in row-major order.
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> triplets() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix diagonal(const std::vector<Rational>& d);

}  // namespace sjt
