#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sjt/groebner.hpp"
#include "sjt/poly.hpp"
#include "sjt/sparse_matrix.hpp"

namespace sjt {

/// Dense matrix of polynomials in a fixed ring.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t nvars, std::size_t rows, std::size_t cols);

  std::size_t nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Poly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  bool is_zero() const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  SparseMatrix evaluate(const std::vector<Rational>& point) const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  std::size_t nvars_, rows_, cols_;
  std::vector<Poly> entries_;
};

/// Matrix of linear forms D = sum_i v_i * C_i, stored as its coefficient
/// matrices C_i (one per ring variable).
class SymbolicOperator {
 public:
  SymbolicOperator() = default;
  SymbolicOperator(std::size_t rows, std::size_t cols, std::vector<SparseMatrix> coefficients,
                   std::vector<std::string> names = {});

  std::size_t nvars() const { return coeffs_.size(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseMatrix& coefficient(std::size_t var) const { return coeffs_[var]; }
  const std::vector<SparseMatrix>& coefficients() const { return coeffs_; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_zero() const;

  Poly entry(std::size_t r, std::size_t c) const;
  PolyMatrix to_poly_matrix() const;
  /// Entrywise evaluation; the point has one coordinate per variable.
  SparseMatrix evaluate(const std::vector<Rational>& point) const;
  SymbolicOperator submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseMatrix> coeffs_;
  std::vector<std::string> names_;
};

/// Determinant of the square submatrix on the given rows and columns
/// (cofactor expansion up to 3x3, fraction-free Bareiss above).
Poly minor(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);
Poly determinant(const PolyMatrix& m);

/// C(n, k) saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);
/// binomial(rows, k) * binomial(cols, k), saturating.
std::size_t minor_count(std::size_t rows, std::size_t cols, std::size_t k);

/// Ideal of all k x k minors. Zero rows and columns are dropped first (their
/// minors vanish); the remaining count must not exceed limits.max_minors.
/// Structurally singular submatrices are skipped without expansion.
Ideal minors_ideal(const PolyMatrix& m, std::size_t k, const Limits& limits = {});
Ideal minors_ideal(const SymbolicOperator& m, std::size_t k, const Limits& limits = {});

/// Calls f on every k-subset of {0..n-1} in lexicographic order; stops early
/// when f returns false.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(s))) return;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace sjt
