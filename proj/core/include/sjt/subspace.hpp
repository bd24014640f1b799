#pragma once

#include <cstddef>
#include <vector>

#include "sjt/sparse_matrix.hpp"

namespace sjt {

/// A linear subspace of Q^n stored as its reduced row echelon basis
/// (leftmost pivots, pivot entries 1, zeros above and below every pivot).
/// The stored basis is canonical, so equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<SparseVector>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after clearing every pivot coordinate.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the stored basis; v must lie in the subspace.
  SparseVector coordinates(const SparseVector& v) const;

  /// Coordinates not used as pivots; their unit vectors span a complement.
  std::vector<std::size_t> complement_coordinates() const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Incremental row echelon form over the rationals (not reduced). Rows are
/// normalised to a leading one.
class RowEchelon {
 public:
  /// Reduces v against the current pivots; returns the remainder.
  SparseVector reduce(SparseVector v) const;
  /// Adds v; returns true when it was independent of the rows so far.
  bool insert(SparseVector v);
  std::size_t rank() const { return rows_.size(); }
  /// Pivot rows keyed by pivot column.
  std::vector<std::pair<std::size_t, SparseVector>> rows() const;
  /// Back-substitutes to reduced row echelon form.
  std::vector<std::pair<std::size_t, SparseVector>> reduced_rows() const;

 private:
  std::vector<std::pair<std::size_t, SparseVector>> rows_;  // sorted by pivot column
  const SparseVector* find(std::size_t col) const;
};

std::size_t rank(const SparseMatrix& m);
Subspace kernel(const SparseMatrix& m);
Subspace image(const SparseMatrix& m);
/// dim(outer) - dim(inner); throws NotContained unless inner is a subspace of outer.
std::size_t quotient_dims(const Subspace& outer, const Subspace& inner);

/// Row indices and column indices of a nonsingular maximal square submatrix.
struct PivotSets {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
PivotSets pivot_sets(const SparseMatrix& m);

}  // namespace sjt
