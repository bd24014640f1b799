#include "sjt/subspace.hpp"

#include <algorithm>
#include <numeric>

#include "sjt/error.hpp"

namespace sjt {

const SparseVector* RowEchelon::find(std::size_t col) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), col, [](const auto& r, std::size_t c) { return r.first < c; });
  if (it != rows_.end() && it->first == col) return &it->second;
  return nullptr;
}

SparseVector RowEchelon::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const SparseVector* p = find(v[pos].first);
    if (p == nullptr) {
      ++pos;
      continue;
    }
    Rational factor = -v[pos].second;
    axpy(v, factor, *p);
    // entries before pos are untouched because pivot rows start at their pivot
  }
  return v;
}

bool RowEchelon::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational inv = 1 / v.front().second;
  for (auto& e : v) e.second *= inv;
  std::size_t col = v.front().first;
  auto it = std::lower_bound(rows_.begin(), rows_.end(), col, [](const auto& r, std::size_t c) { return r.first < c; });
  rows_.insert(it, {col, std::move(v)});
  return true;
}

std::vector<std::pair<std::size_t, SparseVector>> RowEchelon::rows() const { return rows_; }

std::vector<std::pair<std::size_t, SparseVector>> RowEchelon::reduced_rows() const {
  auto out = rows_;
  // Clear each pivot column from the rows above it, last pivot first.
  for (std::size_t k = out.size(); k-- > 0;) {
    const std::size_t col = out[k].first;
    for (std::size_t i = 0; i < k; ++i) {
      auto& row = out[i].second;
      auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
      if (it != row.end() && it->first == col) {
        Rational factor = -it->second;
        axpy(row, factor, out[k].second);
      }
    }
  }
  return out;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVector>& vectors) {
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vectors[a].size() < vectors[b].size(); });
  RowEchelon ech;
  for (std::size_t i : order) {
    if (!vectors[i].empty() && vectors[i].back().first >= ambient) throw std::out_of_range("Subspace::span index");
    ech.insert(vectors[i]);
  }
  Subspace s(ambient);
  for (auto& [col, row] : ech.reduced_rows()) {
    s.pivots_.push_back(col);
    s.basis_.push_back(std::move(row));
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.pivots_.push_back(i);
    s.basis_.push_back({{i, Rational(1)}});
  }
  return s;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  SparseVector out = v;
  // Basis is fully reduced, so each pivot can be cleared independently.
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    auto it = std::lower_bound(out.begin(), out.end(), pivots_[k], [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != out.end() && it->first == pivots_[k]) {
      Rational factor = -it->second;
      axpy(out, factor, basis_[k]);
    }
  }
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

SparseVector Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) throw NotContained("vector does not lie in the subspace");
  SparseVector c;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    auto it = std::lower_bound(v.begin(), v.end(), pivots_[k], [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != v.end() && it->first == pivots_[k]) c.emplace_back(k, it->second);
  }
  return c;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  std::vector<bool> used(ambient_, false);
  for (std::size_t p : pivots_) used[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!used[i]) out.push_back(i);
  }
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  std::vector<SparseVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersection(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  // Zassenhaus: echelon of rows [a | a] and [b | 0]; rows whose left half
  // vanishes carry the intersection in their right half.
  const std::size_t n = ambient_;
  RowEchelon ech;
  for (const auto& a : basis_) {
    SparseVector row = a;
    for (const auto& [i, x] : a) row.emplace_back(i + n, x);
    ech.insert(std::move(row));
  }
  for (const auto& b : other.basis_) ech.insert(b);
  std::vector<SparseVector> meet;
  for (const auto& [col, row] : ech.rows()) {
    if (col < n) continue;
    SparseVector right;
    for (const auto& [i, x] : row) right.emplace_back(i - n, x);
    meet.push_back(std::move(right));
  }
  return span(n, meet);
}

std::size_t rank(const SparseMatrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });
  RowEchelon ech;
  for (std::size_t r : order) {
    if (!m.row(r).empty()) ech.insert(m.row(r));
  }
  return ech.rank();
}

Subspace kernel(const SparseMatrix& m) {
  RowEchelon ech;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) ech.insert(m.row(r));
  }
  auto rref = ech.reduced_rows();
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& [col, row] : rref) is_pivot[col] = true;
  // column f of the RREF, gathered per free column
  std::vector<SparseVector> free_cols(m.cols());
  for (const auto& [col, row] : rref) {
    for (const auto& [c, x] : row) {
      if (!is_pivot[c]) free_cols[c].emplace_back(col, x);
    }
  }
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector v;
    for (const auto& [p, x] : free_cols[f]) v.emplace_back(p, -x);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

Subspace image(const SparseMatrix& m) {
  SparseMatrix t = m.transpose();
  std::vector<SparseVector> cols;
  for (std::size_t c = 0; c < t.rows(); ++c) {
    if (!t.row(c).empty()) cols.push_back(t.row(c));
  }
  return Subspace::span(m.rows(), cols);
}

std::size_t quotient_dims(const Subspace& outer, const Subspace& inner) {
  if (!outer.contains(inner)) throw NotContained("inner subspace is not contained in outer subspace");
  return outer.dim() - inner.dim();
}

PivotSets pivot_sets(const SparseMatrix& m) {
  PivotSets out;
  RowEchelon ech;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (ech.insert(m.row(r))) out.rows.push_back(r);
  }
  // Independent rows chosen greedily; their pivot columns give a nonsingular minor.
  RowEchelon chosen;
  for (std::size_t r : out.rows) chosen.insert(m.row(r));
  for (const auto& [col, row] : chosen.rows()) out.cols.push_back(col);
  return out;
}

}  // namespace sjt
