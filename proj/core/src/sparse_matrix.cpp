#include "sjt/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace sjt {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (sjt::is_zero(a) || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rational v = iy->second + a * ix->second;
      if (!sjt::is_zero(v)) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
  SparseVector out;
  if (sjt::is_zero(a)) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, a * v);
  return out;
}

Rational dot(const SparseVector& x, const SparseVector& y) {
  Rational s = 0;
  auto ix = x.begin();
  auto iy = y.begin();
  while (ix != x.end() && iy != y.end()) {
    if (ix->first < iy->first) {
      ++ix;
    } else if (iy->first < ix->first) {
      ++iy;
    } else {
      s += ix->second * iy->second;
      ++ix;
      ++iy;
    }
  }
  return s;
}

SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!sjt::is_zero(dense[i])) v.emplace_back(i, dense[i]);
  }
  return v;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t n) {
  std::vector<Rational> d(n, Rational(0));
  for (const auto& [i, x] : v) d.at(i) = x;
  return d;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    m.data_[r] = to_sparse(rows[r]);
  }
  return m;
}

SparseMatrix SparseMatrix::unit(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col) {
  SparseMatrix m(rows, cols);
  m.set(row, col, Rational(1));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseMatrix::at");
  const auto& r = data_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) return it->second;
  return Rational(0);
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseMatrix::set");
  auto& r = data_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  bool present = it != r.end() && it->first == col;
  if (sjt::is_zero(value)) {
    if (present) r.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    r.insert(it, {col, value});
  }
}

void SparseMatrix::add_to(std::size_t row, std::size_t col, const Rational& value) {
  set(row, col, at(row, col) + value);
}

void SparseMatrix::set_row(std::size_t r, SparseVector v) {
  if (r >= rows_) throw std::out_of_range("SparseMatrix::set_row");
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector clean;
  for (auto& [i, x] : v) {
    if (i >= cols_) throw std::out_of_range("SparseMatrix::set_row column");
    if (!clean.empty() && clean.back().first == i) {
      clean.back().second += x;
      if (sjt::is_zero(clean.back().second)) clean.pop_back();
    } else if (!sjt::is_zero(x)) {
      clean.emplace_back(i, std::move(x));
    }
  }
  data_[r] = std::move(clean);
}

SparseVector SparseMatrix::column(std::size_t c) const {
  SparseVector v;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational x = at(r, c);
    if (!sjt::is_zero(x)) v.emplace_back(r, x);
  }
  return v;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  }
  return t;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in +");
  SparseMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) axpy(out.data_[r], Rational(1), other.data_[r]);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in -");
  SparseMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) axpy(out.data_[r], Rational(-1), other.data_[r]);
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("shape mismatch in *");
  SparseMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVector acc;
    for (const auto& [k, v] : data_[r]) axpy(acc, v, other.data_[k]);
    out.data_[r] = std::move(acc);
  }
  return out;
}

SparseMatrix SparseMatrix::operator-() const { return scaled(Rational(-1)); }

SparseMatrix SparseMatrix::scaled(const Rational& a) const {
  SparseMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = sjt::scaled(data_[r], a);
  return out;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = dot(data_[r], v);
    if (!sjt::is_zero(s)) out.emplace_back(r, std::move(s));
  }
  return out;
}

SparseMatrix SparseMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::vector<std::ptrdiff_t> col_pos(cols_, -1);
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos.at(cols[j]) = static_cast<std::ptrdiff_t>(j);
  SparseMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVector v;
    for (const auto& [c, x] : data_.at(rows[i])) {
      if (col_pos[c] >= 0) v.emplace_back(static_cast<std::size_t>(col_pos[c]), x);
    }
    out.set_row(i, std::move(v));
  }
  return out;
}

std::vector<std::tuple<std::size_t, std::size_t, Rational>> SparseMatrix::triplets() const {
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.emplace_back(r, c, v);
  }
  return t;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.rows(); ++k) {
      SparseVector row;
      for (const auto& [j, x] : a.row(i)) {
        for (const auto& [l, y] : b.row(k)) row.emplace_back(j * b.cols() + l, x * y);
      }
      out.set_row(i * b.rows() + k, std::move(row));
    }
  }
  return out;
}

SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.set_row(r, a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) {
    SparseVector v;
    for (const auto& [c, x] : b.row(r)) v.emplace_back(c + a.cols(), x);
    out.set_row(a.rows() + r, std::move(v));
  }
  return out;
}

SparseMatrix diagonal(const std::vector<Rational>& d) {
  SparseMatrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out.set(i, i, d[i]);
  return out;
}

}  // namespace sjt
