#include "sjt/symbolic_operator.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "sjt/error.hpp"

namespace sjt {

PolyMatrix::PolyMatrix(std::size_t nvars, std::size_t rows, std::size_t cols)
    : nvars_(nvars), rows_(rows), cols_(cols), entries_(rows * cols, Poly(nvars)) {}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("polynomial matrix shape mismatch");
  PolyMatrix out(std::max(nvars_, o.nvars_), rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Poly& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

SparseMatrix PolyMatrix::evaluate(const std::vector<Rational>& point) const {
  SparseMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero()) out.set(i, j, at(i, j).evaluate(point));
    }
  }
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix out(nvars_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  }
  return out;
}

SymbolicOperator::SymbolicOperator(std::size_t rows, std::size_t cols, std::vector<SparseMatrix> coefficients,
                                   std::vector<std::string> names)
    : rows_(rows), cols_(cols), coeffs_(std::move(coefficients)), names_(std::move(names)) {
  for (const auto& c : coeffs_) {
    if (c.rows() != rows || c.cols() != cols) throw std::invalid_argument("pencil coefficient shape mismatch");
  }
  if (coeffs_.size() > kMaxVariables) throw std::invalid_argument("too many pencil variables");
  if (names_.empty()) names_ = indexed_names("v", coeffs_.size());
}

bool SymbolicOperator::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const SparseMatrix& c) { return c.is_zero(); });
}

Poly SymbolicOperator::entry(std::size_t r, std::size_t c) const {
  std::vector<Term> terms;
  for (std::size_t v = 0; v < coeffs_.size(); ++v) {
    Rational a = coeffs_[v].at(r, c);
    if (!sjt::is_zero(a)) terms.push_back({Monomial::variable(v), a});
  }
  return Poly::from_terms(nvars(), std::move(terms));
}

PolyMatrix SymbolicOperator::to_poly_matrix() const {
  PolyMatrix out(nvars(), rows_, cols_);
  for (std::size_t v = 0; v < coeffs_.size(); ++v) {
    for (const auto& [r, c, a] : coeffs_[v].triplets()) {
      out.at(r, c) += Poly::monomial(nvars(), Monomial::variable(v), a);
    }
  }
  return out;
}

SparseMatrix SymbolicOperator::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != coeffs_.size()) throw std::invalid_argument("point arity does not match operator");
  SparseMatrix out(rows_, cols_);
  for (std::size_t v = 0; v < coeffs_.size(); ++v) {
    if (!sjt::is_zero(point[v])) out = out + coeffs_[v].scaled(point[v]);
  }
  return out;
}

SymbolicOperator SymbolicOperator::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::vector<SparseMatrix> sub;
  for (const auto& c : coeffs_) sub.push_back(c.submatrix(rows, cols));
  return SymbolicOperator(rows.size(), cols.size(), std::move(sub), names_);
}

namespace {

Poly bareiss(std::vector<std::vector<Poly>> a, std::size_t nvars) {
  const std::size_t n = a.size();
  Poly prev = Poly::constant(nvars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return Poly(nvars);
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_divide(v, prev);
      }
    }
    prev = a[k][k];
  }
  Poly d = a[n - 1][n - 1];
  return negate ? -d : d;
}

bool structurally_nonsingular(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  std::vector<std::size_t> match_col(k, k);  // column -> row
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t r, std::vector<bool>& seen) {
    for (std::size_t c = 0; c < k; ++c) {
      if (seen[c] || m.at(rows[r], cols[c]).is_zero()) continue;
      seen[c] = true;
      if (match_col[c] == k || augment(match_col[c], seen)) {
        match_col[c] = r;
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<bool> seen(k, false);
    if (!augment(r, seen)) return false;
  }
  return true;
}

}  // namespace

Poly minor(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (cols.size() != k) throw std::invalid_argument("minor needs a square selection");
  const std::size_t n = m.nvars();
  auto e = [&](std::size_t i, std::size_t j) -> const Poly& { return m.at(rows[i], cols[j]); };
  switch (k) {
    case 0:
      return Poly::constant(n, 1);
    case 1:
      return e(0, 0);
    case 2:
      return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
    case 3: {
      Poly d(n);
      for (std::size_t j = 0; j < 3; ++j) {
        if (e(0, j).is_zero()) continue;
        std::size_t a = (j + 1) % 3, b = (j + 2) % 3;
        if (a > b) std::swap(a, b);
        Poly cof = e(1, a) * e(2, b) - e(1, b) * e(2, a);
        Poly t = e(0, j) * cof;
        if (j == 1) d -= t;
        else d += t;
      }
      return d;
    }
    default: {
      std::vector<std::vector<Poly>> a(k, std::vector<Poly>(k, Poly(n)));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = e(i, j);
      }
      return bareiss(std::move(a), n);
    }
  }
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return minor(m, idx, idx);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(r);
}

std::size_t minor_count(std::size_t rows, std::size_t cols, std::size_t k) {
  unsigned __int128 r = static_cast<unsigned __int128>(binomial(rows, k)) * binomial(cols, k);
  if (r > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(r);
}

Ideal minors_ideal(const PolyMatrix& m, std::size_t k, const Limits& limits) {
  if (k == 0 || k > std::min(m.rows(), m.cols())) throw std::invalid_argument("minor size out of range");
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) {
        rows.push_back(i);
        break;
      }
    }
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!m.at(i, j).is_zero()) {
        cols.push_back(j);
        break;
      }
    }
  }
  std::size_t count = minor_count(rows.size(), cols.size(), k);
  if (count > limits.max_minors) {
    throw ResourceLimit(std::to_string(k) + "-minors: " + std::to_string(count) + " exceed the cap of " +
                        std::to_string(limits.max_minors));
  }
  PolyMatrix sub = m.submatrix(rows, cols);
  std::vector<Poly> gens;
  for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(cols.size(), k, [&](const std::vector<std::size_t>& cs) {
      if (structurally_nonsingular(sub, rs, cs)) {
        Poly d = minor(sub, rs, cs);
        if (!d.is_zero()) gens.push_back(std::move(d));
      }
      return true;
    });
    return true;
  });
  return Ideal(m.nvars(), linear_basis(gens));
}

Ideal minors_ideal(const SymbolicOperator& m, std::size_t k, const Limits& limits) {
  return minors_ideal(m.to_poly_matrix(), k, limits);
}

}  // namespace sjt
