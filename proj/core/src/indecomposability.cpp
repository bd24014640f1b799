#include "sjt/indecomposability.hpp"

#include <random>

#include "sjt/subspace.hpp"
#include "sjt/univariate.hpp"

namespace sjt {

std::string to_string(Decomposition d) {
  switch (d) {
    case Decomposition::indecomposable:
      return "indecomposable";
    case Decomposition::decomposable:
      return "decomposable";
    case Decomposition::inconclusive:
      return "inconclusive";
  }
  return "";
}

std::vector<SparseMatrix> even_endomorphisms(const Supermodule& m) {
  const std::size_t n = m.dim();
  // unknowns: entries X(i,j) with equal parity
  std::vector<std::vector<std::size_t>> var(n, std::vector<std::size_t>(n, SIZE_MAX));
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.parity(i) == m.parity(j)) {
        var[i][j] = pos.size();
        pos.emplace_back(i, j);
      }
    }
  }
  // (A X - X A)(i,j) = sum_k A(i,k) X(k,j) - X(i,k) A(k,j)
  std::vector<SparseVector> equations;
  for (const auto& a : m.actions()) {
    if (a.is_zero()) continue;
    SparseMatrix at = a.transpose();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::map<std::size_t, Rational> eq;
        for (const auto& [k, v] : a.row(i)) {
          if (var[k][j] != SIZE_MAX) eq[var[k][j]] += v;
        }
        for (const auto& [k, v] : at.row(j)) {
          if (var[i][k] != SIZE_MAX) eq[var[i][k]] -= v;
        }
        SparseVector row;
        for (auto& [idx, v] : eq) {
          if (!is_zero(v)) row.emplace_back(idx, v);
        }
        if (!row.empty()) equations.push_back(std::move(row));
      }
    }
  }
  SparseMatrix system(equations.size(), pos.size());
  for (std::size_t r = 0; r < equations.size(); ++r) system.set_row(r, equations[r]);
  Subspace sol = kernel(system);
  std::vector<SparseMatrix> basis;
  for (const auto& v : sol.basis()) {
    SparseMatrix x(n, n);
    for (const auto& [idx, val] : v) x.set(pos[idx].first, pos[idx].second, val);
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

Rational trace(const SparseMatrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

SparseMatrix poly_of_matrix(const UPoly& p, const SparseMatrix& u) {
  const std::size_t n = u.rows();
  SparseMatrix out(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    out = out * u + SparseMatrix::identity(n).scaled(p.coeffs()[k]);
  }
  return out;
}

// Minimal polynomial of u through the Krylov sequence of its powers.
UPoly minimal_polynomial(const SparseMatrix& u) {
  const std::size_t n = u.rows();
  auto flatten = [n](const SparseMatrix& m) {
    SparseVector v;
    for (std::size_t r = 0; r < n; ++r) {
      for (const auto& [c, x] : m.row(r)) v.emplace_back(r * n + c, x);
    }
    return v;
  };
  std::vector<SparseVector> powers;
  SparseMatrix p = SparseMatrix::identity(n);
  while (true) {
    SparseVector v = flatten(p);
    // a relation among I, u, ..., u^k
    const std::size_t k = powers.size();
    SparseMatrix top(n * n, k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      const SparseVector& src = i < k ? powers[i] : v;
      for (const auto& [idx, x] : src) top.set(idx, i, x);
    }
    Subspace ker = kernel(top);
    if (ker.dim() > 0) {
      std::vector<Rational> coeffs = to_dense(ker.basis().front(), k + 1);
      return UPoly(coeffs).monic();
    }
    powers.push_back(std::move(v));
    p = p * u;
  }
}

bool commutes_with_all(const Supermodule& m, const SparseMatrix& e) {
  for (const auto& a : m.actions()) {
    if (!(a * e == e * a)) return false;
  }
  return true;
}

bool is_even(const Supermodule& m, const SparseMatrix& e) {
  for (const auto& [r, c, v] : e.triplets()) {
    if (m.parity(r) != m.parity(c)) return false;
  }
  return true;
}

std::optional<SparseMatrix> idempotent_from(const Supermodule& m, const SparseMatrix& u) {
  const std::size_t n = m.dim();
  UPoly mu = minimal_polynomial(u);
  for (const auto& lambda : rational_roots(mu)) {
    // split mu = (t - lambda)^k q with q(lambda) != 0
    UPoly q = mu, lin = UPoly::linear(lambda), power = UPoly::constant(1);
    while (true) {
      auto d = divide(q, lin);
      if (!d.remainder.is_zero()) break;
      q = d.quotient;
      power = power * lin;
    }
    if (q.degree() < 1) continue;
    Bezout b = extended_gcd(power, q);  // s power + t q = 1
    SparseMatrix e = poly_of_matrix(b.t * q, u);
    if (e.is_zero() || e == SparseMatrix::identity(n)) continue;
    if (e * e == e && is_even(m, e) && commutes_with_all(m, e)) return e;
  }
  return std::nullopt;
}

}  // namespace

IndecomposabilityReport indecomposability(const Supermodule& m) {
  IndecomposabilityReport rep;
  if (m.dim() == 0) {
    rep.verdict = Decomposition::decomposable;
    rep.reason = "zero module";
    return rep;
  }
  auto basis = even_endomorphisms(m);
  rep.end_dim = basis.size();
  const std::size_t d = basis.size();
  SparseMatrix form(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Rational t = trace(basis[i] * basis[j]);
      form.set(i, j, t);
      form.set(j, i, t);
    }
  }
  rep.radical_dim = d - rank(form);
  if (d - rep.radical_dim == 1) {
    rep.verdict = Decomposition::indecomposable;
    return rep;
  }
  std::vector<SparseMatrix> candidates = basis;
  std::mt19937_64 rng(12345);
  for (std::size_t k = 0; k < 24; ++k) {
    SparseMatrix c(m.dim(), m.dim());
    for (const auto& b : basis) c = c + b.scaled(static_cast<long>(rng() % 7) - 3);
    candidates.push_back(std::move(c));
  }
  for (const auto& u : candidates) {
    if (auto e = idempotent_from(m, u)) {
      rep.verdict = Decomposition::decomposable;
      rep.idempotent = e;
      return rep;
    }
  }
  rep.verdict = Decomposition::inconclusive;
  rep.reason = "semisimple quotient has dimension " + std::to_string(d - rep.radical_dim) + " but no rational idempotent was found";
  return rep;
}

}  // namespace sjt
