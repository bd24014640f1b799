#include "sjt/constructions.hpp"

#include <algorithm>
#include <random>

#include "sjt/error.hpp"

namespace sjt {

namespace {

void same_algebra(const Supermodule& m, const Supermodule& n) {
  if (m.algebra() != n.algebra()) {
    throw AlgebraMismatch("modules over " + m.algebra().to_string() + " and " + n.algebra().to_string());
  }
}

std::map<std::string, SparseMatrix> action_map(const Supermodule& m, std::vector<SparseMatrix> actions) {
  std::map<std::string, SparseMatrix> out;
  const auto& gens = m.algebra().generators();
  for (std::size_t g = 0; g < gens.size(); ++g) out[gens[g].name] = std::move(actions[g]);
  return out;
}

// Works over exterior(s); principal-block f_r modules are converted there and back.
template <typename F>
Supermodule via_exterior(const Supermodule& m, F&& f) {
  if (m.algebra().is_exterior()) return f(m);
  return from_exterior(f(as_exterior(m)), m.algebra());
}

}  // namespace

Supermodule zero_module(const AlgebraSpec& a) { return Supermodule(a, {}); }

Supermodule trivial(const AlgebraSpec& a, Parity p) { return Supermodule(a, {p}); }

Supermodule parity_shift(const Supermodule& m) {
  std::vector<Parity> par;
  for (auto p : m.parity()) par.push_back(flip(p));
  return Supermodule(m.algebra(), par, action_map(m, m.actions()));
}

Supermodule direct_sum(const Supermodule& m, const Supermodule& n) {
  same_algebra(m, n);
  std::vector<Parity> par = m.parity();
  par.insert(par.end(), n.parity().begin(), n.parity().end());
  std::vector<SparseMatrix> act;
  for (std::size_t g = 0; g < m.actions().size(); ++g) act.push_back(block_diag(m.actions()[g], n.actions()[g]));
  return Supermodule(m.algebra(), par, action_map(m, act));
}

Supermodule tensor(const Supermodule& m, const Supermodule& n) {
  same_algebra(m, n);
  std::vector<Parity> par;
  for (auto p : m.parity()) {
    for (auto q : n.parity()) par.push_back(p + q);
  }
  SparseMatrix im = SparseMatrix::identity(m.dim());
  SparseMatrix in = SparseMatrix::identity(n.dim());
  SparseMatrix sigma = parity_sign(m.parity());
  const auto& gens = m.algebra().generators();
  std::vector<SparseMatrix> act;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const SparseMatrix& left = gens[g].odd ? sigma : im;
    act.push_back(kron(m.actions()[g], in) + kron(left, n.actions()[g]));
  }
  return Supermodule(m.algebra(), par, action_map(m, act));
}

Supermodule dual(const Supermodule& m) {
  SparseMatrix sigma = parity_sign(m.parity());
  const auto& gens = m.algebra().generators();
  std::vector<SparseMatrix> act;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    SparseMatrix t = -m.actions()[g].transpose();
    act.push_back(gens[g].odd ? t * sigma : t);
  }
  return Supermodule(m.algebra(), m.parity(), action_map(m, act));
}

Supermodule hom(const Supermodule& m, const Supermodule& n) {
  same_algebra(m, n);
  return tensor(n, dual(m));
}

Supermodule kac0() {
  return Supermodule(AlgebraSpec::sl11(), {Parity::even, Parity::odd}, {{"y1", SparseMatrix::unit(2, 2, 1, 0)}});
}

Supermodule dual_kac0() {
  return Supermodule(AlgebraSpec::sl11(), {Parity::odd, Parity::even}, {{"x1", SparseMatrix::unit(2, 2, 1, 0)}});
}

namespace {

std::vector<std::vector<std::size_t>> exterior_words(std::size_t s) {
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t k = 0; k <= s; ++k) {
    for_each_subset(s, k, [&](const std::vector<std::size_t>& w) {
      words.push_back(w);
      return true;
    });
  }
  return words;
}

Supermodule exterior_free(std::size_t s, std::size_t rank, Parity p) {
  auto words = exterior_words(s);
  const std::size_t n = words.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[words[i]] = i;
  std::vector<Parity> par;
  std::map<std::string, SparseMatrix> act;
  for (std::size_t i = 0; i < s; ++i) act["z" + std::to_string(i + 1)] = SparseMatrix(n * rank, n * rank);
  for (std::size_t copy = 0; copy < rank; ++copy) {
    for (const auto& w : words) par.push_back(w.size() % 2 == 0 ? p : flip(p));
  }
  for (std::size_t i = 0; i < s; ++i) {
    SparseMatrix& a = act["z" + std::to_string(i + 1)];
    for (std::size_t col = 0; col < n; ++col) {
      const auto& w = words[col];
      if (std::find(w.begin(), w.end(), i) != w.end()) continue;
      std::size_t before = std::count_if(w.begin(), w.end(), [i](std::size_t j) { return j < i; });
      auto target = w;
      target.insert(std::lower_bound(target.begin(), target.end(), i), i);
      Rational sign = before % 2 == 0 ? 1 : -1;
      for (std::size_t copy = 0; copy < rank; ++copy) a.set(copy * n + index[target], copy * n + col, sign);
    }
  }
  return Supermodule(AlgebraSpec::exterior(s), par, act);
}

}  // namespace

Supermodule free_module(const AlgebraSpec& a, std::size_t rank, Parity p) {
  std::size_t s = a.is_exterior() ? a.rank() : 2 * a.rank();
  Supermodule m = exterior_free(s, rank, p);
  return a.is_exterior() ? m : from_exterior(m, a);
}

Subspace radical(const Supermodule& m) {
  std::vector<SparseVector> vecs;
  for (const auto& a : m.actions()) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      SparseVector col = a.column(c);
      if (!col.empty()) vecs.push_back(std::move(col));
    }
  }
  return Subspace::span(m.dim(), vecs);
}

Subspace socle(const Supermodule& m) {
  // kernel of the stacked generator actions
  std::vector<SparseVector> rows;
  for (const auto& a : m.actions()) {
    for (std::size_t r = 0; r < m.dim(); ++r) {
      if (!a.row(r).empty()) rows.push_back(a.row(r));
    }
  }
  SparseMatrix stacked(rows.size(), m.dim());
  for (std::size_t r = 0; r < rows.size(); ++r) stacked.set_row(r, rows[r]);
  return kernel(stacked);
}

namespace {

Parity vector_parity(const Supermodule& m, const SparseVector& v) {
  Parity p = m.parity(v.front().first);
  for (const auto& [i, x] : v) {
    if (m.parity(i) != p) throw ValidationError("subspace is not graded");
  }
  return p;
}

}  // namespace

Supermodule submodule(const Supermodule& m, const Subspace& w) {
  const auto& basis = w.basis();
  std::vector<Parity> par;
  for (const auto& b : basis) par.push_back(vector_parity(m, b));
  const auto& gens = m.algebra().generators();
  std::vector<SparseMatrix> act;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    SparseMatrix a(basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      SparseVector image = m.actions()[g].apply(basis[k]);
      if (image.empty()) continue;
      if (!w.contains(image)) throw ValidationError("subspace is not invariant under " + gens[g].name);
      for (const auto& [j, x] : w.coordinates(image)) a.set(j, k, x);
    }
    act.push_back(std::move(a));
  }
  return Supermodule(m.algebra(), par, action_map(m, act));
}

Supermodule quotient(const Supermodule& m, const Subspace& w) {
  auto comp = w.complement_coordinates();
  std::vector<std::size_t> position(m.dim(), comp.size());
  for (std::size_t k = 0; k < comp.size(); ++k) position[comp[k]] = k;
  std::vector<Parity> par;
  for (auto c : comp) par.push_back(m.parity(c));
  const auto& gens = m.algebra().generators();
  std::vector<SparseMatrix> act;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    SparseMatrix a(comp.size(), comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k) {
      SparseVector image = w.reduce(m.actions()[g].column(comp[k]));
      for (const auto& [j, x] : image) a.set(position[j], k, x);
    }
    act.push_back(std::move(a));
  }
  return Supermodule(m.algebra(), par, action_map(m, act));
}

Supermodule radical_module(const Supermodule& m) { return submodule(m, radical(m)); }

Supermodule head(const Supermodule& m) { return quotient(m, radical(m)); }

Supermodule quotient_by_socle(const Supermodule& m) { return quotient(m, socle(m)); }

namespace {

ProjectiveCover exterior_cover(const Supermodule& m) {
  const std::size_t s = m.algebra().rank();
  auto lifts = radical(m).complement_coordinates();
  auto words = exterior_words(s);
  const std::size_t n = words.size();
  std::vector<Parity> par;
  std::vector<SparseMatrix> blocks_act(s, SparseMatrix(0, 0));
  Supermodule cover = zero_module(m.algebra());
  SparseMatrix map(m.dim(), n * lifts.size());
  for (std::size_t j = 0; j < lifts.size(); ++j) {
    cover = direct_sum(cover, exterior_free(s, 1, m.parity(lifts[j])));
    for (std::size_t k = 0; k < n; ++k) {
      // z_S h_j = A_{S_1} A_{S_2} ... h_j
      SparseVector v = {{lifts[j], Rational(1)}};
      const auto& w = words[k];
      for (std::size_t t = w.size(); t-- > 0 && !v.empty();) v = m.action("z" + std::to_string(w[t] + 1)).apply(v);
      for (const auto& [r, x] : v) map.set(r, j * n + k, x);
    }
  }
  return {cover, map};
}

Supermodule omega_one(const Supermodule& m) {
  ProjectiveCover pc = exterior_cover(m);
  return submodule(pc.cover, kernel(pc.map));
}

Supermodule omega_minus_one(const Supermodule& m) { return dual(omega_one(dual(m))); }

}  // namespace

ProjectiveCover projective_cover(const Supermodule& m) {
  if (m.algebra().is_exterior()) return exterior_cover(m);
  ProjectiveCover pc = exterior_cover(as_exterior(m));
  return {from_exterior(pc.cover, m.algebra()), pc.map};
}

Supermodule omega(const Supermodule& m, int n) {
  return via_exterior(m, [n](const Supermodule& e) {
    Supermodule cur = e;
    if (n == 0) return omega_minus_one(omega_one(cur));
    for (int k = 0; k < std::abs(n); ++k) cur = n > 0 ? omega_one(cur) : omega_minus_one(cur);
    return cur;
  });
}

Supermodule w_module(const AlgebraSpec& a, std::size_t n) {
  if (n == 0) throw ValidationError("w(n) needs n >= 1");
  std::string x, y;
  if (a.is_exterior()) {
    if (a.rank() < 2) throw ValidationError("w(n) needs two odd generators");
    x = "z1";
    y = "z2";
  } else {
    x = "x1";
    y = "y1";
  }
  const std::size_t dim = 2 * n - 1;
  std::vector<Parity> par(n, Parity::even);
  par.resize(dim, Parity::odd);
  SparseMatrix ax(dim, dim), ay(dim, dim);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ax.set(n + i, i, 1);
    ay.set(n + i, i + 1, 1);
  }
  return Supermodule(a, par, {{x, ax}, {y, ay}});
}

Supermodule random_module(const AlgebraSpec& a, std::size_t dim, std::uint64_t seed) {
  if (!a.is_exterior()) throw ValidationError("random modules are generated over exterior algebras");
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (dim + 1)) ^ (a.rank() << 32));
  auto below = [&rng](std::uint64_t k) { return rng() % k; };
  std::size_t top = dim == 0 ? 0 : 1 + below(dim);  // at least one head vector
  if (top == dim && dim > 1) top = dim - 1;
  std::vector<Parity> par;
  for (std::size_t i = 0; i < dim; ++i) par.push_back(below(2) ? Parity::odd : Parity::even);
  std::map<std::string, SparseMatrix> act;
  for (std::size_t g = 0; g < a.rank(); ++g) {
    SparseMatrix m(dim, dim);
    for (std::size_t c = 0; c < top; ++c) {
      for (std::size_t r = top; r < dim; ++r) {
        if (par[r] == par[c]) continue;
        if (below(5) < 2) continue;  // keep matrices sparse
        long v = static_cast<long>(below(5)) - 2;
        if (v != 0) m.set(r, c, Rational(v));
      }
    }
    act["z" + std::to_string(g + 1)] = std::move(m);
  }
  return Supermodule(a, par, act);
}

Supermodule from_exterior(const Supermodule& m, const AlgebraSpec& target) {
  if (target.is_exterior()) {
    if (m.algebra() != target) throw AlgebraMismatch("cannot view " + m.algebra().to_string() + " module over " + target.to_string());
    return m;
  }
  const std::size_t r = target.rank();
  if (m.algebra() != AlgebraSpec::exterior(2 * r)) {
    throw AlgebraMismatch("cannot view " + m.algebra().to_string() + " module over " + target.to_string());
  }
  std::map<std::string, SparseMatrix> act;
  for (std::size_t i = 1; i <= r; ++i) {
    act["x" + std::to_string(i)] = m.action("z" + std::to_string(i));
    act["y" + std::to_string(i)] = m.action("z" + std::to_string(r + i));
  }
  return Supermodule(target, m.parity(), act);
}

}  // namespace sjt
