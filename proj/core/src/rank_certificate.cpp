#include "sjt/rank_certificate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sjt/error.hpp"
#include "sjt/subspace.hpp"
#include "sjt/univariate.hpp"

namespace sjt {

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> p(n);
  bool nonzero = false;
  while (!nonzero && n > 0) {
    for (auto& x : p) {
      x = static_cast<long>(rng() % 35) - 17;
      nonzero = nonzero || !is_zero(x);
    }
  }
  return p;
}

std::vector<std::vector<Rational>> small_points(std::size_t n, const std::vector<int>& values, std::size_t cap) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (all.size() > 4 * cap) return;
    if (i == n) {
      if (std::any_of(cur.begin(), cur.end(), [](int v) { return v != 0; })) all.push_back(cur);
      return;
    }
    for (int v : values) {
      cur[i] = v;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  auto weight = [](const std::vector<int>& v) { return std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }); };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return weight(a) < weight(b); });
  std::vector<std::vector<Rational>> out;
  for (const auto& v : all) {
    if (out.size() >= cap) break;
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

std::size_t generic_rank(const SymbolicOperator& d, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (std::size_t k = 0; k < samples; ++k) best = std::max(best, rank(d.evaluate(random_point(rng, d.nvars()))));
  return best;
}

std::vector<SupportBlock> support_blocks(const SymbolicOperator& d) {
  const std::size_t R = d.rows(), C = d.cols();
  std::vector<std::size_t> parent(R + C);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> used(R + C, false);
  for (const auto& c : d.coefficients()) {
    for (const auto& [r, col, v] : c.triplets()) {
      used[r] = used[R + col] = true;
      std::size_t a = find(r), b = find(R + col);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<SupportBlock> blocks;
  std::vector<std::size_t> block_of(R + C, SIZE_MAX);
  for (std::size_t x = 0; x < R + C; ++x) {
    if (!used[x]) continue;
    std::size_t root = find(x);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    auto& b = blocks[block_of[root]];
    if (x < R) b.rows.push_back(x);
    else b.cols.push_back(x - R);
  }
  return blocks;
}

Rational dense_determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(a[piv][k])) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a[i][k])) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

namespace {

Poly falling_factorial(std::size_t nvars, std::size_t var, unsigned k) {
  Poly p = Poly::constant(nvars, 1);
  for (unsigned j = 0; j < k; ++j) p = p * (Poly::variable(nvars, var) - Poly::constant(nvars, j));
  return p;
}

// Polynomial in variables first..nvars-1 of total degree <= deg.
Poly interpolate_lattice(std::size_t nvars, std::size_t first, unsigned deg, const std::function<Rational(const std::vector<Rational>&)>& eval) {
  if (first == nvars) return Poly::constant(nvars, eval({}));
  std::vector<Poly> r;
  Rational factorial = 1;
  for (unsigned a = 0; a <= deg; ++a) {
    if (a > 0) factorial *= a;
    auto g = [&](const std::vector<Rational>& rest) {
      std::vector<Rational> pt;
      pt.reserve(rest.size() + 1);
      pt.emplace_back(a);
      pt.insert(pt.end(), rest.begin(), rest.end());
      Rational v = eval(pt);
      if (!r.empty()) {
        std::vector<Rational> full(nvars);
        for (std::size_t i = 0; i < rest.size(); ++i) full[first + 1 + i] = rest[i];
        Rational ff = 1;  // (a)_k
        for (unsigned k = 0; k < r.size(); ++k) {
          if (k > 0) ff *= (a - k + 1);
          if (is_zero(ff)) break;
          v -= ff * r[k].evaluate(full);
        }
      }
      return v;
    };
    r.push_back(interpolate_lattice(nvars, first + 1, deg - a, g).scaled(1 / factorial));
  }
  Poly out(nvars);
  for (unsigned k = 0; k < r.size(); ++k) {
    if (!r[k].is_zero()) out += falling_factorial(nvars, first, k) * r[k];
  }
  return out;
}

}  // namespace

Poly interpolate_form(std::size_t nvars, unsigned deg, const std::function<Rational(const std::vector<Rational>&)>& eval) {
  if (nvars == 0) throw std::invalid_argument("forms need at least one variable");
  // h(t_2..t_n) = f(1, t_2..t_n)
  auto h = interpolate_lattice(nvars, 1, deg, [&](const std::vector<Rational>& rest) {
    std::vector<Rational> pt{Rational(1)};
    pt.insert(pt.end(), rest.begin(), rest.end());
    return eval(pt);
  });
  std::vector<Term> terms;
  for (const auto& t : h.terms()) {
    Monomial m = t.mono;
    m.set(0, deg - t.mono.degree());
    terms.push_back({m, t.coeff});
  }
  return Poly::from_terms(nvars, std::move(terms));
}

namespace {

struct BlockResult {
  BlockCertificate cert;
  std::vector<Rational> drop_point;
  bool drop_certified = false;
};

class BlockCertifier {
 public:
  BlockCertifier(const SymbolicOperator& b, const CertifyOptions& o, std::uint64_t seed) : b_(b), o_(o), rng_(seed) {}

  BlockResult run() {
    BlockResult res;
    auto& c = res.cert;
    c.rows = b_.rows();
    c.cols = b_.cols();
    const std::size_t s = b_.nvars();
    std::size_t g = 0;
    for (std::size_t k = 0; k < o_.generic_samples; ++k) g = std::max(g, rank(b_.evaluate(random_point(rng_, s))));
    try {
      g = upper_bound(g, c);
    } catch (const ResourceLimit& e) {
      c.generic_rank = g;
      c.resource_limited = true;
      c.outcome = RankOutcome::inconclusive;
      return res;
    }
    c.generic_rank = g;
    if (g == 0) {
      c.lower_method = "trivial";
      c.outcome = RankOutcome::constant;
      return res;
    }
    std::vector<Poly> gens;
    bool decided = false;
    try {
      std::size_t count = minor_count(b_.rows(), b_.cols(), g);
      if (count <= o_.limits.max_minors && (g <= 4 || count <= 200)) {
        Ideal ideal = minors_ideal(b_, g, o_.limits);
        c.lower_method = "minors";
        c.lower_generators = ideal.generators().size();
        gens = ideal.generators();
        unsigned top = g;
        c.saturation = saturation_degree(s, gens, g, top + o_.saturation_slack, o_.saturation_columns);
        bool only_origin = c.saturation.has_value() || vanishes_only_at_origin(ideal, o_.limits);
        c.minors = ideal;
        if (only_origin) {
          c.outcome = RankOutcome::constant;
          return res;
        }
        res.drop_certified = true;
        decided = true;
      }
    } catch (const ResourceLimit&) {
      c.resource_limited = true;
    }
    if (!decided) {
      c.lower_method = "combinations";
      // with N forms of degree g, degree d needs N * mon(d - g) >= mon(d) rows
      const std::size_t count = combination_count(g);
      bool feasible = false;
      for (std::size_t d = g; d <= g + o_.saturation_slack && binomial(d + s - 1, s - 1) <= o_.saturation_columns; ++d) {
        if (count * binomial(d - g + s - 1, s - 1) >= binomial(d + s - 1, s - 1)) feasible = true;
      }
      if (!feasible) c.resource_limited = true;
      for (std::uint64_t p : kModularPrimes) {
        if (!feasible) break;
        auto forms = combination_forms_mod(g, p);
        if (!forms) continue;
        c.lower_generators = forms->size();
        bool capped = false;
        c.saturation = saturation_degree_mod(s, *forms, p, static_cast<unsigned>(g), static_cast<unsigned>(g) + o_.saturation_slack,
                                             o_.saturation_columns, &capped);
        if (c.saturation) {
          c.outcome = RankOutcome::constant;
          c.resource_limited = false;
          return res;
        }
        if (capped) c.resource_limited = true;
        break;
      }
      // exact forms only feed the witness search on the projective line
      if (s == 2) gens = combination_forms(g);
    }
    if (auto w = find_drop(g, gens)) {
      res.drop_point = *w;
      c.outcome = RankOutcome::drop;
      return res;
    }
    c.outcome = RankOutcome::inconclusive;
    return res;
  }

 private:
  // Raises g until every (g+1)-minor is shown to vanish identically.
  std::size_t upper_bound(std::size_t g, BlockCertificate& c) {
    const std::size_t s = b_.nvars();
    while (true) {
      if (g >= std::min(b_.rows(), b_.cols())) {
        c.upper_method = "full";
        return g;
      }
      std::size_t count = minor_count(b_.rows(), b_.cols(), g + 1);
      std::size_t grid = 1;
      for (std::size_t i = 1; i < s && grid <= o_.grid_cap; ++i) grid *= g + 2;
      if (count <= o_.limits.max_minors && count <= grid) {
        c.upper_method = "minors";
        c.upper_checks = count;
        auto higher = nonzero_minor_point(g + 1);
        if (!higher) return g;
        g = rank(b_.evaluate(*higher));
        continue;
      }
      if (grid > o_.grid_cap) {
        throw ResourceLimit("rank upper bound needs " + std::to_string(count) + " minors or a grid of more than " +
                            std::to_string(o_.grid_cap) + " points");
      }
      c.upper_method = "grid";
      c.upper_checks = grid;
      std::size_t found = grid_max_rank(g);
      if (found == g) return g;
      g = found;
    }
  }

  // A point where some k-minor is nonzero, if any k-minor is a nonzero polynomial.
  std::optional<std::vector<Rational>> nonzero_minor_point(std::size_t k) {
    PolyMatrix pm = b_.to_poly_matrix();
    std::optional<Poly> witness;
    for_each_subset(b_.rows(), k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(b_.cols(), k, [&](const std::vector<std::size_t>& cs) {
        Poly m = minor(pm, rs, cs);
        if (!m.is_zero()) witness = m;
        return !witness;
      });
      return !witness;
    });
    if (!witness) return std::nullopt;
    while (true) {
      auto p = random_point(rng_, b_.nvars());
      if (!is_zero(witness->evaluate(p))) return p;
    }
  }

  // Largest rank on the grid {1} x {0..g+1}^(s-1); stops at the first point above g.
  std::size_t grid_max_rank(std::size_t g) {
    const std::size_t s = b_.nvars();
    std::vector<Rational> p(s);
    p[0] = 1;
    std::vector<unsigned> idx(s, 0);
    while (true) {
      for (std::size_t i = 1; i < s; ++i) p[i] = idx[i];
      std::size_t r = rank(b_.evaluate(p));
      if (r > g) return r;
      std::size_t i = 1;
      while (i < s && idx[i] == g + 1) idx[i++] = 0;
      if (i >= s) return g;
      ++idx[i];
    }
  }

  // Forms det(U D W) with small random U, W: elements of the g-minor ideal
  // by Cauchy-Binet.
  std::vector<Poly> combination_forms(std::size_t g) {
    const std::size_t s = b_.nvars();
    const std::size_t count = combination_count(g);
    std::vector<Poly> forms;
    for (std::size_t f = 0; f < count; ++f) {
      std::vector<std::vector<Rational>> u(g, std::vector<Rational>(b_.rows()));
      std::vector<std::vector<Rational>> w(b_.cols(), std::vector<Rational>(g));
      for (auto& row : u) {
        for (auto& x : row) x = static_cast<long>(rng_() % 5) - 2;
      }
      for (auto& row : w) {
        for (auto& x : row) x = static_cast<long>(rng_() % 5) - 2;
      }
      auto eval = [&](const std::vector<Rational>& pt) {
        SparseMatrix m = b_.evaluate(pt);
        // (U M) is g x cols, then times W
        std::vector<std::vector<Rational>> um(g, std::vector<Rational>(b_.cols()));
        for (std::size_t i = 0; i < g; ++i) {
          for (std::size_t r = 0; r < b_.rows(); ++r) {
            if (is_zero(u[i][r])) continue;
            for (const auto& [col, v] : m.row(r)) um[i][col] += u[i][r] * v;
          }
        }
        std::vector<std::vector<Rational>> prod(g, std::vector<Rational>(g));
        for (std::size_t i = 0; i < g; ++i) {
          for (std::size_t col = 0; col < b_.cols(); ++col) {
            if (is_zero(um[i][col])) continue;
            for (std::size_t j = 0; j < g; ++j) prod[i][j] += um[i][col] * w[col][j];
          }
        }
        return dense_determinant(std::move(prod));
      };
      Poly form = interpolate_form(s, static_cast<unsigned>(g), eval);
      if (!form.is_zero()) forms.push_back(std::move(form));
    }
    return forms;
  }

  std::size_t combination_count(std::size_t g) const {
    const std::size_t s = b_.nvars();
    if (o_.combination_forms != 0) return o_.combination_forms;
    double ratio = static_cast<double>(binomial(g + 2 + s - 1, s - 1)) / static_cast<double>(binomial(2 + s - 1, s - 1));
    return std::min<std::size_t>(64, s + static_cast<std::size_t>(1.5 * ratio) + 1);
  }

  // The same forms det(U D W), reduced mod p: values on the principal
  // lattice {1} x {a : |a| <= g} (unisolvent for forms of degree g), then
  // one solve of the evaluation system shared by every form.
  std::optional<std::vector<ModularForm>> combination_forms_mod(std::size_t g, std::uint64_t p) {
    const std::size_t s = b_.nvars();
    const std::size_t count = combination_count(g);
    auto monos = monomials_of_degree(s, static_cast<unsigned>(g));
    const std::size_t n = monos.size();
    std::vector<std::vector<std::uint64_t>> u(count * g), w(count * g);
    for (auto& row : u) {
      row.resize(b_.rows());
      for (auto& x : row) x = (rng_() % 5 + p - 2) % p;
    }
    for (auto& col : w) {
      col.resize(b_.cols());
      for (auto& x : col) x = (rng_() % 5 + p - 2) % p;
    }
    // augmented system [V | F]: V[i][j] = monos[j](point_i), F[i][f] = form f at point_i
    std::vector<std::vector<std::uint64_t>> sys(n, std::vector<std::uint64_t>(n + count));
    try {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> pt(s);
        pt[0] = 1;
        for (std::size_t k = 1; k < s; ++k) pt[k] = monos[i][k];
        for (std::size_t j = 0; j < n; ++j) {
          std::uint64_t v = 1;
          for (std::size_t k = 1; k < s; ++k) v = v * mod_pow(monos[i][k], monos[j][k], p) % p;
          sys[i][j] = v;
        }
        std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> m(b_.rows());
        SparseMatrix at = b_.evaluate(pt);
        for (std::size_t r = 0; r < b_.rows(); ++r) {
          for (const auto& [col, v] : at.row(r)) m[r].emplace_back(col, mod_reduce(v, p));
        }
        for (std::size_t f = 0; f < count; ++f) sys[i][n + f] = compressed_determinant(m, f, g, u, w, p);
      }
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
    if (!solve_mod(sys, n, p)) return std::nullopt;
    std::vector<ModularForm> forms(count);
    for (std::size_t f = 0; f < count; ++f) {
      forms[f].degree = static_cast<unsigned>(g);
      for (std::size_t j = 0; j < n; ++j) {
        if (sys[j][n + f] != 0) forms[f].terms.emplace_back(monos[j], sys[j][n + f]);
      }
    }
    return forms;
  }

  // det(U_f M W_f) mod p for the f-th pair of compressions.
  std::uint64_t compressed_determinant(const std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>>& m, std::size_t f,
                                       std::size_t g, const std::vector<std::vector<std::uint64_t>>& u,
                                       const std::vector<std::vector<std::uint64_t>>& w, std::uint64_t p) const {
    std::vector<std::vector<std::uint64_t>> a(g, std::vector<std::uint64_t>(g, 0));
    std::vector<std::uint64_t> um(b_.cols());
    for (std::size_t i = 0; i < g; ++i) {
      std::fill(um.begin(), um.end(), 0);
      const auto& ui = u[f * g + i];
      for (std::size_t r = 0; r < b_.rows(); ++r) {
        if (ui[r] == 0) continue;
        for (const auto& [col, v] : m[r]) um[col] = (um[col] + ui[r] * v) % p;
      }
      for (std::size_t col = 0; col < b_.cols(); ++col) {
        if (um[col] == 0) continue;
        for (std::size_t j = 0; j < g; ++j) a[i][j] = (a[i][j] + um[col] * w[f * g + j][col]) % p;
      }
    }
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < g; ++c) {
      std::size_t piv = c;
      while (piv < g && a[piv][c] == 0) ++piv;
      if (piv == g) return 0;
      if (piv != c) {
        std::swap(a[piv], a[c]);
        det = (p - det) % p;
      }
      det = det * a[c][c] % p;
      std::uint64_t inv = mod_pow(a[c][c], p - 2, p);
      for (std::size_t r = c + 1; r < g; ++r) {
        if (a[r][c] == 0) continue;
        std::uint64_t factor = a[r][c] * inv % p;
        for (std::size_t k = c; k < g; ++k) a[r][k] = (a[r][k] + (p - factor) * a[c][k]) % p;
      }
    }
    return det;
  }

  // Gauss-Jordan on the n x n left block of sys; false when it is singular mod p.
  static bool solve_mod(std::vector<std::vector<std::uint64_t>>& sys, std::size_t n, std::uint64_t p) {
    const std::size_t width = sys.empty() ? 0 : sys[0].size();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && sys[piv][c] == 0) ++piv;
      if (piv == n) return false;
      std::swap(sys[piv], sys[c]);
      std::uint64_t inv = mod_pow(sys[c][c], p - 2, p);
      for (std::size_t k = c; k < width; ++k) sys[c][k] = sys[c][k] * inv % p;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || sys[r][c] == 0) continue;
        std::uint64_t factor = p - sys[r][c];
        for (std::size_t k = c; k < width; ++k) {
          if (sys[c][k] != 0) sys[r][k] = (sys[r][k] + factor * sys[c][k]) % p;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<Rational>> find_drop(std::size_t g, const std::vector<Poly>& gens) {
    const std::size_t s = b_.nvars();
    auto drops = [&](const std::vector<Rational>& p) { return rank(b_.evaluate(p)) < g; };
    for (const auto& p : small_points(s, {0, 1, -1}, 6561)) {
      if (drops(p)) return p;
    }
    if (s == 2 && !gens.empty()) {
      // common zeros (1 : t) are roots of the gcd of the dehomogenized forms
      UPoly common;
      for (const auto& f : gens) {
        std::vector<Rational> coeffs(f.total_degree() + 1);
        for (const auto& t : f.terms()) coeffs[t.mono[1]] += t.coeff;
        common = gcd(common, UPoly(coeffs));
      }
      for (const auto& t : rational_roots(common)) {
        std::vector<Rational> p{Rational(1), t};
        if (drops(p)) return p;
      }
    }
    for (std::size_t k = 0; k < o_.witness_samples; ++k) {
      auto p = random_point(rng_, s);
      if (drops(p)) return p;
    }
    return std::nullopt;
  }

  const SymbolicOperator& b_;
  const CertifyOptions& o_;
  std::mt19937_64 rng_;
};

}  // namespace

RankCertificate certify_constant_rank(const SymbolicOperator& d, const CertifyOptions& options) {
  RankCertificate out;
  auto blocks = support_blocks(d);
  bool inconclusive = false;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    SymbolicOperator b = d.submatrix(blocks[k].rows, blocks[k].cols);
    BlockCertifier certifier(b, options, options.seed * 0x9E3779B97F4A7C15ULL + k + 1);
    BlockResult r = certifier.run();
    out.generic_rank += r.cert.generic_rank;
    out.resource_limited = out.resource_limited || r.cert.resource_limited;
    out.drop_certified = out.drop_certified || r.drop_certified;
    RankOutcome o = r.cert.outcome;
    out.blocks.push_back(std::move(r.cert));
    if (o == RankOutcome::drop) {
      out.outcome = RankOutcome::drop;
      out.drop_point = r.drop_point;
      out.drop_rank = rank(d.evaluate(r.drop_point));
      // later blocks are not analysed; the generic rank counts the earlier ones only
      for (std::size_t j = k + 1; j < blocks.size(); ++j) {
        out.generic_rank += generic_rank(d.submatrix(blocks[j].rows, blocks[j].cols), options.generic_samples, options.seed + j);
      }
      out.reason = "rank drops below the generic rank";
      return out;
    }
    if (o == RankOutcome::inconclusive) inconclusive = true;
  }
  if (inconclusive) {
    out.outcome = RankOutcome::inconclusive;
    out.reason = out.resource_limited ? "resource limit" : (out.drop_certified ? "rank drops only at irrational points" : "no certificate found");
  } else {
    out.outcome = RankOutcome::constant;
  }
  return out;
}

}  // namespace sjt
