#include "sjt/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <functional>
#include <string>

#include "sjt/subspace.hpp"
#include "sjt/symbolic_operator.hpp"

#include "sjt/error.hpp"

namespace sjt {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

const Monomial& lm(const Poly& p) { return p.leading().mono; }

Poly s_polynomial(const Poly& f, const Poly& g, const Monomial& l) {
  Poly s = f.times_term(lm(f).quotient_of(l), 1 / f.leading().coeff);
  s.add_multiple(-1 / g.leading().coeff, lm(g).quotient_of(l), g);
  return s;
}

Poly reduce_active(Poly p, const std::vector<Poly>& polys, const std::vector<std::size_t>& active) {
  Poly rem(p.nvars());
  std::vector<Term> kept;
  while (!p.is_zero()) {
    const Term& t = p.leading();
    const Poly* divisor = nullptr;
    for (std::size_t idx : active) {
      if (lm(polys[idx]).divides(t.mono)) {
        divisor = &polys[idx];
        break;
      }
    }
    if (divisor == nullptr) {
      kept.push_back(p.take_leading());
      continue;
    }
    Rational c = -t.coeff / divisor->leading().coeff;
    Monomial m = lm(*divisor).quotient_of(t.mono);
    p.add_multiple(c, m, *divisor);
  }
  return Poly::from_terms(rem.nvars(), std::move(kept));
}

class Buchberger {
 public:
  Buchberger(std::size_t nvars, const Limits& limits) : nvars_(nvars), limits_(limits) {}

  std::vector<Poly> run(const std::vector<Poly>& generators) {
    for (const auto& g : generators) {
      Poly h = reduce_active(g, polys_, active_);
      if (!h.is_zero()) add(h.monic());
    }
    std::size_t reductions = 0;
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        return grevlex_greater(b.lcm, a.lcm);
      });
      Pair p = *best;
      pairs_.erase(best);
      if (++reductions > limits_.max_spairs) {
        throw ResourceLimit("Groebner basis exceeded " + std::to_string(limits_.max_spairs) + " S-pair reductions");
      }
      Poly h = reduce_active(s_polynomial(polys_[p.i], polys_[p.j], p.lcm), polys_, active_);
      if (!h.is_zero()) add(h.monic());
    }
    return finish();
  }

 private:
  void add(Poly h) {
    if (h.total_degree() > limits_.max_degree) {
      throw ResourceLimit("Groebner basis degree exceeded " + std::to_string(limits_.max_degree));
    }
    if (polys_.size() >= limits_.max_basis) {
      throw ResourceLimit("Groebner basis size exceeded " + std::to_string(limits_.max_basis));
    }
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& hm = lm(polys_[hi]);

    // Gebauer-Möller update.
    std::vector<Pair> candidates;
    for (std::size_t g : active_) {
      candidates.push_back({g, hi, hm.lcm(lm(polys_[g]))});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& c = candidates[a];
      bool coprime = hm.coprime(lm(polys_[c.i]));
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b) {
          dominated = candidates[b].lcm.divides(c.lcm);
        }
        for (const auto& k : kept) {
          if (dominated) break;
          dominated = k.lcm.divides(c.lcm);
        }
      }
      if (coprime || !dominated) kept.push_back(c);
    }
    std::vector<Pair> fresh;
    for (const auto& k : kept) {
      if (!hm.coprime(lm(polys_[k.i]))) fresh.push_back(k);
    }
    std::vector<Pair> old;
    for (const auto& p : pairs_) {
      bool drop = hm.divides(p.lcm) && hm.lcm(lm(polys_[p.i])) != p.lcm && hm.lcm(lm(polys_[p.j])) != p.lcm;
      if (!drop) old.push_back(p);
    }
    old.insert(old.end(), fresh.begin(), fresh.end());
    pairs_ = std::move(old);

    std::vector<std::size_t> still;
    for (std::size_t g : active_) {
      if (!hm.divides(lm(polys_[g]))) still.push_back(g);
    }
    still.push_back(hi);
    active_ = std::move(still);
  }

  std::vector<Poly> finish() {
    std::vector<Poly> minimal;
    for (std::size_t g : active_) minimal.push_back(polys_[g]);
    std::sort(minimal.begin(), minimal.end(), [](const Poly& a, const Poly& b) { return grevlex_greater(lm(b), lm(a)); });
    std::vector<Poly> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Poly> others;
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != k) {
          idx.push_back(others.size());
          others.push_back(minimal[j]);
        }
      }
      // leading term is irreducible by the others (minimal basis); only the tail changes
      Poly tail = minimal[k];
      Term lead = tail.take_leading();
      Poly r = reduce_active(tail, others, idx);
      r += Poly::monomial(nvars_, lead.mono, lead.coeff);
      out.push_back(r.monic());
    }
    return out;
  }

  std::size_t nvars_;
  Limits limits_;
  std::vector<Poly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

Ideal::Ideal(std::size_t nvars, std::vector<Poly> generators) : nvars_(nvars) {
  for (auto& g : generators) {
    if (g.nvars() > nvars) throw std::invalid_argument("generator lives in a larger ring");
    if (!g.is_zero()) generators_.push_back(g.extended(nvars));
  }
}

const std::vector<Poly>& Ideal::basis(const Limits& limits) const {
  if (!basis_) basis_ = groebner_basis(nvars_, generators_, limits);
  return *basis_;
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Poly& p) { return p.is_homogeneous(); });
}

bool Ideal::is_unit(const Limits& limits) const {
  const auto& b = basis(limits);
  return b.size() == 1 && b.front().is_constant();
}

std::vector<Poly> groebner_basis(std::size_t nvars, const std::vector<Poly>& generators, const Limits& limits) {
  std::vector<Poly> gens;
  for (const auto& g : generators) {
    if (!g.is_zero()) gens.push_back(g.extended(nvars));
  }
  if (gens.empty()) return {};
  for (const auto& g : gens) {
    if (g.is_constant()) return {Poly::constant(nvars, 1)};
  }
  return Buchberger(nvars, limits).run(gens);
}

Ideal groebner_basis(const Ideal& i, const Limits& limits) {
  Ideal out(i.nvars(), i.basis(limits));
  out.basis(limits);
  return out;
}

Poly reduce(const Poly& p, const std::vector<Poly>& basis) {
  std::vector<std::size_t> all(basis.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return reduce_active(p, basis, all);
}

Poly normal_form(const Poly& p, const Ideal& i, const Limits& limits) { return reduce(p.extended(i.nvars()), i.basis(limits)); }

bool contains(const Ideal& i, const Poly& p, const Limits& limits) { return normal_form(p, i, limits).is_zero(); }

bool radical_membership(const Poly& p, const Ideal& i, const Limits& limits) {
  const std::size_t n = i.nvars() + 1;
  std::vector<Poly> gens;
  for (const auto& g : i.generators()) gens.push_back(g.extended(n));
  // 1 - t p, with t the new last variable
  Poly rab = Poly::constant(n, 1) - Poly::variable(n, n - 1) * p.extended(n);
  gens.push_back(rab);
  auto basis = groebner_basis(n, gens, limits);
  return basis.size() == 1 && basis.front().is_constant();
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nvars) {
      cur.set(var, left);
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur.set(var, e);
      rec(var + 1, left - e);
    }
    cur.set(var, 0);
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); });
  return out;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_reduce(const Rational& q, std::uint64_t p) {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) throw std::domain_error("denominator divisible by the modulus");
  return num * mod_pow(den, p - 2, p) % p;
}

namespace {

// Incremental dense row echelon form over Z/p.
class ModularEchelon {
 public:
  ModularEchelon(std::uint64_t p, std::size_t cols) : p_(p), cols_(cols), pivot_row_(cols, kNone) {}

  std::size_t rank() const { return rows_.size(); }

  void insert(std::vector<std::uint64_t> v) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] == 0) continue;
      if (pivot_row_[c] == kNone) {
        std::uint64_t inv = mod_pow(v[c], p_ - 2, p_);
        for (std::size_t k = c; k < cols_; ++k) v[k] = v[k] * inv % p_;
        pivot_row_[c] = rows_.size();
        rows_.push_back(std::move(v));
        return;
      }
      const auto& r = rows_[pivot_row_[c]];
      std::uint64_t f = p_ - v[c];
      for (std::size_t k = c; k < cols_; ++k) {
        if (r[k] != 0) v[k] = (v[k] + f * r[k]) % p_;
      }
    }
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::uint64_t p_;
  std::size_t cols_;
  std::vector<std::size_t> pivot_row_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace

std::optional<unsigned> saturation_degree_mod(std::size_t nvars, const std::vector<ModularForm>& input, std::uint64_t p,
                                              unsigned start, unsigned max_degree, std::size_t max_columns, bool* capped) {
  if (capped) *capped = false;
  std::vector<const ModularForm*> forms;
  for (const auto& f : input) {
    if (!f.terms.empty()) forms.push_back(&f);
  }
  if (forms.empty()) return std::nullopt;
  // sparse forms first: cheap rows fill most pivots
  std::stable_sort(forms.begin(), forms.end(), [](const ModularForm* a, const ModularForm* b) { return a->terms.size() < b->terms.size(); });
  for (unsigned d = start; d <= max_degree; ++d) {
    const std::size_t columns = binomial(d + nvars - 1, nvars - 1);
    if (columns > max_columns) {
      if (capped) *capped = true;
      return std::nullopt;
    }
    // fewer rows than columns cannot have full rank
    std::size_t rows = 0;
    for (const ModularForm* f : forms) {
      if (f->degree <= d) rows += binomial(d - f->degree + nvars - 1, nvars - 1);
    }
    if (rows < columns) continue;
    auto monos = monomials_of_degree(nvars, d);
    auto index_of = [&monos](const Monomial& m) {
      auto it = std::lower_bound(monos.begin(), monos.end(), m, [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); });
      return static_cast<std::size_t>(it - monos.begin());
    };
    ModularEchelon ech(p, monos.size());
    for (const ModularForm* f : forms) {
      if (f->degree > d) continue;
      for (const auto& mult : monomials_of_degree(nvars, d - f->degree)) {
        std::vector<std::uint64_t> row(monos.size(), 0);
        for (const auto& [mono, c] : f->terms) row[index_of(mono * mult)] = c;
        ech.insert(std::move(row));
        if (ech.rank() == monos.size()) return d;
      }
    }
  }
  return std::nullopt;
}

std::optional<unsigned> saturation_degree(std::size_t nvars, const std::vector<Poly>& homogeneous, unsigned start,
                                          unsigned max_degree, std::size_t max_columns) {
  for (const auto& g : homogeneous) {
    if (!g.is_zero() && !g.is_homogeneous()) throw std::invalid_argument("saturation_degree needs homogeneous generators");
  }
  for (std::uint64_t p : kModularPrimes) {
    std::vector<ModularForm> forms;
    try {
      for (const auto& g : homogeneous) {
        if (g.is_zero()) continue;
        ModularForm f{g.leading().mono.degree(), {}};
        for (const auto& t : g.terms()) {
          std::uint64_t c = mod_reduce(t.coeff, p);
          if (c != 0) f.terms.emplace_back(t.mono, c);
        }
        forms.push_back(std::move(f));
      }
    } catch (const std::domain_error&) {
      continue;
    }
    if (auto d = saturation_degree_mod(nvars, forms, p, start, max_degree, max_columns)) return d;
  }
  return std::nullopt;
}

bool vanishes_only_at_origin(const Ideal& i, const std::vector<std::size_t>& vars, const Limits& limits, OriginTest mode) {
  bool all_vars = vars.size() == i.nvars();
  if (mode == OriginTest::automatic && all_vars && i.is_homogeneous()) {
    if (i.nvars() == 0) return true;
    unsigned top = 0;
    for (const auto& g : i.generators()) top = std::max(top, g.total_degree());
    if (!i.generators().empty() && saturation_degree(i.nvars(), i.generators(), 0, top + 4)) return true;
    // A homogeneous ideal has a cone as zero locus: it is {0} exactly when the
    // quotient ring is finite dimensional, i.e. every variable has a pure
    // power among the leading monomials.
    const auto& basis = i.basis(limits);
    for (std::size_t v : vars) {
      bool found = false;
      for (const auto& g : basis) {
        const Monomial& m = lm(g);
        if (m[v] > 0 && m[v] == m.degree()) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }
  for (std::size_t v : vars) {
    if (!radical_membership(Poly::variable(i.nvars(), v), i, limits)) return false;
  }
  return true;
}

bool vanishes_only_at_origin(const Ideal& i, const Limits& limits, OriginTest mode) {
  std::vector<std::size_t> vars(i.nvars());
  for (std::size_t k = 0; k < vars.size(); ++k) vars[k] = k;
  return vanishes_only_at_origin(i, vars, limits, mode);
}

}  // namespace sjt
