#include "sjt/supermodule.hpp"

#include <algorithm>
#include <set>

#include "sjt/error.hpp"

namespace sjt {

std::string to_string(const SuperDim& d) { return "(" + std::to_string(d.even) + "|" + std::to_string(d.odd) + ")"; }

Supermodule::Supermodule(AlgebraSpec algebra, std::vector<Parity> parity, const std::map<std::string, SparseMatrix>& actions)
    : algebra_(std::move(algebra)), parity_(std::move(parity)) {
  const std::size_t n = parity_.size();
  actions_.assign(algebra_.generators().size(), SparseMatrix(n, n));
  for (const auto& [name, a] : actions) set_action(name, a);
}

const SparseMatrix& Supermodule::action(const std::string& generator) const {
  auto i = algebra_.find(generator);
  if (!i) throw UnknownGenerator("unknown generator '" + generator + "' for algebra " + algebra_.to_string());
  return actions_[*i];
}

void Supermodule::set_action(const std::string& generator, SparseMatrix m) {
  auto i = algebra_.find(generator);
  if (!i) throw UnknownGenerator("unknown generator '" + generator + "' for algebra " + algebra_.to_string());
  if (m.rows() != dim() || m.cols() != dim()) {
    throw ValidationError("action of " + generator + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", expected " + std::to_string(dim()) + "x" + std::to_string(dim()));
  }
  actions_[*i] = std::move(m);
}

namespace {

std::string first_entry(const SparseMatrix& m) {
  for (const auto& [r, c, v] : m.triplets()) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ") = " + to_string(v);
  }
  return "";
}

}  // namespace

std::vector<std::string> validate(const Supermodule& m) {
  std::vector<std::string> out;
  const auto& gens = m.algebra().generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (const auto& [r, c, v] : m.actions()[g].triplets()) {
      bool changes = m.parity(r) != m.parity(c);
      if (changes != gens[g].odd) {
        out.push_back("parity: " + gens[g].name + " entry (" + std::to_string(r) + "," + std::to_string(c) + ") maps " +
                      (m.parity(c) == Parity::even ? "even" : "odd") + " to " + (m.parity(r) == Parity::even ? "even" : "odd"));
        break;
      }
    }
  }
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a; b < gens.size(); ++b) {
      const SparseMatrix& A = m.actions()[a];
      const SparseMatrix& B = m.actions()[b];
      bool both_odd = gens[a].odd && gens[b].odd;
      SparseMatrix lhs = both_odd ? A * B + B * A : A * B - B * A;
      SparseMatrix rhs(m.dim(), m.dim());
      if (auto br = m.algebra().bracket(gens[a].name, gens[b].name)) rhs = m.action(*br);
      SparseMatrix diff = lhs - rhs;
      if (!diff.is_zero()) {
        std::string rel = "[" + gens[a].name + "," + gens[b].name + "] = ";
        rel += m.algebra().bracket(gens[a].name, gens[b].name).value_or("0");
        out.push_back("relation " + rel + " fails at entry " + first_entry(diff));
      }
    }
  }
  return out;
}

SuperDim superdim(const Supermodule& m) {
  SuperDim d;
  for (auto p : m.parity()) (p == Parity::even ? d.even : d.odd)++;
  return d;
}

bool principal_block_check(const Supermodule& m) {
  for (const auto& t : m.algebra().even_generators()) {
    if (!m.action(t).is_zero()) return false;
  }
  return true;
}

SparseMatrix parity_sign(const std::vector<Parity>& parity) {
  std::vector<Rational> d;
  for (auto p : parity) d.emplace_back(p == Parity::even ? 1 : -1);
  return diagonal(d);
}

SparseMatrix point_operator(const Supermodule& m, const OddPoint& p) {
  if (p.algebra() != m.algebra()) throw AlgebraMismatch("point over " + p.algebra().to_string() + ", module over " + m.algebra().to_string());
  SparseMatrix out(m.dim(), m.dim());
  auto names = m.algebra().odd_generators();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_zero(p.coeffs()[i])) out = out + m.action(names[i]).scaled(p.coeffs()[i]);
  }
  return out;
}

std::vector<Chart> Chart::weak_charts(const AlgebraSpec& a) {
  if (a.is_exterior()) return {full()};
  std::vector<Chart> out;
  const std::size_t r = a.rank();
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<bool> use_y(r);
    for (std::size_t i = 0; i < r; ++i) use_y[i] = (mask >> i) & 1U;
    out.push_back(weak(use_y));
  }
  return out;
}

std::string Chart::describe(const AlgebraSpec& a) const {
  if (strong || a.is_exterior()) return "full";
  std::string out;
  for (const auto& g : chart_generators(a, *this)) out += (out.empty() ? "" : ",") + g;
  return "<" + out + ">";
}

std::vector<std::string> chart_generators(const AlgebraSpec& a, const Chart& c) {
  if (c.strong || a.is_exterior()) return a.odd_generators();
  if (c.use_y.size() != a.rank()) throw std::invalid_argument("weak chart does not match algebra rank");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.rank(); ++i) out.push_back((c.use_y[i] ? "y" : "x") + std::to_string(i + 1));
  return out;
}

OddPoint chart_point(const AlgebraSpec& a, const Chart& c, const std::vector<Rational>& coords) {
  auto gens = chart_generators(a, c);
  if (coords.size() != gens.size()) throw std::invalid_argument("chart coordinate count mismatch");
  std::vector<Rational> coeffs(a.odd_count());
  for (std::size_t i = 0; i < gens.size(); ++i) coeffs[*a.odd_index(gens[i])] = coords[i];
  return OddPoint(a, coeffs);
}

SymbolicOperator symbolic_operator(const Supermodule& m, const Chart& c) {
  const AlgebraSpec& a = m.algebra();
  auto gens = chart_generators(a, c);
  std::vector<SparseMatrix> coeffs;
  std::vector<std::string> names;
  auto coords = a.coordinate_names();
  for (const auto& g : gens) {
    coeffs.push_back(m.action(g));
    names.push_back(coords[*a.odd_index(g)]);
  }
  return SymbolicOperator(m.dim(), m.dim(), std::move(coeffs), std::move(names));
}

Supermodule restrict_to_subalgebra(const Supermodule& m, const std::vector<std::string>& generators) {
  const AlgebraSpec& a = m.algebra();
  std::vector<std::string> names;
  for (const auto& g : generators) {
    std::string c = a.canonical(g);
    if (std::find(names.begin(), names.end(), c) == names.end()) names.push_back(c);
  }
  if (names.empty()) throw NotSubalgebra("empty generator set");
  std::set<std::string> chosen(names.begin(), names.end());
  auto ordered = [&](const std::vector<std::string>& all) {
    std::vector<std::string> out;
    for (const auto& g : all) {
      if (chosen.count(g)) out.push_back(g);
    }
    return out;
  };

  if (a.is_exterior()) {
    auto odd = ordered(a.odd_generators());
    AlgebraSpec sub = AlgebraSpec::exterior(odd.size());
    std::map<std::string, SparseMatrix> act;
    for (std::size_t i = 0; i < odd.size(); ++i) act["z" + std::to_string(i + 1)] = m.action(odd[i]);
    return Supermodule(sub, m.parity(), act);
  }

  const std::size_t r = a.rank();
  std::vector<std::size_t> whole;
  bool any_even = false, pair = false;
  for (std::size_t i = 1; i <= r; ++i) {
    auto s = std::to_string(i);
    bool t = chosen.count("t" + s), x = chosen.count("x" + s), y = chosen.count("y" + s);
    any_even = any_even || t;
    if (x && y && !t) throw NotSubalgebra("[x" + s + ",y" + s + "] = t" + s + " is not in the generator set");
    if (x && y) pair = true;
    if (t && x && y) whole.push_back(i);
  }
  if (!any_even && !pair) {
    auto odd = ordered(a.odd_generators());
    std::map<std::string, SparseMatrix> act;
    for (std::size_t i = 0; i < odd.size(); ++i) act["z" + std::to_string(i + 1)] = m.action(odd[i]);
    return Supermodule(AlgebraSpec::exterior(odd.size()), m.parity(), act);
  }
  if (whole.size() * 3 != chosen.size()) {
    throw NotSubalgebra("supported subalgebras are whole factors {t_i,x_i,y_i} or odd sets without a pair x_i,y_i");
  }
  AlgebraSpec sub = AlgebraSpec::f(whole.size());
  std::map<std::string, SparseMatrix> act;
  for (std::size_t k = 0; k < whole.size(); ++k) {
    auto from = std::to_string(whole[k]), to = std::to_string(k + 1);
    for (const char* g : {"t", "x", "y"}) act[g + to] = m.action(g + from);
  }
  return Supermodule(sub, m.parity(), act);
}

Supermodule as_exterior(const Supermodule& m) {
  const AlgebraSpec& a = m.algebra();
  if (a.is_exterior()) return m;
  if (!principal_block_check(m)) {
    throw ConeViolation("strong-cone analysis over " + a.to_string() + " needs a principal-block module (all t_i act by zero)");
  }
  const std::size_t r = a.rank();
  std::map<std::string, SparseMatrix> act;
  for (std::size_t i = 1; i <= r; ++i) {
    act["z" + std::to_string(i)] = m.action("x" + std::to_string(i));
    act["z" + std::to_string(r + i)] = m.action("y" + std::to_string(i));
  }
  return Supermodule(AlgebraSpec::exterior(2 * r), m.parity(), act);
}

OddPoint as_exterior(const OddPoint& p) {
  if (p.algebra().is_exterior()) return p;
  return OddPoint(AlgebraSpec::exterior(2 * p.algebra().rank()), p.coeffs());
}

}  // namespace sjt
