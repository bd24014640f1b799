#include "sjt/algebra.hpp"

#include <regex>

#include "sjt/error.hpp"

namespace sjt {

AlgebraSpec::AlgebraSpec(AlgebraKind kind, std::size_t rank) : kind_(kind), rank_(rank) {
  if (rank == 0) throw ValidationError("algebra rank must be at least 1");
  if (kind == AlgebraKind::exterior) {
    for (std::size_t i = 1; i <= rank; ++i) gens_.push_back({"z" + std::to_string(i), true});
  } else {
    for (std::size_t i = 1; i <= rank; ++i) gens_.push_back({"t" + std::to_string(i), false});
    for (std::size_t i = 1; i <= rank; ++i) gens_.push_back({"x" + std::to_string(i), true});
    for (std::size_t i = 1; i <= rank; ++i) gens_.push_back({"y" + std::to_string(i), true});
  }
}

AlgebraSpec AlgebraSpec::sl11() { return AlgebraSpec(AlgebraKind::sl11, 1); }

AlgebraSpec AlgebraSpec::f(std::size_t r) { return AlgebraSpec(r == 1 ? AlgebraKind::sl11 : AlgebraKind::f, r); }

AlgebraSpec AlgebraSpec::exterior(std::size_t s) { return AlgebraSpec(AlgebraKind::exterior, s); }

AlgebraSpec AlgebraSpec::parse(const std::string& text) {
  static const std::regex f_re(R"(f_?([0-9]+))");
  static const std::regex ext_re(R"(exterior\(\s*([0-9]+)\s*\))");
  std::smatch m;
  try {
    if (text == "sl11") return sl11();
    if (std::regex_match(text, m, f_re)) return f(std::stoul(m[1]));
    if (std::regex_match(text, m, ext_re)) return exterior(std::stoul(m[1]));
  } catch (const std::out_of_range&) {
  }
  throw ParseError(0, "unknown algebra '" + text + "' (expected sl11, f<r> or exterior(<s>))");
}

std::vector<std::string> AlgebraSpec::odd_generators() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) {
    if (g.odd) out.push_back(g.name);
  }
  return out;
}

std::vector<std::string> AlgebraSpec::even_generators() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) {
    if (!g.odd) out.push_back(g.name);
  }
  return out;
}

std::optional<std::size_t> AlgebraSpec::find(const std::string& name) const {
  std::string n = name;
  if (kind_ == AlgebraKind::sl11 && (n == "t" || n == "x" || n == "y")) n += "1";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == n) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> AlgebraSpec::odd_index(const std::string& name) const {
  auto i = find(name);
  if (!i || !gens_[*i].odd) return std::nullopt;
  return is_exterior() ? *i : *i - rank_;
}

std::string AlgebraSpec::canonical(const std::string& name) const {
  auto i = find(name);
  if (!i) throw UnknownGenerator("unknown generator '" + name + "' for algebra " + to_string());
  return gens_[*i].name;
}

std::optional<std::string> AlgebraSpec::bracket(const std::string& u, const std::string& v) const {
  if (is_exterior()) return std::nullopt;
  auto i = find(u), j = find(v);
  if (!i || !j) return std::nullopt;
  std::size_t a = *i, b = *j;
  if (a > b) std::swap(a, b);
  // x_k at rank + k - 1, y_k at 2 rank + k - 1
  if (a >= rank_ && a < 2 * rank_ && b == a + rank_) return "t" + std::to_string(a - rank_ + 1);
  return std::nullopt;
}

std::string AlgebraSpec::to_string() const {
  switch (kind_) {
    case AlgebraKind::sl11:
      return "sl11";
    case AlgebraKind::f:
      return "f" + std::to_string(rank_);
    case AlgebraKind::exterior:
      return "exterior(" + std::to_string(rank_) + ")";
  }
  return "";
}

std::vector<std::string> AlgebraSpec::coordinate_names() const {
  std::vector<std::string> out;
  if (is_exterior()) {
    for (std::size_t i = 1; i <= rank_; ++i) out.push_back("c" + std::to_string(i));
  } else {
    for (std::size_t i = 1; i <= rank_; ++i) out.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i <= rank_; ++i) out.push_back("b" + std::to_string(i));
  }
  return out;
}

OddPoint::OddPoint(AlgebraSpec algebra, std::vector<Rational> coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_.odd_count()) throw std::invalid_argument("point arity does not match algebra");
}

OddPoint OddPoint::zero(const AlgebraSpec& algebra) { return OddPoint(algebra, std::vector<Rational>(algebra.odd_count())); }

OddPoint OddPoint::unit(const AlgebraSpec& algebra, const std::string& generator) {
  auto i = algebra.odd_index(generator);
  if (!i) throw UnknownGenerator("'" + generator + "' is not an odd generator of " + algebra.to_string());
  OddPoint p = zero(algebra);
  p.coeffs_[*i] = 1;
  return p;
}

const Rational& OddPoint::coeff(const std::string& generator) const {
  auto i = algebra_.odd_index(generator);
  if (!i) throw UnknownGenerator("'" + generator + "' is not an odd generator of " + algebra_.to_string());
  return coeffs_[*i];
}

bool OddPoint::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!sjt::is_zero(c)) return false;
  }
  return true;
}

bool OddPoint::in_weak_cone() const {
  if (algebra_.is_exterior()) return true;
  const std::size_t r = algebra_.rank();
  for (std::size_t i = 0; i < r; ++i) {
    if (!sjt::is_zero(coeffs_[i]) && !sjt::is_zero(coeffs_[r + i])) return false;
  }
  return true;
}

OddPoint OddPoint::scaled(const Rational& c) const {
  OddPoint p = *this;
  for (auto& v : p.coeffs_) v *= c;
  return p;
}

std::string OddPoint::to_string() const {
  auto names = algebra_.odd_generators();
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sjt::is_zero(c)) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (a != 1) out += sjt::to_string(a) + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace sjt
