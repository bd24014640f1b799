#include "sjt/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sjt {

Monomial Monomial::variable(std::size_t i, unsigned power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw std::out_of_range("too many polynomial variables");
  if (e > 0xFFFF) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = static_cast<unsigned>(exps_[i]) + o.exps_[i];
    if (e > 0xFFFF) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<std::uint16_t>(o.exps_[i] - exps_[i]);
  r.degree_ = o.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  }
  return true;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Poly::Poly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVariables) throw std::out_of_range("too many polynomial variables");
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (!sjt::is_zero(c)) p.terms_.push_back({Monomial(), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("variable index");
  Poly p(nvars);
  p.terms_.push_back({Monomial::variable(i), Rational(1)});
  return p;
}

Poly Poly::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  Poly p(nvars);
  if (!sjt::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Poly p(nvars);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (sjt::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!sjt::is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

void Poly::add_multiple(const Rational& c, const Monomial& m, const Poly& o) {
  if (sjt::is_zero(c) || o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = b->mono * m;
    if (a == terms_.end() || grevlex_greater(bm, a->mono)) {
      out.push_back({bm, c * b->coeff});
      ++b;
    } else if (grevlex_greater(a->mono, bm)) {
      out.push_back(std::move(*a++));
    } else {
      Rational v = a->coeff + c * b->coeff;
      if (!sjt::is_zero(v)) out.push_back({a->mono, std::move(v)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Term Poly::take_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  add_multiple(Rational(1), Monomial(), o);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_multiple(Rational(-1), Monomial(), o);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  if (terms_.empty() || o.terms_.empty()) return Poly(nvars_);
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) all.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(std::max(nvars_, o.nvars_), std::move(all));
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::scaled(const Rational& c) const {
  Poly r(nvars_);
  if (sjt::is_zero(c)) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::times_term(const Monomial& m, const Rational& c) const {
  Poly r(nvars_);
  if (sjt::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / terms_.front().coeff);
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point arity does not match ring");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_ && !sjt::is_zero(v); ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Poly Poly::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink a ring");
  Poly r(nvars);
  r.terms_ = terms_;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = c == 1;
    bool constant = t.mono.degree() == 0;
    if (!unit || constant) out << sjt::to_string(c);
    bool need_star = !unit || constant;
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      if (need_star) out << "*";
      out << (i < names.size() ? names[i] : "v" + std::to_string(i + 1));
      if (e > 1) out << "^" << e;
      need_star = true;
    }
  }
  return out.str();
}

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly rem = a;
  std::vector<Term> quotient;
  const Term& lead = b.leading();
  while (!rem.is_zero()) {
    const Term& t = rem.leading();
    if (!lead.mono.divides(t.mono)) throw std::domain_error("inexact polynomial division");
    Monomial m = lead.mono.quotient_of(t.mono);
    Rational c = t.coeff / lead.coeff;
    quotient.push_back({m, c});
    rem.add_multiple(-c, m, b);
  }
  return Poly::from_terms(a.nvars(), std::move(quotient));
}

std::vector<Poly> linear_basis(const std::vector<Poly>& polys) {
  std::vector<Poly> basis;  // sorted by decreasing leading monomial, each monic
  for (const auto& p0 : polys) {
    Poly p = p0;
    bool changed = true;
    while (!p.is_zero() && changed) {
      changed = false;
      for (const auto& b : basis) {
        if (p.is_zero()) break;
        // eliminate every basis leading monomial that appears in p
        for (const auto& t : p.terms()) {
          if (t.mono == b.leading().mono) {
            Rational c = t.coeff;
            p.add_multiple(-c, Monomial(), b);
            changed = true;
            break;
          }
        }
      }
    }
    if (p.is_zero()) continue;
    p = p.monic();
    // clear p's leading monomial from existing rows to keep a reduced echelon form
    for (auto& b : basis) {
      for (const auto& t : b.terms()) {
        if (t.mono == p.leading().mono) {
          Rational c = t.coeff;
          b.add_multiple(-c, Monomial(), p);
          break;
        }
      }
    }
    basis.push_back(std::move(p));
    std::sort(basis.begin(), basis.end(), [](const Poly& x, const Poly& y) { return grevlex_greater(x.leading().mono, y.leading().mono); });
  }
  return basis;
}

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace sjt
