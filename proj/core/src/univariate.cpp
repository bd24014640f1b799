#include "sjt/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace sjt {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && sjt::is_zero(c_.back())) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> r = c_;
  Rational l = lead();
  for (auto& x : r) x /= l;
  return UPoly(std::move(r));
}

Rational UPoly::operator()(const Rational& x) const {
  Rational v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

UDivision divide(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  std::vector<Rational> q(std::max(0, a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[k + db] / b.lead();
    q[k] = c;
    if (sjt::is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) { return extended_gcd(a, b).g; }

Bezout extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0 = UPoly::constant(1), s1, t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto d = divide(r0, r1);
    UPoly r2 = d.remainder, s2 = s0 - d.quotient * s1, t2 = t0 - d.quotient * t1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {s0, t0, r0};
  Rational l = r0.lead();
  UPoly inv = UPoly::constant(1 / l);
  return {s0 * inv, t0 * inv, r0 * inv};
}

namespace {

std::vector<Integer> divisors(Integer n, unsigned long limit) {
  std::vector<Integer> out;
  n = abs(n);
  if (n == 0) return out;
  for (unsigned long d = 1; d <= limit && Integer(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(Integer(d));
      Integer other = n / d;
      if (other != d) out.push_back(other);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p, unsigned long divisor_limit) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  // clear denominators
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> ic;
  for (const auto& c : p.coeffs()) ic.push_back(Integer(c * l));
  std::size_t low = 0;
  while (ic[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (static_cast<int>(low) == p.degree()) return roots;
  auto num = divisors(ic[low], divisor_limit);
  auto den = divisors(ic.back(), divisor_limit);
  for (const auto& a : num) {
    for (const auto& b : den) {
      for (int sign : {1, -1}) {
        Rational r(a * sign, b);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (sjt::is_zero(p(r))) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
  // Newton divided differences
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  }
  UPoly result;
  for (std::size_t k = n; k-- > 0;) {
    result = result * UPoly::linear(xs[k]) + UPoly::constant(dd[k]);
  }
  return result;
}

}  // namespace sjt
