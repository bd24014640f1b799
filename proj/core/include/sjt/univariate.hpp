#pragma once

#include <vector>

#include "sjt/rational.hpp"

namespace sjt {

/// Dense univariate polynomial over Q, coefficients from degree 0 upwards,
/// no trailing zeros (the zero polynomial is empty).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  /// t - root
  static UPoly linear(const Rational& root) { return UPoly({-root, Rational(1)}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly monic() const;
  Rational operator()(const Rational& x) const;
  bool operator==(const UPoly& o) const = default;

 private:
  std::vector<Rational> c_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};
UDivision divide(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// s, t with s a + t b = gcd(a, b).
struct Bezout {
  UPoly s, t, g;
};
Bezout extended_gcd(const UPoly& a, const UPoly& b);

/// Distinct rational roots, found through the rational root test on the
/// integer-scaled polynomial. Candidates are limited to divisors below
/// divisor_limit of the extreme coefficients; roots beyond that are missed.
std::vector<Rational> rational_roots(const UPoly& p, unsigned long divisor_limit = 1000000);

/// Interpolates the polynomial of degree < points.size() through the values.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace sjt
