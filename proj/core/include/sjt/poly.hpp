#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sjt/rational.hpp"

namespace sjt {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector under graded reverse lexicographic order; variable 0 is
/// the largest variable.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  void set(std::size_t i, unsigned e);

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_;
  unsigned degree_ = 0;
};

/// Strict grevlex comparison: true when a is larger than b.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Multivariate polynomial over the rationals in a fixed number of
/// variables. Terms are sorted by decreasing grevlex order with no zero
/// coefficients, so structural equality is polynomial equality.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0);
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(std::size_t nvars, const Monomial& m, const Rational& c);
  /// Any order, duplicates allowed; result is canonical.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly scaled(const Rational& c) const;
  Poly times_term(const Monomial& m, const Rational& c) const;
  /// this += c * m * o  (the inner step of every reduction)
  void add_multiple(const Rational& c, const Monomial& m, const Poly& o);
  /// Removes and returns the leading term.
  Term take_leading();
  Poly monic() const;

  Rational evaluate(const std::vector<Rational>& point) const;
  /// Same polynomial viewed in a ring with more variables appended.
  Poly extended(std::size_t nvars) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);

/// Basis of the Q-span of the given polynomials in echelon form over their
/// leading monomials (so the generated ideal is unchanged).
std::vector<Poly> linear_basis(const std::vector<Poly>& polys);

/// Default names: given prefix and 1-based index.
std::vector<std::string> indexed_names(const std::string& prefix, std::size_t n);

}  // namespace sjt
