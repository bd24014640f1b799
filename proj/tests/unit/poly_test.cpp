#include <gtest/gtest.h>

#include "sjt/constructions.hpp"
#include "sjt/error.hpp"
#include "sjt/rank_certificate.hpp"
#include "sjt/symbolic_operator.hpp"
#include "sjt/univariate.hpp"
#include "support/oracle.hpp"

namespace {

using sjt::Monomial;
using sjt::Poly;
using sjt::Rational;

struct Ring2 {
  Poly a = Poly::variable(2, 0);
  Poly b = Poly::variable(2, 1);
  Poly one = Poly::constant(2, 1);
};

TEST(Monomial, GrevlexOrder) {
  Monomial x = Monomial::variable(0), y = Monomial::variable(1), z = Monomial::variable(2);
  EXPECT_TRUE(sjt::grevlex_greater(x * x, x * y));
  EXPECT_TRUE(sjt::grevlex_greater(x * y, y * y));
  EXPECT_TRUE(sjt::grevlex_greater(y * y, x * z));  // grevlex, not lex
  EXPECT_TRUE(sjt::grevlex_greater(z, Monomial()));
  EXPECT_TRUE((x * y).divides(x * x * y));
  EXPECT_EQ((x * y).quotient_of(x * x * y), x);
  EXPECT_EQ((x * y).lcm(y * z), x * y * z);
  EXPECT_TRUE(x.coprime(y));
}

TEST(Poly, ExactArithmetic) {
  Ring2 r;
  Poly p = (r.a + r.b) * (r.a - r.b);
  EXPECT_EQ(p, r.a * r.a - r.b * r.b);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.total_degree(), 2u);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE((p + r.one).is_homogeneous());
  EXPECT_EQ(p.evaluate({Rational(3), Rational(1, 2)}), Rational(35, 4));
  EXPECT_EQ(p.to_string({"a", "b"}), "a^2 - b^2");
  EXPECT_EQ(p.leading().mono, Monomial::variable(0, 2));
}

TEST(Poly, ExactDivide) {
  Ring2 r;
  Poly f = r.a * r.a * r.b - r.b * r.b * r.b;
  EXPECT_EQ(sjt::exact_divide(f, r.a - r.b), r.a * r.b + r.b * r.b);
}

TEST(UPoly, GcdAndRoots) {
  using sjt::UPoly;
  UPoly p = UPoly::linear(2) * UPoly::linear(Rational(-1, 3));
  UPoly q = UPoly::linear(2) * UPoly::linear(5);
  EXPECT_EQ(sjt::gcd(p, q), UPoly::linear(2));
  auto roots = sjt::rational_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(p(roots[0]), 0);
  EXPECT_EQ(p(roots[1]), 0);
  UPoly i = sjt::interpolate({Rational(0), Rational(1), Rational(2)}, {Rational(1), Rational(2), Rational(5)});
  EXPECT_EQ(i, UPoly({Rational(1), Rational(0), Rational(1)}));
  auto d = sjt::divide(q, UPoly::linear(5));
  EXPECT_TRUE(d.remainder.is_zero());
}

sjt::SymbolicOperator kac_operator() {
  auto m = oracle::kac0();
  return sjt::symbolic_operator(sjt::as_exterior(m), sjt::Chart::full());
}

TEST(SymbolicOperator, KacModuleEntries) {
  auto d = kac_operator();
  ASSERT_EQ(d.nvars(), 2u);
  EXPECT_EQ(d.entry(1, 0), Poly::variable(2, 1));
  EXPECT_TRUE(d.entry(0, 1).is_zero());
}

TEST(SymbolicOperator, Evaluate) {
  auto d = kac_operator();
  EXPECT_TRUE(d.evaluate({Rational(1), Rational(0)}).is_zero());
  auto at_y = d.evaluate({Rational(0), Rational(1)});
  EXPECT_EQ(at_y.nnz(), 1u);
  EXPECT_EQ(at_y.at(1, 0), 1);
  EXPECT_TRUE(d.evaluate({Rational(0), Rational(0)}).is_zero());
}

TEST(Minors, KacModuleOneMinors) {
  auto i = sjt::minors_ideal(kac_operator(), 1);
  ASSERT_EQ(i.generators().size(), 1u);
  EXPECT_EQ(sjt::groebner_basis(i).generators(), std::vector<Poly>{Poly::variable(2, 1)});
}

TEST(Minors, ZeroOperator) {
  sjt::SymbolicOperator z(3, 3, {sjt::SparseMatrix(3, 3), sjt::SparseMatrix(3, 3)});
  auto i = sjt::minors_ideal(z, 1);
  EXPECT_TRUE(sjt::groebner_basis(i).generators().empty());
}

TEST(Minors, ZigzagTwoMinors) {
  Ring2 r;
  sjt::PolyMatrix m(2, 2, 3);
  m.at(0, 0) = r.a;
  m.at(0, 1) = r.b;
  m.at(1, 1) = r.a;
  m.at(1, 2) = r.b;
  auto i = sjt::groebner_basis(sjt::minors_ideal(m, 2));
  std::vector<Poly> expected = {r.b * r.b, r.a * r.b, r.a * r.a};
  EXPECT_EQ(i.generators(), expected);
}

TEST(Minors, DeterminantMatchesLaplace) {
  // 5x5 integer matrix exercises the elimination path; oracle is cofactor expansion.
  std::vector<std::vector<long>> v = {
      {2, -1, 0, 3, 1}, {1, 4, -2, 0, 5}, {0, 1, 1, -1, 2}, {3, 0, 2, 1, -4}, {-2, 5, 1, 0, 1}};
  sjt::PolyMatrix m(1, 5, 5);
  oracle::Dense d(5, std::vector<Rational>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      m.at(i, j) = Poly::constant(1, v[i][j]);
      d[i][j] = v[i][j];
    }
  EXPECT_EQ(sjt::determinant(m), Poly::constant(1, oracle::laplace_det(d)));
  EXPECT_EQ(sjt::dense_determinant(d), oracle::laplace_det(d));
}

TEST(Minors, CountCap) {
  sjt::Limits tight;
  tight.max_minors = 2;
  Ring2 r;
  sjt::PolyMatrix m(2, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = (i + j) % 2 ? r.a : r.b;
  EXPECT_THROW(sjt::minors_ideal(m, 2, tight), sjt::ResourceLimit);
  EXPECT_EQ(sjt::minor_count(3, 3, 2), 9u);
  EXPECT_EQ(sjt::binomial(6, 3), 20u);
}

}  // namespace
