#include <gtest/gtest.h>

#include "sjt/error.hpp"
#include "sjt/groebner.hpp"

namespace {

using sjt::Ideal;
using sjt::Poly;
using sjt::Rational;

struct Ring {
  explicit Ring(std::size_t n) : n(n) {}
  Poly v(std::size_t i) const { return Poly::variable(n, i); }
  Poly c(long k) const { return Poly::constant(n, k); }
  std::size_t n;
};

TEST(Groebner, PrincipalIdeal) {
  Ring r(1);
  Poly x = r.v(0);
  EXPECT_EQ(sjt::groebner_basis(1, {x * x}), std::vector<Poly>{x * x});
}

TEST(Groebner, AlreadyReduced) {
  Ring r(2);
  std::vector<Poly> g = {r.v(1), r.v(0)};
  EXPECT_EQ(sjt::groebner_basis(2, g), g);
  EXPECT_EQ(sjt::groebner_basis(2, {r.v(0), r.v(1)}), g);
}

TEST(Groebner, HandExample) {
  Ring r(2);
  Poly x = r.v(0), y = r.v(1);
  std::vector<Poly> gens = {x * x - r.c(1), x * y - r.c(1)};
  auto basis = sjt::groebner_basis(2, gens);
  std::vector<Poly> expected = {y * y - r.c(1), x - y};
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_TRUE((basis[0] == expected[0] && basis[1] == expected[1]) ||
              (basis[0] == expected[1] && basis[1] == expected[0]));
  for (const auto& g : gens) EXPECT_TRUE(sjt::reduce(g, basis).is_zero());
}

TEST(Groebner, Idempotent) {
  Ring r(3);
  Poly x = r.v(0), y = r.v(1), z = r.v(2);
  auto b1 = sjt::groebner_basis(3, {x * y - z * z, y * z - x, x * x * z - y});
  auto b2 = sjt::groebner_basis(3, b1);
  EXPECT_EQ(b1, b2);
}

TEST(Groebner, UnitAndZeroIdeals) {
  Ring r(2);
  Poly x = r.v(0);
  EXPECT_EQ(sjt::groebner_basis(2, {x, x - r.c(1)}), std::vector<Poly>{r.c(1)});
  EXPECT_TRUE(sjt::groebner_basis(2, {}).empty());
  EXPECT_TRUE(Ideal(2, {x, x + r.c(2)}).is_unit());
}

TEST(Groebner, SpairLimit) {
  Ring r(3);
  Poly x = r.v(0), y = r.v(1), z = r.v(2);
  sjt::Limits tight;
  tight.max_spairs = 1;
  EXPECT_THROW(sjt::groebner_basis(3, {x * x * y - z * z * z, y * y * z - x * x * x, z * z * x - y * y * y}, tight),
               sjt::ResourceLimit);
}

TEST(NormalForm, Examples) {
  Ring r(2);
  Poly x = r.v(0), y = r.v(1);
  EXPECT_TRUE(sjt::normal_form(x * x, Ideal(2, {x})).is_zero());
  EXPECT_EQ(sjt::normal_form(y, Ideal(2, {x})), y);
  EXPECT_EQ(sjt::normal_form(x * y, Ideal(2, {x - y})), y * y);
  EXPECT_TRUE(sjt::contains(Ideal(2, {x - y}), x * x - y * y));
}

TEST(RadicalMembership, Examples) {
  Ring r(2);
  Poly x = r.v(0), y = r.v(1);
  EXPECT_TRUE(sjt::radical_membership(x, Ideal(2, {x * x})));
  EXPECT_FALSE(sjt::radical_membership(y, Ideal(2, {x * x})));
  EXPECT_TRUE(sjt::radical_membership(x + y, Ideal(2, {x * x, y * y})));
}

TEST(RadicalMembership, CubeOfSumInIdeal) {
  Ring r(2);
  Poly x = r.v(0), y = r.v(1);
  Poly s = x + y;
  EXPECT_TRUE(sjt::contains(Ideal(2, {x * x, y * y}), s * s * s));
  EXPECT_FALSE(sjt::contains(Ideal(2, {x * x, y * y}), s));
}

TEST(VanishesOnlyAtOrigin, Examples) {
  Ring r(2);
  Poly a = r.v(0), b = r.v(1);
  for (auto mode : {sjt::OriginTest::automatic, sjt::OriginTest::rabinowitsch}) {
    EXPECT_TRUE(sjt::vanishes_only_at_origin(Ideal(2, {a, b}), sjt::Limits{}, mode));
    EXPECT_FALSE(sjt::vanishes_only_at_origin(Ideal(2, {b}), sjt::Limits{}, mode));
    EXPECT_TRUE(sjt::vanishes_only_at_origin(Ideal(2, {a * a, a * b, b * b}), sjt::Limits{}, mode));
  }
}

TEST(VanishesOnlyAtOrigin, Subsets) {
  Ring r(3);
  Poly a = r.v(0), b = r.v(1), c = r.v(2);
  Ideal i(3, {a * a, b * c});
  EXPECT_TRUE(sjt::vanishes_only_at_origin(i, std::vector<std::size_t>{0}));
  EXPECT_FALSE(sjt::vanishes_only_at_origin(i, std::vector<std::size_t>{1}));
}

TEST(Saturation, DegreeOfMonomialIdeal) {
  Ring r(2);
  Poly a = r.v(0), b = r.v(1);
  EXPECT_EQ(sjt::saturation_degree(2, {a * a, a * b, b * b}, 1, 6), 2u);
  EXPECT_EQ(sjt::saturation_degree(2, {a * a, b * b}, 1, 6), 3u);
  EXPECT_FALSE(sjt::saturation_degree(2, {a * a, a * b}, 1, 6).has_value());
}

TEST(Modular, Reduction) {
  const auto p = sjt::kModularPrimes[0];
  EXPECT_EQ(sjt::mod_reduce(Rational(-1), p), p - 1);
  EXPECT_EQ(sjt::mod_reduce(Rational(1, 2), p) * 2 % p, 1u);
  EXPECT_EQ(sjt::mod_pow(3, p - 1, p), 1u);
  EXPECT_THROW(sjt::mod_reduce(Rational(1, static_cast<long>(p)), p), std::domain_error);
}

TEST(Monomials, OfDegree) {
  auto m = sjt::monomials_of_degree(3, 2);
  EXPECT_EQ(m.size(), 6u);
  for (std::size_t i = 1; i < m.size(); ++i) EXPECT_TRUE(sjt::grevlex_greater(m[i - 1], m[i]));
}

}  // namespace
