#include <gtest/gtest.h>

#include "sjt/constructions.hpp"
#include "sjt/error.hpp"
#include "sjt/supermodule.hpp"
#include "support/oracle.hpp"

namespace {

using sjt::AlgebraSpec;
using sjt::OddPoint;
using sjt::Parity;
using sjt::Rational;
using sjt::SparseMatrix;
using sjt::Supermodule;

TEST(AlgebraSpec, GeneratorTables) {
  auto sl = AlgebraSpec::sl11();
  EXPECT_EQ(sl.odd_generators(), (std::vector<std::string>{"x1", "y1"}));
  EXPECT_EQ(sl.even_generators(), std::vector<std::string>{"t1"});
  EXPECT_EQ(sl.canonical("x"), "x1");
  EXPECT_EQ(sl.bracket("x1", "y1"), std::optional<std::string>("t1"));
  EXPECT_EQ(sl.bracket("y1", "x1"), std::optional<std::string>("t1"));
  EXPECT_FALSE(sl.bracket("x1", "x1").has_value());

  auto f2 = AlgebraSpec::f(2);
  EXPECT_EQ(f2.odd_generators(), (std::vector<std::string>{"x1", "x2", "y1", "y2"}));
  EXPECT_FALSE(f2.bracket("x1", "y2").has_value());
  EXPECT_EQ(f2.coordinate_names(), (std::vector<std::string>{"a1", "a2", "b1", "b2"}));

  auto e3 = AlgebraSpec::exterior(3);
  EXPECT_EQ(e3.odd_count(), 3u);
  EXPECT_FALSE(e3.bracket("z1", "z2").has_value());
  EXPECT_THROW(e3.canonical("x1"), sjt::UnknownGenerator);
}

TEST(AlgebraSpec, Parse) {
  EXPECT_EQ(AlgebraSpec::parse("sl11"), AlgebraSpec::sl11());
  EXPECT_EQ(AlgebraSpec::parse("f2"), AlgebraSpec::f(2));
  EXPECT_EQ(AlgebraSpec::parse("f_3"), AlgebraSpec::f(3));
  EXPECT_EQ(AlgebraSpec::parse("exterior(4)"), AlgebraSpec::exterior(4));
  EXPECT_EQ(AlgebraSpec::parse(AlgebraSpec::f(2).to_string()), AlgebraSpec::f(2));
}

TEST(OddPoint, WeakCone) {
  auto sl = AlgebraSpec::sl11();
  EXPECT_TRUE(oracle::point(sl, {1, 0}).in_weak_cone());
  EXPECT_FALSE(oracle::point(sl, {1, 1}).in_weak_cone());
  auto f2 = AlgebraSpec::f(2);
  EXPECT_TRUE(oracle::point(f2, {1, 0, 0, 1}).in_weak_cone());
  EXPECT_TRUE(oracle::point(AlgebraSpec::exterior(2), {1, 1}).in_weak_cone());
  EXPECT_EQ(oracle::point(f2, {2, 0, 0, -1}).to_string(), "2*x1 - y2");
  EXPECT_EQ(OddPoint::zero(sl).to_string(), "0");
}

TEST(Validate, KacModuleIsValid) { EXPECT_TRUE(sjt::validate(oracle::kac0()).empty()); }

TEST(Validate, KacModuleWithIdentityT) {
  Supermodule m = oracle::kac0();
  m.set_action("t1", SparseMatrix::identity(2));
  auto v = sjt::validate(m);
  ASSERT_FALSE(v.empty());
  bool names_bracket = false;
  for (const auto& s : v) names_bracket |= s.find("x1") != std::string::npos && s.find("y1") != std::string::npos;
  EXPECT_TRUE(names_bracket);
}

TEST(Validate, SquareNotZero) {
  // z1 maps e0 -> e1 -> e2 on an even/odd/even space: parity fine, square nonzero.
  SparseMatrix z(3, 3);
  z.set(1, 0, 1);
  z.set(2, 1, 1);
  Supermodule m(AlgebraSpec::exterior(2), {Parity::even, Parity::odd, Parity::even}, {{"z1", z}});
  auto v = sjt::validate(m);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v.front().find("z1"), std::string::npos);
}

TEST(Validate, ParityViolation) {
  SparseMatrix z(2, 2);
  z.set(1, 0, 1);
  Supermodule m(AlgebraSpec::exterior(1), {Parity::even, Parity::even}, {{"z1", z}});
  EXPECT_FALSE(sjt::validate(m).empty());
}

TEST(Validate, ShapeMismatchThrows) {
  EXPECT_THROW(Supermodule(AlgebraSpec::exterior(1), {Parity::even}, {{"z1", SparseMatrix(2, 2)}}),
               sjt::ValidationError);
  EXPECT_THROW(Supermodule(AlgebraSpec::exterior(1), {Parity::even}, {{"q", SparseMatrix(1, 1)}}),
               sjt::UnknownGenerator);
}

TEST(PointOperator, KacModule) {
  auto k = oracle::kac0();
  auto sl = AlgebraSpec::sl11();
  EXPECT_TRUE(sjt::point_operator(k, oracle::point(sl, {1, 0})).is_zero());
  EXPECT_EQ(sjt::point_operator(k, oracle::point(sl, {0, 1})), SparseMatrix::unit(2, 2, 1, 0));
  EXPECT_TRUE(sjt::point_operator(k, OddPoint::zero(sl)).is_zero());
}

TEST(SymbolicOperatorOfModule, KacModuleStrong) {
  auto d = sjt::symbolic_operator(sjt::as_exterior(oracle::kac0()), sjt::Chart::full());
  EXPECT_EQ(d.nvars(), 2u);
  EXPECT_TRUE(d.coefficient(0).is_zero());
  EXPECT_EQ(d.coefficient(1), SparseMatrix::unit(2, 2, 1, 0));
}

TEST(SymbolicOperatorOfModule, ExampleThreeModule) {
  auto m = oracle::load("ex3_m");
  auto d = sjt::symbolic_operator(sjt::as_exterior(m), sjt::Chart::full());
  SparseMatrix x(4, 4), y(4, 4);
  x.set(1, 0, 1);
  x.set(2, 3, 1);
  y.set(2, 0, 1);
  EXPECT_EQ(d.coefficient(0), x);
  EXPECT_EQ(d.coefficient(1), y);
}

TEST(SymbolicOperatorOfModule, WeakChartsOverExterior) {
  auto e = AlgebraSpec::exterior(2);
  auto charts = sjt::Chart::weak_charts(e);
  ASSERT_EQ(charts.size(), 1u);
  auto w = sjt::w_module(e, 3);
  auto weak = sjt::symbolic_operator(w, charts[0]);
  auto strong = sjt::symbolic_operator(w, sjt::Chart::full());
  EXPECT_EQ(weak.coefficients(), strong.coefficients());
  EXPECT_EQ(sjt::Chart::weak_charts(AlgebraSpec::f(2)).size(), 4u);
}

TEST(Restrict, ForgetsFactor) {
  auto f2 = AlgebraSpec::f(2);
  auto m = sjt::from_exterior(sjt::omega(sjt::trivial(AlgebraSpec::exterior(4), Parity::even), 1), f2);
  auto r = sjt::restrict_to_subalgebra(m, {"t1", "x1", "y1"});
  EXPECT_EQ(r.algebra(), AlgebraSpec::sl11());
  EXPECT_EQ(r.dim(), m.dim());
  EXPECT_EQ(r.action("x1"), m.action("x1"));
  EXPECT_TRUE(sjt::validate(r).empty());
}

TEST(Restrict, ExteriorSubset) {
  auto m = sjt::free_module(AlgebraSpec::exterior(4), 1, Parity::even);
  auto r = sjt::restrict_to_subalgebra(m, {"z1"});
  EXPECT_EQ(r.algebra(), AlgebraSpec::exterior(1));
  EXPECT_EQ(r.action("z1"), m.action("z1"));
  auto r2 = sjt::restrict_to_subalgebra(m, {"z3", "z2"});
  EXPECT_EQ(r2.algebra(), AlgebraSpec::exterior(2));
  EXPECT_EQ(r2.action("z1"), m.action("z2"));
}

TEST(Restrict, NotClosed) {
  auto m = oracle::kac0();
  EXPECT_THROW(sjt::restrict_to_subalgebra(m, {"x1", "y1"}), sjt::NotSubalgebra);
  EXPECT_NO_THROW(sjt::restrict_to_subalgebra(m, {"x1"}));
}

TEST(Superdim, Examples) {
  EXPECT_EQ(sjt::superdim(oracle::kac0()), (sjt::SuperDim{1, 1}));
  EXPECT_EQ(sjt::superdim(oracle::kac0()).sdim(), 0);
  EXPECT_EQ(sjt::superdim(sjt::trivial(AlgebraSpec::sl11(), Parity::even)).sdim(), 1);
  auto reg = oracle::exterior2_regular();
  EXPECT_EQ(sjt::superdim(reg), (sjt::SuperDim{2, 2}));
  EXPECT_EQ(sjt::to_string(sjt::SuperDim{2, 1}), "(2|1)");
}

TEST(PrincipalBlock, Examples) {
  EXPECT_TRUE(sjt::principal_block_check(oracle::kac0()));
  SparseMatrix x(2, 2), y(2, 2);
  x.set(0, 1, 1);
  y.set(1, 0, 1);
  Supermodule typical(AlgebraSpec::sl11(), {Parity::even, Parity::odd},
                      {{"t1", SparseMatrix::identity(2)}, {"x1", x}, {"y1", y}});
  EXPECT_TRUE(sjt::validate(typical).empty());
  EXPECT_FALSE(sjt::principal_block_check(typical));
  EXPECT_TRUE(sjt::principal_block_check(sjt::zero_module(AlgebraSpec::sl11())));
  EXPECT_THROW(sjt::as_exterior(typical), sjt::ConeViolation);
}

TEST(AsExterior, RoundTrip) {
  auto m = oracle::load("ex3_sum");
  auto e = sjt::as_exterior(m);
  EXPECT_EQ(e.algebra(), AlgebraSpec::exterior(2));
  EXPECT_EQ(e.action("z2"), m.action("y1"));
  EXPECT_EQ(sjt::from_exterior(e, AlgebraSpec::sl11()), m);
  auto p = sjt::as_exterior(oracle::point(AlgebraSpec::sl11(), {2, 3}));
  EXPECT_EQ(p, oracle::point(AlgebraSpec::exterior(2), {2, 3}));
}

}  // namespace
