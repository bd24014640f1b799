#include <gtest/gtest.h>

#include "sjt/bundle.hpp"
#include "sjt/constructions.hpp"
#include "sjt/error.hpp"
#include "sjt/groebner.hpp"
#include "support/oracle.hpp"

namespace {

using sjt::AlgebraSpec;
using sjt::BundleVerdict;
using sjt::Parity;
using sjt::Poly;

const AlgebraSpec kE2 = AlgebraSpec::exterior(2);

// Oracle for theta_d: M (x) S^d -> M (x) S^(d+1) built directly from the
// actions, monomials of degree d indexed by exponent of Y_1.
std::pair<std::size_t, std::size_t> theta_rank_two_vars(const sjt::Supermodule& m, int d) {
  const std::size_t n = m.dim();
  const std::size_t dom = n * (d + 1), cod = n * (d + 2);
  oracle::Dense t = oracle::zeros(cod, dom);
  auto z1 = oracle::dense(m.action("z1")), z2 = oracle::dense(m.action("z2"));
  for (std::size_t j = 0; j < n; ++j)
    for (int e = 0; e <= d; ++e)  // basis e_j (x) Y1^e Y2^(d-e)
      for (std::size_t i = 0; i < n; ++i) {
        t[i * (d + 2) + e + 1][j * (d + 1) + e] += z1[i][j];  // times Y1
        t[i * (d + 2) + e][j * (d + 1) + e] += z2[i][j];      // times Y2
      }
  std::size_t r = oracle::rank(t);
  return {dom - r, r};
}

TEST(Theta, TrivialModule) {
  auto t = sjt::build_theta(sjt::trivial(kE2, Parity::even));
  EXPECT_EQ(t.matrix.rows(), 1u);
  EXPECT_TRUE(t.matrix.is_zero());
}

TEST(Theta, KacModule) {
  auto t = sjt::build_theta(sjt::kac0());
  EXPECT_EQ(t.matrix.entry(1, 0), Poly::variable(2, 1));
  EXPECT_EQ(t.matrix.names(), (std::vector<std::string>{"Y1", "Y2"}));
}

TEST(Theta, SquaresToZero) {
  for (const auto& name : {"free_ext2", "w5", "omega_ext4_1", "ex3_sum"}) {
    auto t = sjt::build_theta(oracle::load(name));
    EXPECT_TRUE(sjt::theta_squared(t).is_zero()) << name;
  }
}

TEST(Theta, EvaluatesToPointOperator) {
  auto m = oracle::load("omega_ext2_-2");
  auto t = sjt::build_theta(m);
  auto p = oracle::point(kE2, {3, -2});
  EXPECT_EQ(t.matrix.evaluate(p.coeffs()), sjt::point_operator(m, p));
}

TEST(Fibers, Examples) {
  auto w3 = sjt::w_module(kE2, 3);
  for (const auto& f : sjt::sample_fibers(w3, 100, 4)) {
    EXPECT_EQ(f.f1, (sjt::SuperDim{1, 0}));
    EXPECT_EQ(f.f2, 2u);
  }
  auto k = sjt::fiber_functors(sjt::trivial(kE2, Parity::even), oracle::point(kE2, {1, 2}));
  EXPECT_EQ(k.f1, (sjt::SuperDim{1, 0}));
  EXPECT_EQ(k.f2, 0u);
  auto f = sjt::fiber_functors(oracle::exterior2_regular(), oracle::point(kE2, {-1, 2}));
  EXPECT_EQ(f.f1, (sjt::SuperDim{0, 0}));
  EXPECT_EQ(f.f2, 2u);
  EXPECT_THROW(sjt::fiber_functors(w3, sjt::OddPoint::zero(kE2)), sjt::ZeroPoint);
}

TEST(Fibers, RankNullity) {
  auto m = oracle::load("omega_ext4_-2");
  for (const auto& f : sjt::sample_fibers(m, 10, 2)) EXPECT_EQ(2 * f.f2 + f.f1.dim(), m.dim());
}

TEST(CertifyBundle, Examples) {
  auto w = sjt::certify_bundle(sjt::w_module(kE2, 3));
  ASSERT_EQ(w.verdict, BundleVerdict::bundle);
  EXPECT_EQ(w.f1, (sjt::SuperDim{1, 0}));
  EXPECT_EQ(w.f2, 2u);
  auto k = sjt::certify_bundle(sjt::kac0());
  ASSERT_EQ(k.verdict, BundleVerdict::not_bundle);
  ASSERT_TRUE(k.witness1 && k.witness2);
  EXPECT_NE(k.witness1->f1, k.witness2->f1);
  auto o = sjt::certify_bundle(sjt::omega(sjt::trivial(kE2, Parity::even), 1));
  ASSERT_EQ(o.verdict, BundleVerdict::bundle);
  EXPECT_EQ(o.f1, (sjt::SuperDim{0, 1}));
  EXPECT_EQ(o.f2, 1u);
}

TEST(Window, TrivialModule) {
  auto rows = sjt::graded_window_dims(sjt::trivial(kE2, Parity::even), 0, 2);
  ASSERT_EQ(rows.size(), 3u);
  for (int d = 0; d < 3; ++d) {
    EXPECT_EQ(rows[d].degree, d);
    EXPECT_EQ(rows[d].kernel, static_cast<std::size_t>(d + 1));
    EXPECT_EQ(rows[d].image, 0u);
  }
}

TEST(Window, FreeModuleDegreeZero) {
  // theta_0 on the regular module: m (x) 1 -> z1.m (x) Y1 + z2.m (x) Y2.
  auto f = oracle::exterior2_regular();
  auto rows = sjt::graded_window_dims(f, 0, 0);
  ASSERT_EQ(rows.size(), 1u);
  auto [ker, im] = theta_rank_two_vars(f, 0);
  EXPECT_EQ(rows[0].kernel, ker);
  EXPECT_EQ(rows[0].image, im);
  EXPECT_EQ(ker, 1u);
  EXPECT_EQ(im, 3u);
}

TEST(Window, MatchesOracleAndIsComplex) {
  for (const auto& name : {"w3", "omega_ext2_2", "free_ext2", "omega_ext2_-1"}) {
    auto m = oracle::load(name);
    auto rows = sjt::graded_window_dims(m, 0, 4);
    for (int d = 0; d <= 4; ++d) {
      auto [ker, im] = theta_rank_two_vars(m, d);
      EXPECT_EQ(rows[d].kernel, ker) << name << " " << d;
      EXPECT_EQ(rows[d].image, im) << name << " " << d;
      if (d > 0) {
        EXPECT_EQ(rows[d].f1, rows[d].kernel - rows[d - 1].image);
      }
      if (d < 4) {
        EXPECT_LE(rows[d].image, rows[d + 1].kernel);
      }
    }
  }
}

TEST(Window, Range) {
  EXPECT_TRUE(sjt::graded_window_dims(sjt::w_module(kE2, 2), 3, 2).empty());
  EXPECT_THROW(sjt::graded_window_dims(sjt::w_module(kE2, 2), 0, 9), sjt::RangeTooLarge);
  EXPECT_THROW(sjt::graded_window_dims(sjt::w_module(kE2, 2), -1, 2), sjt::RangeTooLarge);
}

}  // namespace
