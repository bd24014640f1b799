#include <gtest/gtest.h>

#include <random>

#include "sjt/cjt.hpp"
#include "sjt/constructions.hpp"
#include "sjt/indecomposability.hpp"
#include "sjt/rank_certificate.hpp"
#include "support/oracle.hpp"

namespace {

using sjt::AlgebraSpec;
using sjt::Parity;
using sjt::Rational;
using sjt::Supermodule;

const AlgebraSpec kE2 = AlgebraSpec::exterior(2);
const AlgebraSpec kE4 = AlgebraSpec::exterior(4);

std::vector<Supermodule> corpus() {
  std::vector<Supermodule> c;
  for (std::uint64_t seed = 0; seed < 40; ++seed) c.push_back(sjt::random_module(kE2, seed % 9, seed));
  for (std::uint64_t seed = 0; seed < 10; ++seed) c.push_back(sjt::random_module(kE4, 2 + seed % 7, seed));
  for (const auto& name : {"k0", "dual_k0", "ex2_sum", "ex3_m", "ex3_n", "w4", "omega_ext2_-2", "omega_ext4_1",
                           "free_ext2"})
    c.push_back(oracle::load(name));
  return c;
}

// Random nonzero point; in the weak cone when the algebra has brackets.
sjt::OddPoint cone_point(std::mt19937_64& rng, const AlgebraSpec& a) {
  auto c = sjt::random_point(rng, a.odd_count());
  if (!a.is_exterior()) {
    const std::size_t r = a.rank();
    for (std::size_t i = 0; i < r; ++i)
      if (c[i] != 0 && c[r + i] != 0) c[(rng() & 1) ? i : r + i] = 0;
    bool nonzero = false;
    for (const auto& v : c) nonzero |= v != 0;
    if (!nonzero) c[0] = 1;
  }
  return sjt::OddPoint(a, c);
}

TEST(ModuleProperty, PointOperatorSquaresToZero) {
  std::mt19937_64 rng(30);
  for (const auto& m : corpus())
    for (int k = 0; k < 10; ++k) {
      auto d = sjt::point_operator(m, cone_point(rng, m.algebra()));
      EXPECT_TRUE((d * d).is_zero());
    }
}

TEST(ModuleProperty, ScalingInvariance) {
  std::mt19937_64 rng(31);
  for (const auto& m : corpus()) {
    auto p = cone_point(rng, m.algebra());
    auto q = p.scaled(Rational(-7, 3));
    EXPECT_EQ(sjt::point_operator(m, q), sjt::point_operator(m, p).scaled(Rational(-7, 3)));
    EXPECT_EQ(sjt::jordan_type_at(m, q), sjt::jordan_type_at(m, p));
  }
}

TEST(ModuleProperty, SymbolicOperatorEvaluatesToPointOperator) {
  std::mt19937_64 rng(32);
  for (const auto& m : corpus()) {
    if (!sjt::principal_block_check(m)) continue;
    auto e = sjt::as_exterior(m);
    auto d = sjt::symbolic_operator(e, sjt::Chart::full());
    for (int k = 0; k < 5; ++k) {
      auto p = sjt::random_point(rng, e.algebra().odd_count());
      EXPECT_EQ(d.evaluate(p), sjt::point_operator(e, sjt::OddPoint(e.algebra(), p)));
    }
  }
}

TEST(ModuleProperty, JordanTypeInvariants) {
  std::mt19937_64 rng(33);
  for (const auto& m : corpus())
    for (int k = 0; k < 5; ++k) {
      auto p = cone_point(rng, m.algebra());
      auto t = sjt::jordan_type_at(m, p);
      EXPECT_EQ(t.dim(), m.dim());
      EXPECT_EQ(static_cast<long>(t.a_ev) - static_cast<long>(t.a_od), sjt::superdim(m).sdim());
      EXPECT_EQ(t, oracle::jordan_type(m, p));
      auto f = sjt::fiber_at(m, p);
      EXPECT_EQ(f.even, t.a_ev);
      EXPECT_EQ(f.odd, t.a_od);
    }
}

TEST(ModuleProperty, RestrictionPreservesValidity) {
  for (const auto& m : corpus()) {
    const auto& a = m.algebra();
    if (a.is_exterior()) {
      EXPECT_TRUE(sjt::validate(sjt::restrict_to_subalgebra(m, {a.odd_generators().back()})).empty());
    } else {
      EXPECT_TRUE(sjt::validate(sjt::restrict_to_subalgebra(m, {"t1", "x1", "y1"})).empty());
      EXPECT_TRUE(sjt::validate(sjt::restrict_to_subalgebra(m, {"y1"})).empty());
    }
  }
}

TEST(ConstructionProperty, EverythingValidates) {
  auto c = corpus();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const auto& m = c[i];
    const auto& n = c[i + 1];
    EXPECT_TRUE(sjt::validate(sjt::dual(m)).empty());
    EXPECT_TRUE(sjt::validate(sjt::parity_shift(m)).empty());
    if (m.algebra() != n.algebra()) continue;
    if (m.dim() * n.dim() <= 64) {
      EXPECT_TRUE(sjt::validate(sjt::tensor(m, n)).empty());
      EXPECT_EQ(sjt::tensor(m, n), oracle::tensor(m, n));
    }
    EXPECT_TRUE(sjt::validate(sjt::direct_sum(m, n)).empty());
    if (m.algebra().is_exterior()) {
      EXPECT_TRUE(sjt::validate(sjt::omega(m, 1)).empty());
      EXPECT_TRUE(sjt::validate(sjt::omega(m, -1)).empty());
      EXPECT_TRUE(sjt::validate(sjt::quotient_by_socle(m)).empty());
      EXPECT_TRUE(sjt::validate(sjt::head(m)).empty());
    }
  }
}

TEST(ConstructionProperty, TensorUnitAndAssociativity) {
  auto c = corpus();
  for (std::size_t i = 0; i + 2 < c.size(); i += 3) {
    const auto& a = c[i];
    auto k = sjt::trivial(a.algebra(), Parity::even);
    EXPECT_EQ(sjt::tensor(k, a), a);
    EXPECT_EQ(sjt::tensor(a, k), a);
    const auto& b = c[i + 1];
    const auto& d = c[i + 2];
    if (a.algebra() != b.algebra() || b.algebra() != d.algebra() || a.dim() * b.dim() * d.dim() > 300) continue;
    // Basis (i, j, l) sits at the same index for both bracketings.
    EXPECT_EQ(sjt::tensor(sjt::tensor(a, b), d), sjt::tensor(a, sjt::tensor(b, d)));
  }
}

TEST(ConstructionProperty, SuperdimensionArithmetic) {
  auto c = corpus();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const auto& m = c[i];
    const auto& n = c[i + 1];
    EXPECT_EQ(sjt::dual(sjt::dual(m)), oracle::sign_twist(m));
    EXPECT_EQ(sjt::superdim(sjt::dual(m)), sjt::superdim(m));
    if (m.algebra() != n.algebra()) continue;
    EXPECT_EQ(sjt::superdim(sjt::tensor(m, n)).sdim(), sjt::superdim(m).sdim() * sjt::superdim(n).sdim());
    EXPECT_EQ(sjt::superdim(sjt::direct_sum(m, n)).sdim(), sjt::superdim(m).sdim() + sjt::superdim(n).sdim());
  }
}

TEST(ConstructionProperty, SyzygySequence) {
  for (const auto& m : corpus()) {
    if (!m.algebra().is_exterior()) continue;
    auto cover = sjt::projective_cover(m);
    auto o = sjt::omega(m, 1);
    EXPECT_EQ(cover.cover.dim(), m.dim() + o.dim());
    EXPECT_EQ(sjt::rank(cover.map), m.dim());
    // The cover map is a module map.
    for (const auto& g : m.algebra().odd_generators())
      EXPECT_EQ(cover.map * cover.cover.action(g), m.action(g) * cover.map);
    // Omega^-1 o Omega^1 strips projective summands only.
    EXPECT_EQ(sjt::omega(o, -1).dim(), sjt::omega(m, 0).dim());
  }
}

// Rad(M) = Soc(M), and head and socle are the two parity components, for
// indecomposable non-projective Rad^2 = 0 modules over exterior(2).
TEST(ConstructionProperty, RadicalEqualsSocleInHeightTwo) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto m = sjt::random_module(kE2, 2 + seed % 7, 1000 + seed);
    if (sjt::indecomposability(m).verdict != sjt::Decomposition::indecomposable) continue;
    if (sjt::is_projective(m).projective) continue;
    ++checked;
    auto soc = sjt::socle(m);
    EXPECT_EQ(sjt::radical(m), soc) << seed;
    std::vector<sjt::SparseVector> ev, od;
    for (std::size_t i = 0; i < m.dim(); ++i)
      (m.parity(i) == Parity::even ? ev : od).push_back({{i, Rational(1)}});
    EXPECT_TRUE(soc == sjt::Subspace::span(m.dim(), ev) || soc == sjt::Subspace::span(m.dim(), od)) << seed;
  }
  EXPECT_GT(checked, 5u);
}

TEST(ConstructionProperty, RandomModulesAreDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(sjt::random_module(kE4, 7, seed), sjt::random_module(kE4, 7, seed));
    EXPECT_TRUE(sjt::validate(sjt::random_module(kE4, 7, seed)).empty());
  }
}

// A certified constant verdict is never contradicted by 1000 seeded samples.
TEST(JordanProperty, CertifiedAgreesWithSampling) {
  sjt::CheckOptions certified;
  certified.cone = sjt::Cone::strong;
  sjt::CheckOptions sampled = certified;
  sampled.certified = false;
  sampled.samples = 1000;
  sampled.seed = 77;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto m = sjt::random_module(kE2, 1 + seed % 8, seed);
    auto c = sjt::check_cjt(m, certified);
    if (c.verdict != sjt::Verdict::constant) continue;
    auto s = sjt::check_cjt(m, sampled);
    EXPECT_EQ(s.verdict, sjt::Verdict::constant) << seed;
    EXPECT_EQ(s.type, c.type) << seed;
  }
  for (const auto& name : {"w5", "omega_ext2_3", "omega_ext4_-1", "free_ext4"}) {
    auto m = oracle::load(name);
    auto c = sjt::check_cjt(m, certified);
    ASSERT_EQ(c.verdict, sjt::Verdict::constant) << name;
    auto s = sjt::check_cjt(m, sampled);
    EXPECT_EQ(s.verdict, sjt::Verdict::constant) << name;
    EXPECT_EQ(s.type, c.type) << name;
  }
}

TEST(JordanProperty, NotConstantWitnessesDiffer) {
  sjt::CheckOptions o;
  o.cone = sjt::Cone::strong;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto m = sjt::random_module(kE2, 2 + seed % 7, seed);
    auto r = sjt::check_cjt(m, o);
    if (r.verdict != sjt::Verdict::not_constant) continue;
    ASSERT_TRUE(r.witness1 && r.witness2);
    EXPECT_NE(*r.type1, *r.type2);
    EXPECT_EQ(sjt::jordan_type_at(m, *r.witness1), *r.type1);
    EXPECT_EQ(sjt::jordan_type_at(m, *r.witness2), *r.type2);
  }
}

}  // namespace
