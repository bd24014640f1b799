#include <gtest/gtest.h>

#include "sjt/error.hpp"
#include "sjt/rational.hpp"
#include "sjt/subspace.hpp"
#include "support/oracle.hpp"

namespace {

using sjt::Rational;
using sjt::SparseMatrix;
using sjt::SparseVector;
using sjt::Subspace;

SparseMatrix dense(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return SparseMatrix::from_dense(r);
}

SparseVector vec(std::vector<long> v) {
  std::vector<Rational> r;
  for (long x : v) r.emplace_back(x);
  return sjt::to_sparse(r);
}

TEST(Rational, CanonicalForm) {
  Rational a(6, 4);
  a.canonicalize();
  EXPECT_EQ(sjt::to_string(a), "3/2");
  EXPECT_EQ(sjt::to_string(Rational(1, 3) + Rational(1, 6)), "1/2");
  EXPECT_EQ(sjt::parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(sjt::to_string(sjt::parse_rational("8/4")), "2");
  EXPECT_THROW(sjt::parse_rational("1/0"), sjt::ParseError);
  EXPECT_THROW(sjt::parse_rational("1/"), sjt::ParseError);
  EXPECT_THROW(sjt::parse_rational("x"), sjt::ParseError);
}

TEST(SparseMatrix, NoStoredZeros) {
  SparseMatrix m(2, 2);
  m.set(0, 1, 3);
  m.add_to(0, 1, -3);
  EXPECT_EQ(m.nnz(), 0u);
  EXPECT_TRUE(m.is_zero());
  m.set(1, 0, Rational(1, 2));
  EXPECT_EQ(m.at(1, 0), Rational(1, 2));
  EXPECT_EQ(m.transpose().at(0, 1), Rational(1, 2));
}

TEST(SparseMatrix, ProductsAndKron) {
  SparseMatrix a = dense({{1, 2}, {0, 1}});
  SparseMatrix b = dense({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, dense({{2, 1}, {1, 0}}));
  SparseMatrix k = sjt::kron(SparseMatrix::identity(2), b);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k.at(2, 3), 1);
  EXPECT_EQ(k.at(0, 3), 0);
  EXPECT_EQ(sjt::block_diag(a, b).at(3, 2), 1);
}

TEST(Rank, ZeroMatrix) { EXPECT_EQ(sjt::rank(SparseMatrix(4, 4)), 0u); }

TEST(Rank, Identity) { EXPECT_EQ(sjt::rank(SparseMatrix::identity(3)), 3u); }

TEST(Rank, TwoByThree) {
  SparseMatrix m = dense({{1, 2, 0}, {0, 1, 2}});
  EXPECT_EQ(sjt::rank(m), 2u);
  EXPECT_EQ(oracle::minor_rank(oracle::dense(m)), 2u);
}

TEST(Kernel, ZeroIsFull) { EXPECT_EQ(sjt::kernel(SparseMatrix(2, 2)), Subspace::full(2)); }

TEST(Kernel, IdentityIsZero) { EXPECT_EQ(sjt::kernel(SparseMatrix::identity(3)).dim(), 0u); }

TEST(Kernel, AllOnes) {
  Subspace k = sjt::kernel(dense({{1, 1}, {1, 1}}));
  EXPECT_EQ(k, Subspace::span(2, {vec({1, -1})}));
  EXPECT_EQ(k.dim(), 1u);
}

TEST(Image, Cases) {
  EXPECT_EQ(sjt::image(SparseMatrix(3, 3)).dim(), 0u);
  EXPECT_EQ(sjt::image(SparseMatrix::identity(3)), Subspace::full(3));
  EXPECT_EQ(sjt::image(dense({{1, 0}, {1, 0}})), Subspace::span(2, {vec({1, 1})}));
}

TEST(QuotientDims, Cases) {
  EXPECT_EQ(sjt::quotient_dims(Subspace::full(3), Subspace(3)), 3u);
  Subspace v = Subspace::span(3, {vec({1, 2, 3})});
  EXPECT_EQ(sjt::quotient_dims(v, v), 0u);
  EXPECT_THROW(sjt::quotient_dims(v, Subspace::span(3, {vec({1, 0, 0})})), sjt::NotContained);
}

TEST(QuotientDims, KacModuleAtY) {
  // y on K(0): v -> w.
  SparseMatrix y(2, 2);
  y.set(1, 0, 1);
  Subspace ker = Subspace::full(2);
  EXPECT_EQ(sjt::quotient_dims(ker, sjt::image(y)), 1u);
}

TEST(Subspace, CanonicalBasis) {
  Subspace a = Subspace::span(3, {vec({2, 4, 0}), vec({0, 0, 5})});
  Subspace b = Subspace::span(3, {vec({1, 2, 5}), vec({3, 6, 0}), vec({1, 2, 0})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis().front(), vec({1, 2, 0}));
  EXPECT_TRUE(a.contains(vec({1, 2, 7})));
  EXPECT_FALSE(a.contains(vec({0, 1, 0})));
  EXPECT_EQ(a.complement_coordinates(), std::vector<std::size_t>{1});
}

TEST(Subspace, SumAndIntersection) {
  Subspace a = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  Subspace b = Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  EXPECT_EQ(a.sum(b).dim(), 3u);
  EXPECT_EQ(a.intersection(b), Subspace::span(3, {vec({0, 1, 0})}));
  EXPECT_EQ(a.coordinates(vec({3, 4, 0})), vec({3, 4}));
}

TEST(RowEchelon, IncrementalRank) {
  sjt::RowEchelon e;
  EXPECT_TRUE(e.insert(vec({1, 1, 0})));
  EXPECT_TRUE(e.insert(vec({0, 1, 1})));
  EXPECT_FALSE(e.insert(vec({1, 2, 1})));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.reduce(vec({2, 3, 1})).empty());
}

}  // namespace
