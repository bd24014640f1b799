#include <gtest/gtest.h>

#include "sjt/constructions.hpp"
#include "sjt/recipe.hpp"
#include "support/oracle.hpp"

namespace {

using sjt::AlgebraSpec;
using sjt::Parity;

struct Entry {
  std::string name;
  sjt::Supermodule module;
};

std::vector<Entry> corpus() {
  const auto sl = AlgebraSpec::sl11(), e2 = AlgebraSpec::exterior(2), e4 = AlgebraSpec::exterior(4);
  auto k_ev = sjt::trivial(sl, Parity::even);
  std::vector<Entry> c = {
      {"k_ev", k_ev},
      {"k_od", sjt::trivial(sl, Parity::odd)},
      {"k0", oracle::kac0()},
      {"dual_k0", oracle::dual_kac0()},
      {"k0_plus_dualk0", sjt::direct_sum(oracle::kac0(), oracle::dual_kac0())},
      {"ex2_m", sjt::direct_sum(k_ev, oracle::kac0())},
      {"ex2_n", sjt::direct_sum(k_ev, oracle::dual_kac0())},
      {"ex2_sum", sjt::direct_sum(sjt::direct_sum(k_ev, oracle::kac0()), sjt::direct_sum(k_ev, oracle::dual_kac0()))},
      {"ex3_sum", sjt::direct_sum(oracle::load("ex3_m"), oracle::load("ex3_n"))},
      {"free_ext2", sjt::free_module(e2, 1, Parity::even)},
      {"free_ext4", sjt::free_module(e4, 1, Parity::even)},
  };
  for (int n = 2; n <= 5; ++n) c.push_back({"w" + std::to_string(n), sjt::w_module(e2, n)});
  for (int n = -3; n <= 3; ++n) {
    c.push_back({"omega_ext2_" + std::to_string(n), sjt::omega(sjt::trivial(e2, Parity::even), n)});
    c.push_back({"omega_ext4_" + std::to_string(n), sjt::omega(sjt::trivial(e4, Parity::even), n)});
  }
  return c;
}

TEST(Fixtures, MatchConstructions) {
  for (const auto& e : corpus()) EXPECT_EQ(oracle::load(e.name), e.module) << e.name;
}

TEST(Fixtures, AllValidate) {
  for (const auto& e : corpus()) EXPECT_TRUE(sjt::validate(oracle::load(e.name)).empty()) << e.name;
  EXPECT_TRUE(sjt::validate(oracle::load("ex3_m")).empty());
  EXPECT_TRUE(sjt::validate(oracle::load("ex3_n")).empty());
}

// Structure diagrams of the Example-3 summands, entered by hand.
TEST(Fixtures, ExampleThreeDiagrams) {
  auto m = oracle::load("ex3_m");
  EXPECT_EQ(m.parity(), (std::vector<Parity>{Parity::even, Parity::odd, Parity::odd, Parity::even}));
  EXPECT_EQ(m.action("x1").nnz(), 2u);
  EXPECT_EQ(m.action("y1").nnz(), 1u);
  auto n = oracle::load("ex3_n");
  EXPECT_EQ(n.parity(), (std::vector<Parity>{Parity::even, Parity::odd, Parity::even, Parity::odd}));
  EXPECT_EQ(n.action("x1").nnz(), 1u);
  EXPECT_EQ(n.action("y1").nnz(), 2u);
}

}  // namespace
