#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sjt/groebner.hpp"
#include "sjt/symbolic_operator.hpp"

namespace sjt {

struct CertifyOptions {
  Limits limits;
  std::uint64_t seed = 0;
  std::size_t generic_samples = 50;
  /// Largest evaluation grid for the identically-zero test of (g+1)-minors.
  std::size_t grid_cap = 100000;
  /// Random Cauchy-Binet forms used when the g-minors are too many (0: automatic).
  std::size_t combination_forms = 0;
  /// Degrees above g tried by the saturation test.
  unsigned saturation_slack = 6;
  /// Widest Macaulay matrix of the saturation test.
  std::size_t saturation_columns = 4096;
  std::size_t witness_samples = 300;
};

/// Nonzero integer point with coordinates in [-17, 17].
std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n);
/// Nonzero vectors with entries from values, ordered by number of nonzero
/// entries, then lexicographically; at most cap of them.
std::vector<std::vector<Rational>> small_points(std::size_t n, const std::vector<int>& values, std::size_t cap = 10000);

/// Maximum rank over seeded random points.
std::size_t generic_rank(const SymbolicOperator& d, std::size_t samples, std::uint64_t seed);

/// Rows and columns of a connected component of the support (rows and
/// columns as the two sides of a bipartite graph). The operator is block
/// diagonal over these, so ranks add.
struct SupportBlock {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
std::vector<SupportBlock> support_blocks(const SymbolicOperator& d);

/// Homogeneous form of degree deg in n variables through its values,
/// reconstructed by Newton interpolation on the principal lattice of the
/// chart c_1 = 1.
Poly interpolate_form(std::size_t nvars, unsigned deg, const std::function<Rational(const std::vector<Rational>&)>& eval);

/// Exact determinant of a dense square matrix.
Rational dense_determinant(std::vector<std::vector<Rational>> a);

enum class RankOutcome { constant, drop, inconclusive };

struct BlockCertificate {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t generic_rank = 0;
  /// "full", "minors" or "grid": how the (g+1)-minors were shown to vanish.
  std::string upper_method;
  std::size_t upper_checks = 0;
  /// "trivial", "minors" or "combinations": generators of the g-minor (sub)ideal.
  std::string lower_method;
  std::size_t lower_generators = 0;
  /// Degree d with every degree-d form in the ideal, when found.
  std::optional<unsigned> saturation;
  RankOutcome outcome = RankOutcome::inconclusive;
  bool resource_limited = false;
  /// The ideal of all g-minors, when it was computed.
  std::optional<Ideal> minors;
};

/// Decides whether rank D(c) is the same at every nonzero point over the
/// algebraic closure: (g+1)-minors vanish identically and the g-minors have
/// no common zero besides the origin.
struct RankCertificate {
  RankOutcome outcome = RankOutcome::inconclusive;
  std::size_t generic_rank = 0;
  std::vector<Rational> drop_point;
  std::size_t drop_rank = 0;
  std::vector<BlockCertificate> blocks;
  bool resource_limited = false;
  /// The g-minors have a nonzero common zero, but no rational one was found.
  bool drop_certified = false;
  std::string reason;
};

RankCertificate certify_constant_rank(const SymbolicOperator& d, const CertifyOptions& options = {});

}  // namespace sjt
