#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sjt/cjt.hpp"
#include "sjt/supermodule.hpp"

namespace sjt {

/// theta = sum_i A_{z_i} (x) Y_i over the coordinate ring Q[Y_1..Y_s].
struct ThetaOperator {
  Supermodule module;
  SymbolicOperator matrix;
};

/// Module over exterior(s), or principal-block f_r through exterior(2r).
ThetaOperator build_theta(const Supermodule& m);
/// theta^2 as a matrix of quadratic forms.
PolyMatrix theta_squared(const ThetaOperator& theta);

struct FiberReport {
  OddPoint point;
  SuperDim f1;
  std::size_t f2 = 0;
};
FiberReport fiber_functors(const Supermodule& m, const OddPoint& p);
/// Fibers at n seeded nonzero points of the whole odd part (the module is
/// read over exterior(s), see as_exterior).
std::vector<FiberReport> sample_fibers(const Supermodule& m, std::size_t n, std::uint64_t seed);

enum class BundleVerdict { bundle, not_bundle, inconclusive };
std::string to_string(BundleVerdict v);

struct BundleReport {
  BundleVerdict verdict = BundleVerdict::inconclusive;
  SuperDim f1;
  std::size_t f2 = 0;
  std::optional<FiberReport> witness1, witness2;
  CjtReport cjt;
  /// Generators of the g-minor ideal of each certified support block.
  std::vector<Ideal> certificate_ideals;
};
BundleReport certify_bundle(const Supermodule& m, const CheckOptions& options = {.cone = Cone::strong});

struct WindowRow {
  int degree = 0;
  std::size_t kernel = 0;
  std::size_t image = 0;  // of theta from this degree into the next
  std::size_t f1 = 0;
};
/// theta_d : M (x) S^d -> M (x) S^(d+1) for d in [first, last]; the range
/// must lie in [0, 8] (RangeTooLarge); first > last gives an empty table.
std::vector<WindowRow> graded_window_dims(const Supermodule& m, int first, int last);

}  // namespace sjt
