#pragma once

#include <string>

#include "sjt/supermodule.hpp"

namespace sjt {

/// (a_ev|a_od)[1] + a2[2]: trivial blocks by parity and projective blocks of
/// a square-zero operator.
struct JordanType {
  std::size_t a_ev = 0;
  std::size_t a_od = 0;
  std::size_t a2 = 0;

  std::size_t a1() const { return a_ev + a_od; }
  std::size_t dim() const { return a_ev + a_od + 2 * a2; }
  bool operator==(const JordanType&) const = default;
};

/// "(a_ev|a_od)[1] + a2[2]"
std::string to_string(const JordanType& t);
/// Same trivial part (a_ev, a_od).
bool stable_equivalent(const JordanType& a, const JordanType& b);

/// Ranks of the odd operator split by direction.
struct GradedRank {
  std::size_t even_to_odd = 0;
  std::size_t odd_to_even = 0;
  std::size_t total() const { return even_to_odd + odd_to_even; }
};
GradedRank graded_rank(const SparseMatrix& d, const std::vector<Parity>& parity);

/// Jordan type of a square-zero odd operator on a graded space.
JordanType jordan_type_of(const SparseMatrix& d, const std::vector<Parity>& parity);
/// Jordan type from the rank alone (valid because the operator squares to zero).
JordanType jordan_type_from_rank(const SuperDim& d, std::size_t rank);

/// Throws ZeroPoint, AlgebraMismatch, or ConeViolation when the point lies
/// outside the weak cone of an sl11 / f_r module that is not principal-block.
void check_point(const Supermodule& m, const OddPoint& p);

JordanType jordan_type_at(const Supermodule& m, const OddPoint& p);
/// Ker/Im of the point operator, computed from explicit subspaces.
SuperDim fiber_at(const Supermodule& m, const OddPoint& p);

}  // namespace sjt
