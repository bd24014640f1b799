#include "sjt/jordan.hpp"

#include "sjt/error.hpp"
#include "sjt/subspace.hpp"

namespace sjt {

std::string to_string(const JordanType& t) {
  return "(" + std::to_string(t.a_ev) + "|" + std::to_string(t.a_od) + ")[1] + " + std::to_string(t.a2) + "[2]";
}

bool stable_equivalent(const JordanType& a, const JordanType& b) { return a.a_ev == b.a_ev && a.a_od == b.a_od; }

GradedRank graded_rank(const SparseMatrix& d, const std::vector<Parity>& parity) {
  std::vector<std::size_t> ev, od;
  for (std::size_t i = 0; i < parity.size(); ++i) (parity[i] == Parity::even ? ev : od).push_back(i);
  GradedRank r;
  r.even_to_odd = rank(d.submatrix(od, ev));
  r.odd_to_even = rank(d.submatrix(ev, od));
  return r;
}

JordanType jordan_type_from_rank(const SuperDim& d, std::size_t r) {
  if (2 * r > d.dim() || r > d.even || r > d.odd) throw std::logic_error("rank inconsistent with a square-zero operator");
  return {d.even - r, d.odd - r, r};
}

JordanType jordan_type_of(const SparseMatrix& d, const std::vector<Parity>& parity) {
  SuperDim sd;
  for (auto p : parity) (p == Parity::even ? sd.even : sd.odd)++;
  return jordan_type_from_rank(sd, graded_rank(d, parity).total());
}

void check_point(const Supermodule& m, const OddPoint& p) {
  if (p.algebra() != m.algebra()) {
    throw AlgebraMismatch("point over " + p.algebra().to_string() + ", module over " + m.algebra().to_string());
  }
  if (p.is_zero()) throw ZeroPoint();
  if (!p.in_weak_cone() && !principal_block_check(m)) {
    throw ConeViolation("point " + p.to_string() + " is outside the self-commuting cone and the module is not principal-block");
  }
}

JordanType jordan_type_at(const Supermodule& m, const OddPoint& p) {
  check_point(m, p);
  return jordan_type_of(point_operator(m, p), m.parity());
}

SuperDim fiber_at(const Supermodule& m, const OddPoint& p) {
  check_point(m, p);
  SparseMatrix d = point_operator(m, p);
  Subspace ker = kernel(d);
  Subspace im = image(d);
  quotient_dims(ker, im);  // checks Im inside Ker
  auto graded = [&m](const Subspace& s) {
    SuperDim out;
    for (auto piv : s.pivots()) (m.parity(piv) == Parity::even ? out.even : out.odd)++;
    return out;
  };
  SuperDim k = graded(ker), i = graded(im);
  return {k.even - i.even, k.odd - i.odd};
}

}  // namespace sjt
