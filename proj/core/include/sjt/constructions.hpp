#pragma once

#include <cstdint>

#include "sjt/subspace.hpp"
#include "sjt/supermodule.hpp"

namespace sjt {

Supermodule zero_module(const AlgebraSpec& a);
Supermodule trivial(const AlgebraSpec& a, Parity p);
/// Parity change; action matrices are unchanged.
Supermodule parity_shift(const Supermodule& m);
Supermodule direct_sum(const Supermodule& m, const Supermodule& n);
/// Basis e_i (x) f_j at index i * dim(n) + j; odd generators act by
/// A (x) I + sigma_m (x) B, even ones by A (x) I + I (x) B.
Supermodule tensor(const Supermodule& m, const Supermodule& n);
/// Dual basis with the same parities; (g.f)(v) = -(-1)^{|g||f|} f(g.v).
Supermodule dual(const Supermodule& m);
/// tensor(n, dual(m)).
Supermodule hom(const Supermodule& m, const Supermodule& n);

/// sl11: v even, w odd, y.v = w.
Supermodule kac0();
/// sl11: u odd, z even, x.u = z.
Supermodule dual_kac0();

/// Regular module of exterior(s) (or of a principal-block f_r through
/// exterior(2r)), rank copies; the generator 1 of each copy has parity p.
/// Basis: subsets ordered by size, then lexicographically.
Supermodule free_module(const AlgebraSpec& a, std::size_t rank, Parity p);

/// Sum of the images of all generators.
Subspace radical(const Supermodule& m);
/// Intersection of the kernels of all generators.
Subspace socle(const Supermodule& m);
/// Induced module on a graded invariant subspace (basis: its echelon basis).
Supermodule submodule(const Supermodule& m, const Subspace& w);
/// Induced module on m / w (basis: the non-pivot coordinates of w).
Supermodule quotient(const Supermodule& m, const Subspace& w);
Supermodule radical_module(const Supermodule& m);
Supermodule head(const Supermodule& m);
Supermodule quotient_by_socle(const Supermodule& m);

/// Free module on a basis of the head together with the surjection onto m.
struct ProjectiveCover {
  Supermodule cover;
  SparseMatrix map;  // dim m x dim cover
};
ProjectiveCover projective_cover(const Supermodule& m);

/// Heller shifts: n = 1 kernel of the projective cover, n = -1 via duality,
/// n = 0 strips projective summands, |n| > 1 iterates.
Supermodule omega(const Supermodule& m, int n);

/// Zigzag over exterior(s >= 2) (generators z1, z2) or sl11 (x1, y1):
/// even m_1..m_n, odd s_1..s_{n-1}, x.m_i = s_i, y.m_{i+1} = s_i.
Supermodule w_module(const AlgebraSpec& a, std::size_t n);

/// Deterministic module with Rad^2 = 0 over exterior(s): a top layer mapped
/// to a bottom layer by sparse small-integer matrices, random parities.
Supermodule random_module(const AlgebraSpec& a, std::size_t dim, std::uint64_t seed);

/// Inverse of as_exterior: an exterior(2r) module viewed over f_r with
/// t_i = 0, x_i = z_i, y_i = z_{r+i}.
Supermodule from_exterior(const Supermodule& m, const AlgebraSpec& target);

}  // namespace sjt
