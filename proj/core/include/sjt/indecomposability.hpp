#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sjt/supermodule.hpp"

namespace sjt {

enum class Decomposition { indecomposable, decomposable, inconclusive };
std::string to_string(Decomposition d);

struct IndecomposabilityReport {
  std::size_t end_dim = 0;
  std::size_t radical_dim = 0;
  Decomposition verdict = Decomposition::inconclusive;
  /// Verified nontrivial even idempotent commuting with every generator.
  std::optional<SparseMatrix> idempotent;
  std::string reason;
};

/// Basis of the even endomorphisms: parity-preserving matrices commuting
/// with every generator action.
std::vector<SparseMatrix> even_endomorphisms(const Supermodule& m);

/// Indecomposable iff the even endomorphism algebra modulo its radical (the
/// kernel of the trace form) is one-dimensional; otherwise an idempotent is
/// sought among spectral projectors of sample elements with rational
/// eigenvalues. The zero module is reported decomposable.
IndecomposabilityReport indecomposability(const Supermodule& m);

}  // namespace sjt
