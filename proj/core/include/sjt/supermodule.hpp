#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sjt/algebra.hpp"
#include "sjt/sparse_matrix.hpp"
#include "sjt/symbolic_operator.hpp"

namespace sjt {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
inline Parity operator+(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

struct SuperDim {
  std::size_t even = 0;
  std::size_t odd = 0;

  std::size_t dim() const { return even + odd; }
  long sdim() const { return static_cast<long>(even) - static_cast<long>(odd); }
  bool operator==(const SuperDim&) const = default;
};

/// "(e|o)"
std::string to_string(const SuperDim& d);

/// Finite-dimensional supermodule: a parity per basis vector and one action
/// matrix per generator, acting on coordinate columns from the left.
class Supermodule {
 public:
  Supermodule() : algebra_(AlgebraSpec::exterior(1)) {}
  /// Missing generators act by zero. Throws UnknownGenerator for foreign
  /// names and ValidationError for shape mismatches.
  Supermodule(AlgebraSpec algebra, std::vector<Parity> parity, const std::map<std::string, SparseMatrix>& actions = {});

  const AlgebraSpec& algebra() const { return algebra_; }
  std::size_t dim() const { return parity_.size(); }
  const std::vector<Parity>& parity() const { return parity_; }
  Parity parity(std::size_t i) const { return parity_[i]; }
  /// Accepts canonical names and sl11 aliases.
  const SparseMatrix& action(const std::string& generator) const;
  /// Actions in generators() order.
  const std::vector<SparseMatrix>& actions() const { return actions_; }
  void set_action(const std::string& generator, SparseMatrix m);

  bool operator==(const Supermodule& o) const = default;

 private:
  AlgebraSpec algebra_;
  std::vector<Parity> parity_;
  std::vector<SparseMatrix> actions_;
};

/// Relation and parity violations; empty means valid.
std::vector<std::string> validate(const Supermodule& m);
SuperDim superdim(const Supermodule& m);
/// Every t_i acts by zero (true for exterior algebras).
bool principal_block_check(const Supermodule& m);
/// Diagonal +-1 matrix of the parity vector.
SparseMatrix parity_sign(const std::vector<Parity>& parity);

/// Sum of coefficient times action over odd generators.
SparseMatrix point_operator(const Supermodule& m, const OddPoint& p);

/// A coordinate chart of the cone. The strong chart covers all of g_1; a weak
/// chart V_eps uses one odd generator per factor (x_i, or y_i when
/// use_y[i]). Over exterior algebras weak and strong coincide.
struct Chart {
  bool strong = true;
  std::vector<bool> use_y;

  static Chart full() { return {}; }
  static Chart weak(std::vector<bool> use_y) { return {false, std::move(use_y)}; }
  /// All 2^r weak charts for f_r (one chart for exterior).
  static std::vector<Chart> weak_charts(const AlgebraSpec& a);
  std::string describe(const AlgebraSpec& a) const;
};

/// Odd generators spanning the chart, in variable order.
std::vector<std::string> chart_generators(const AlgebraSpec& a, const Chart& c);
/// Embeds chart coordinates as an odd point.
OddPoint chart_point(const AlgebraSpec& a, const Chart& c, const std::vector<Rational>& coords);
/// D = sum of var * A_g over the chart's generators.
SymbolicOperator symbolic_operator(const Supermodule& m, const Chart& c);

/// Keeps only the listed generators. Supported closed sets: any set of
/// exterior generators; whole factors {t_i, x_i, y_i} of sl11 / f_r; odd
/// sets without a bracket pair {x_i, y_i} (an exterior subalgebra).
/// Throws NotSubalgebra otherwise.
Supermodule restrict_to_subalgebra(const Supermodule& m, const std::vector<std::string>& generators);

/// A principal-block sl11 / f_r module as a module over exterior(2r), with
/// x_i -> z_i and y_i -> z_{r+i}; exterior modules are returned unchanged.
/// Throws ConeViolation when some t_i acts nontrivially.
Supermodule as_exterior(const Supermodule& m);
/// The matching point over exterior(2r).
OddPoint as_exterior(const OddPoint& p);

}  // namespace sjt
