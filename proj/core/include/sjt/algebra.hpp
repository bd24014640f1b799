#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sjt/rational.hpp"

namespace sjt {

enum class AlgebraKind { sl11, f, exterior };

struct Generator {
  std::string name;
  bool odd = false;
};

/// One of the supported superalgebras: sl(1|1) (generators t1 x1 y1),
/// f_r = sl(1|1)^r (t1..tr, x1..xr, y1..yr) and the purely odd abelian
/// algebra exterior(s) (z1..zs). The only nonzero brackets are
/// [x_i, y_i] = t_i.
class AlgebraSpec {
 public:
  static AlgebraSpec sl11();
  static AlgebraSpec f(std::size_t r);
  static AlgebraSpec exterior(std::size_t s);
  /// Accepts "sl11", "f<r>", "f_<r>", "exterior(<s>)".
  static AlgebraSpec parse(const std::string& text);

  AlgebraKind kind() const { return kind_; }
  /// r for sl11 / f_r, s for exterior(s).
  std::size_t rank() const { return rank_; }
  bool is_exterior() const { return kind_ == AlgebraKind::exterior; }

  const std::vector<Generator>& generators() const { return gens_; }
  /// Odd generators in canonical order: x1..xr, y1..yr or z1..zs.
  std::vector<std::string> odd_generators() const;
  std::vector<std::string> even_generators() const;
  std::size_t odd_count() const { return is_exterior() ? rank_ : 2 * rank_; }
  /// Index into generators(); accepts the aliases t, x, y for sl11.
  std::optional<std::size_t> find(const std::string& name) const;
  /// Position of an odd generator in odd_generators().
  std::optional<std::size_t> odd_index(const std::string& name) const;
  /// Canonical name (resolves aliases); throws UnknownGenerator.
  std::string canonical(const std::string& name) const;

  /// Name of [u, v] when it is a nonzero generator (always with coefficient 1).
  std::optional<std::string> bracket(const std::string& u, const std::string& v) const;

  std::string to_string() const;
  /// Default variable names for the strong-cone coordinates:
  /// a1..ar, b1..br for sl11 / f_r, c1..cs for exterior.
  std::vector<std::string> coordinate_names() const;

  bool operator==(const AlgebraSpec& o) const { return kind_ == o.kind_ && rank_ == o.rank_; }
  bool operator!=(const AlgebraSpec& o) const { return !(*this == o); }

 private:
  AlgebraSpec(AlgebraKind kind, std::size_t rank);
  AlgebraKind kind_;
  std::size_t rank_;
  std::vector<Generator> gens_;
};

/// Rational combination of odd generators, stored in odd_generators() order.
class OddPoint {
 public:
  OddPoint(AlgebraSpec algebra, std::vector<Rational> coeffs);
  static OddPoint zero(const AlgebraSpec& algebra);
  /// Unit point on one generator.
  static OddPoint unit(const AlgebraSpec& algebra, const std::string& generator);

  const AlgebraSpec& algebra() const { return algebra_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(const std::string& generator) const;
  bool is_zero() const;
  /// [p, p] = 0: a_i b_i = 0 for every factor (always true for exterior).
  bool in_weak_cone() const;
  OddPoint scaled(const Rational& c) const;
  /// "x1 + 2*y1", "0" for the zero point.
  std::string to_string() const;

  bool operator==(const OddPoint& o) const { return algebra_ == o.algebra_ && coeffs_ == o.coeffs_; }

 private:
  AlgebraSpec algebra_;
  std::vector<Rational> coeffs_;
};

}  // namespace sjt
