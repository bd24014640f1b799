#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sjt/poly.hpp"

namespace sjt {

/// Bounds shared by every Gröbner and minors computation. Exceeding one
/// raises ResourceLimit so callers can fall back to sampling.
struct Limits {
  std::size_t max_spairs = 5000;
  std::size_t max_basis = 4000;
  unsigned max_degree = 60;
  std::size_t max_minors = 20000;
};

/// Ideal in Q[v_1..v_n] with a lazily computed reduced Gröbner basis
/// (grevlex, variable 0 largest).
class Ideal {
 public:
  explicit Ideal(std::size_t nvars, std::vector<Poly> generators = {});

  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return generators_; }
  bool has_basis() const { return basis_.has_value(); }
  /// Computes on first use; throws ResourceLimit.
  const std::vector<Poly>& basis(const Limits& limits = {}) const;
  bool is_homogeneous() const;
  /// True when the ideal contains 1.
  bool is_unit(const Limits& limits = {}) const;

 private:
  std::size_t nvars_;
  std::vector<Poly> generators_;
  mutable std::optional<std::vector<Poly>> basis_;
};

/// Reduced Gröbner basis of the generated ideal, sorted by increasing
/// leading monomial; the empty list for the zero ideal, {1} for the unit ideal.
std::vector<Poly> groebner_basis(std::size_t nvars, const std::vector<Poly>& generators, const Limits& limits = {});
/// An ideal whose generators and cached basis are the reduced basis of i.
Ideal groebner_basis(const Ideal& i, const Limits& limits = {});

/// Full remainder of multivariate division by the given basis.
Poly reduce(const Poly& p, const std::vector<Poly>& basis);
Poly normal_form(const Poly& p, const Ideal& i, const Limits& limits = {});
bool contains(const Ideal& i, const Poly& p, const Limits& limits = {});

/// p lies in the radical of i, decided by 1 in i + <1 - t p> with an extra
/// variable t.
bool radical_membership(const Poly& p, const Ideal& i, const Limits& limits = {});

/// All monomials of total degree d in n variables, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

/// Arithmetic in Z/p for primes below 2^32.
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
/// Image of q in Z/p; throws std::domain_error when p divides the denominator.
std::uint64_t mod_reduce(const Rational& q, std::uint64_t p);

/// Homogeneous form with coefficients in Z/p.
struct ModularForm {
  unsigned degree = 0;
  std::vector<std::pair<Monomial, std::uint64_t>> terms;
};

/// Smallest d in [start, max_degree] for which the degree-d part of the ideal
/// generated by the forms is every form of degree d (so each variable has a
/// power in the ideal), decided by the rank of Macaulay matrices over Z/p.
/// For reductions of p-integral rational forms a returned degree also holds
/// over Q (a maximal minor nonzero mod p is nonzero); nullopt only means "not
/// found". Gives up when a matrix would exceed max_columns columns, setting
/// *capped when given.
std::optional<unsigned> saturation_degree_mod(std::size_t nvars, const std::vector<ModularForm>& forms, std::uint64_t p,
                                              unsigned start, unsigned max_degree, std::size_t max_columns = 4096,
                                              bool* capped = nullptr);
/// saturation_degree_mod for rational forms, tried modulo two primes.
std::optional<unsigned> saturation_degree(std::size_t nvars, const std::vector<Poly>& homogeneous, unsigned start,
                                          unsigned max_degree, std::size_t max_columns = 4096);

inline constexpr std::uint64_t kModularPrimes[] = {2147483647ULL, 2147483629ULL};

enum class OriginTest { automatic, rabinowitsch };

/// Every listed variable lies in the radical of i, i.e. the common zero
/// locus of i over the algebraic closure is contained in {vars = 0}.
/// For a homogeneous ideal in all variables the automatic mode first looks
/// for a degree in which the ideal contains every form (saturation_degree),
/// then reads the answer off a single basis (finite codimension of the
/// leading monomial ideal); both are equivalent to the per-variable test.
/// Otherwise each variable is tested with radical_membership.
bool vanishes_only_at_origin(const Ideal& i, const std::vector<std::size_t>& vars, const Limits& limits = {},
                             OriginTest mode = OriginTest::automatic);
bool vanishes_only_at_origin(const Ideal& i, const Limits& limits = {}, OriginTest mode = OriginTest::automatic);

}  // namespace sjt
