#include "sjt/bundle.hpp"

#include <algorithm>

#include "sjt/error.hpp"
#include "sjt/rank_certificate.hpp"
#include "sjt/subspace.hpp"

namespace sjt {

std::string to_string(BundleVerdict v) {
  switch (v) {
    case BundleVerdict::bundle:
      return "bundle";
    case BundleVerdict::not_bundle:
      return "not_bundle";
    case BundleVerdict::inconclusive:
      return "inconclusive";
  }
  return "";
}

ThetaOperator build_theta(const Supermodule& m) {
  Supermodule e = as_exterior(m);
  SymbolicOperator d = symbolic_operator(e, Chart::full());
  const std::size_t s = e.algebra().rank();
  SymbolicOperator theta(e.dim(), e.dim(), d.coefficients(), indexed_names("Y", s));
  return {e, theta};
}

PolyMatrix theta_squared(const ThetaOperator& theta) {
  PolyMatrix t = theta.matrix.to_poly_matrix();
  return t * t;
}

FiberReport fiber_functors(const Supermodule& m, const OddPoint& p) {
  FiberReport r{p, fiber_at(m, p), 0};
  check_point(m, p);
  r.f2 = rank(point_operator(m, p));
  return r;
}

std::vector<FiberReport> sample_fibers(const Supermodule& m, std::size_t n, std::uint64_t seed) {
  Supermodule e = as_exterior(m);
  std::mt19937_64 rng(seed);
  std::vector<FiberReport> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(fiber_functors(e, OddPoint(e.algebra(), random_point(rng, e.algebra().rank()))));
  }
  return out;
}

BundleReport certify_bundle(const Supermodule& m, const CheckOptions& options) {
  CheckOptions o = options;
  o.cone = Cone::strong;
  o.certified = true;
  BundleReport rep;
  rep.cjt = check_cjt(m, o);
  switch (rep.cjt.verdict) {
    case Verdict::constant:
      rep.verdict = BundleVerdict::bundle;
      rep.f1 = {rep.cjt.type->a_ev, rep.cjt.type->a_od};
      rep.f2 = rep.cjt.type->a2;
      for (const auto& cr : rep.cjt.charts) {
        if (!cr.certificate) continue;
        for (const auto& b : cr.certificate->blocks) {
          if (b.minors) rep.certificate_ideals.push_back(*b.minors);
        }
      }
      break;
    case Verdict::not_constant:
      rep.verdict = BundleVerdict::not_bundle;
      rep.witness1 = fiber_functors(m, *rep.cjt.witness1);
      rep.witness2 = fiber_functors(m, *rep.cjt.witness2);
      break;
    case Verdict::inconclusive:
      rep.verdict = BundleVerdict::inconclusive;
      break;
  }
  return rep;
}

std::vector<WindowRow> graded_window_dims(const Supermodule& input, int first, int last) {
  std::vector<WindowRow> out;
  if (first > last) return out;
  if (first < 0 || last > 8) throw RangeTooLarge("degree window must lie within [0, 8]");
  Supermodule m = as_exterior(input);
  const std::size_t s = m.algebra().rank();
  const std::size_t n = m.dim();
  std::optional<std::size_t> previous_image;
  if (first > 0) previous_image = std::nullopt;
  for (int d = std::max(0, first - 1); d <= last; ++d) {
    auto src = monomials_of_degree(s, static_cast<unsigned>(d));
    auto dst = monomials_of_degree(s, static_cast<unsigned>(d + 1));
    auto index_of = [&dst](const Monomial& mono) {
      auto it = std::lower_bound(dst.begin(), dst.end(), mono, [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); });
      return static_cast<std::size_t>(it - dst.begin());
    };
    // column (v, mono) -> sum_i A_i v (x) Y_i mono; index = basis * #monomials + monomial
    SparseMatrix theta(n * dst.size(), n * src.size());
    for (std::size_t i = 0; i < s; ++i) {
      const SparseMatrix& a = m.actions()[i];
      for (std::size_t k = 0; k < src.size(); ++k) {
        std::size_t target = index_of(src[k] * Monomial::variable(i));
        for (const auto& [r, c, v] : a.triplets()) theta.add_to(r * dst.size() + target, c * src.size() + k, v);
      }
    }
    std::size_t im = rank(theta);
    std::size_t ker = n * src.size() - im;
    if (d >= first) {
      std::size_t before = d == 0 ? 0 : previous_image.value_or(0);
      out.push_back({d, ker, im, ker - before});
    }
    previous_image = im;
  }
  return out;
}

}  // namespace sjt
