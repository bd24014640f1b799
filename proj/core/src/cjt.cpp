#include "sjt/cjt.hpp"

#include <map>

#include "sjt/constructions.hpp"
#include "sjt/error.hpp"
#include "sjt/subspace.hpp"

namespace sjt {

std::string to_string(Cone c) { return c == Cone::weak ? "weak" : "strong"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::constant:
      return "constant";
    case Verdict::not_constant:
      return "not_constant";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "";
}

namespace {

std::uint64_t chart_seed(std::uint64_t seed, std::size_t chart) { return seed * 1000003ULL + 7919ULL * chart + 1; }

// A point of the chart with maximal rank, preferring small coordinates.
std::vector<Rational> generic_chart_point(const SymbolicOperator& d, std::size_t g, std::uint64_t seed) {
  for (const auto& p : small_points(d.nvars(), {0, 1}, 4096)) {
    if (rank(d.evaluate(p)) == g) return p;
  }
  for (const auto& p : small_points(d.nvars(), {0, 1, -1}, 6561)) {
    if (rank(d.evaluate(p)) == g) return p;
  }
  std::mt19937_64 rng(seed);
  while (true) {
    auto p = random_point(rng, d.nvars());
    if (rank(d.evaluate(p)) == g) return p;
  }
}

OddPoint report_point(const AlgebraSpec& report_algebra, const OddPoint& p) {
  return OddPoint(report_algebra, p.coeffs());
}

void sampled_chart(const Supermodule& m, const AlgebraSpec& out_alg, const Chart& chart, std::size_t idx, const CheckOptions& o,
                   ChartReport& cr, std::vector<std::pair<OddPoint, JordanType>>& seen) {
  SymbolicOperator d = symbolic_operator(m, chart);
  std::mt19937_64 rng(chart_seed(o.seed, idx));
  SuperDim sd = superdim(m);
  for (std::size_t k = 0; k < o.samples; ++k) {
    auto coords = random_point(rng, d.nvars());
    std::size_t r = rank(d.evaluate(coords));
    JordanType t = jordan_type_from_rank(sd, r);
    OddPoint p = report_point(out_alg, chart_point(m.algebra(), chart, coords));
    if (!cr.generic_point || r > cr.generic_rank) {
      cr.generic_rank = r;
      cr.generic_point = p;
    }
    bool known = false;
    for (const auto& s : seen) known = known || s.second == t;
    if (!known) seen.emplace_back(p, t);
  }
  cr.generic_type = jordan_type_from_rank(sd, cr.generic_rank);
  cr.verdict = Verdict::constant;
}

}  // namespace

CjtReport check_cjt(const Supermodule& input, const CheckOptions& o) {
  CjtReport rep;
  rep.cone = o.cone;
  rep.certified_method = o.certified;
  rep.seed = o.seed;
  rep.samples = o.certified ? 0 : o.samples;
  const AlgebraSpec& out_alg = input.algebra();
  Supermodule m = input;
  std::vector<Chart> charts;
  if (o.cone == Cone::strong) {
    m = as_exterior(input);
    charts = {Chart::full()};
  } else {
    charts = Chart::weak_charts(input.algebra());
  }
  const SuperDim sd = superdim(m);
  if (m.dim() == 0) {
    rep.verdict = Verdict::constant;
    rep.type = JordanType{};
    return rep;
  }

  if (!o.certified) {
    rep.probabilistic = true;
    std::vector<std::pair<OddPoint, JordanType>> seen;
    for (std::size_t i = 0; i < charts.size(); ++i) {
      ChartReport cr;
      cr.chart = charts[i].describe(m.algebra());
      cr.generators = chart_generators(m.algebra(), charts[i]);
      sampled_chart(m, out_alg, charts[i], i, o, cr, seen);
      rep.charts.push_back(cr);
    }
    if (seen.empty()) {
      rep.verdict = Verdict::inconclusive;
      rep.reason = "no sample points";
    } else if (seen.size() == 1) {
      rep.verdict = Verdict::constant;
      rep.type = seen.front().second;
    } else {
      rep.verdict = Verdict::not_constant;
      rep.witness1 = seen[0].first;
      rep.type1 = seen[0].second;
      rep.witness2 = seen[1].first;
      rep.type2 = seen[1].second;
    }
    return rep;
  }

  CertifyOptions co;
  co.limits = o.limits;
  bool any_inconclusive = false, any_resource = false;
  std::optional<std::size_t> drop_chart;
  for (std::size_t i = 0; i < charts.size(); ++i) {
    ChartReport cr;
    cr.chart = charts[i].describe(m.algebra());
    cr.generators = chart_generators(m.algebra(), charts[i]);
    SymbolicOperator d = symbolic_operator(m, charts[i]);
    co.seed = chart_seed(o.seed, i);
    RankCertificate cert = certify_constant_rank(d, co);
    std::size_t g = cert.generic_rank;
    if (cert.outcome == RankOutcome::drop) g = std::max(g, generic_rank(d, co.generic_samples, co.seed));
    cr.generic_rank = g;
    cr.generic_type = jordan_type_from_rank(sd, g);
    cr.generic_point = report_point(out_alg, chart_point(m.algebra(), charts[i], generic_chart_point(d, g, co.seed)));
    switch (cert.outcome) {
      case RankOutcome::constant:
        cr.verdict = Verdict::constant;
        break;
      case RankOutcome::drop:
        cr.verdict = Verdict::not_constant;
        if (!drop_chart) {
          drop_chart = i;
          rep.witness1 = report_point(out_alg, chart_point(m.algebra(), charts[i], cert.drop_point));
          rep.type1 = jordan_type_from_rank(sd, cert.drop_rank);
          rep.witness2 = cr.generic_point;
          rep.type2 = cr.generic_type;
        }
        break;
      case RankOutcome::inconclusive:
        cr.verdict = Verdict::inconclusive;
        any_inconclusive = true;
        any_resource = any_resource || cert.resource_limited;
        break;
    }
    cr.certificate = std::move(cert);
    rep.charts.push_back(std::move(cr));
  }

  if (drop_chart) {
    rep.verdict = Verdict::not_constant;
    rep.reason = "rank drops on chart " + rep.charts[*drop_chart].chart;
    return rep;
  }
  // charts whose certified types differ
  const ChartReport* first_certified = nullptr;
  for (const auto& cr : rep.charts) {
    if (cr.verdict != Verdict::constant) continue;
    if (!first_certified) {
      first_certified = &cr;
    } else if (!(cr.generic_type == first_certified->generic_type)) {
      rep.verdict = Verdict::not_constant;
      rep.witness1 = first_certified->generic_point;
      rep.type1 = first_certified->generic_type;
      rep.witness2 = cr.generic_point;
      rep.type2 = cr.generic_type;
      rep.reason = "charts " + first_certified->chart + " and " + cr.chart + " have different constant types";
      return rep;
    }
  }
  if (!any_inconclusive) {
    rep.verdict = Verdict::constant;
    rep.type = rep.charts.front().generic_type;
    return rep;
  }

  rep.verdict = Verdict::inconclusive;
  rep.reason = any_resource ? "resource-limit" : "no certificate";
  for (const auto& cr : rep.charts) {
    if (cr.verdict == Verdict::inconclusive && cr.certificate && cr.certificate->drop_certified) rep.reason = "rank drops only at irrational points";
  }
  if (any_resource && o.fallback_samples > 0) {
    // sampled fallback over every chart
    CheckOptions so = o;
    so.certified = false;
    so.samples = o.fallback_samples;
    CjtReport sampled = check_cjt(input, so);
    rep.probabilistic = true;
    rep.samples = so.samples;
    if (sampled.verdict == Verdict::not_constant) {
      rep.verdict = Verdict::not_constant;
      rep.witness1 = sampled.witness1;
      rep.type1 = sampled.type1;
      rep.witness2 = sampled.witness2;
      rep.type2 = sampled.type2;
      rep.reason = "resource-limit; sampled counterexample";
    } else {
      rep.sampled_type = sampled.type;
    }
  }
  return rep;
}

ProjectivityReport is_projective(const Supermodule& m, const CheckOptions& options) {
  CheckOptions o = options;
  o.cone = Cone::strong;
  o.certified = true;
  ProjectivityReport out;
  out.evidence = check_cjt(m, o);
  switch (out.evidence.verdict) {
    case Verdict::constant:
      out.projective = out.evidence.type->a1() == 0;
      return out;
    case Verdict::not_constant:
      out.projective = false;
      return out;
    case Verdict::inconclusive:
      break;
  }
  // a point with a trivial block already rules out projectivity
  for (const auto& cr : out.evidence.charts) {
    if (cr.generic_type.a1() > 0) {
      out.projective = false;
      return out;
    }
  }
  throw ProjectivityUndecided("projectivity undecided: " + out.evidence.reason);
}

namespace {

// Jordan blocks of M at a point as small exterior(1) modules.
Supermodule block_module(Parity top, bool two_dim) {
  AlgebraSpec a = AlgebraSpec::exterior(1);
  if (!two_dim) return trivial(a, top);
  return Supermodule(a, {top, flip(top)}, {{"z1", SparseMatrix::unit(2, 2, 1, 0)}});
}

}  // namespace

JordanType endomorphism_type_at(const Supermodule& input, const OddPoint& p) {
  check_point(input, p);
  if (input.dim() <= 32) {
    Supermodule m = p.in_weak_cone() ? input : as_exterior(input);
    OddPoint q = p.in_weak_cone() ? p : as_exterior(p);
    Supermodule e = hom(m, m);
    return jordan_type_at(e, q);
  }
  SparseMatrix d = point_operator(input, p);
  GradedRank gr = graded_rank(d, input.parity());
  JordanType t = jordan_type_of(d, input.parity());
  // multiplicities of the four block shapes of M at p
  std::vector<std::pair<Supermodule, std::size_t>> blocks = {
      {block_module(Parity::even, false), t.a_ev},
      {block_module(Parity::odd, false), t.a_od},
      {block_module(Parity::even, true), gr.even_to_odd},
      {block_module(Parity::odd, true), gr.odd_to_even},
  };
  OddPoint z = OddPoint::unit(AlgebraSpec::exterior(1), "z1");
  JordanType total;
  for (const auto& [bi, mi] : blocks) {
    for (const auto& [bj, mj] : blocks) {
      if (mi == 0 || mj == 0) continue;
      JordanType h = jordan_type_at(hom(bi, bj), z);
      total.a_ev += h.a_ev * mi * mj;
      total.a_od += h.a_od * mi * mj;
      total.a2 += h.a2 * mi * mj;
    }
  }
  return total;
}

EndotrivialReport is_endotrivial(const Supermodule& m, const CheckOptions& options, std::size_t end_samples) {
  CheckOptions o = options;
  o.cone = Cone::strong;
  o.certified = true;
  EndotrivialReport out;
  out.cjt = check_cjt(m, o);
  if (out.cjt.verdict == Verdict::inconclusive) throw ProjectivityUndecided("endotriviality undecided: " + out.cjt.reason);
  out.cjt_route = out.cjt.verdict == Verdict::constant && out.cjt.type->a1() == 1;

  SuperDim sd = superdim(m);
  long s = sd.sdim();
  // sdim Hom(M, M) = sdim(M)^2 by the parity count of the tensor basis
  long hom_sdim = static_cast<long>(sd.even * sd.even + sd.odd * sd.odd) - static_cast<long>(2 * sd.even * sd.odd);
  out.superdim_consistent = hom_sdim == s * s;

  out.end_route = m.dim() > 0;
  Supermodule e = as_exterior(m);
  std::mt19937_64 rng(options.seed * 31 + 17);
  std::vector<OddPoint> points;
  for (const auto& c : small_points(e.algebra().odd_count(), {0, 1}, 8)) points.emplace_back(e.algebra(), c);
  for (std::size_t k = 0; k < end_samples; ++k) points.emplace_back(e.algebra(), random_point(rng, e.algebra().odd_count()));
  for (const auto& p : points) {
    if (!out.end_route) break;
    JordanType t = endomorphism_type_at(e, p);
    ++out.end_points;
    if (t.a1() != 1) {
      out.end_route = false;
      out.end_counterexample = OddPoint(m.algebra(), p.coeffs());
      out.end_counterexample_type = t;
    }
  }
  out.routes_agree = out.cjt_route == out.end_route;
  out.endotrivial = out.cjt_route;
  return out;
}

}  // namespace sjt
