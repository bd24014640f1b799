#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sjt/jordan.hpp"
#include "sjt/rank_certificate.hpp"
#include "sjt/supermodule.hpp"

namespace sjt {

enum class Cone { weak, strong };
enum class Verdict { constant, not_constant, inconclusive };

std::string to_string(Cone c);
std::string to_string(Verdict v);

struct CheckOptions {
  Cone cone = Cone::weak;
  bool certified = true;
  /// Points per chart for the sampled method.
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  Limits limits{};
  /// Points sampled when certification hits a resource limit.
  std::size_t fallback_samples = 1000;
};

struct ChartReport {
  std::string chart;
  std::vector<std::string> generators;
  std::size_t generic_rank = 0;
  JordanType generic_type;
  std::optional<OddPoint> generic_point;
  Verdict verdict = Verdict::inconclusive;
  /// Certified runs only.
  std::optional<RankCertificate> certificate;
};

struct CjtReport {
  Verdict verdict = Verdict::inconclusive;
  Cone cone = Cone::weak;
  bool certified_method = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<JordanType> type;
  std::optional<OddPoint> witness1, witness2;
  std::optional<JordanType> type1, type2;
  std::string reason;
  /// Verdict rests on sampling (sampled method or resource-limit fallback).
  bool probabilistic = false;
  /// Type seen at every fallback sample when certification ran out of resources.
  std::optional<JordanType> sampled_type;
  std::vector<ChartReport> charts;
};

/// Constant Jordan type on the weak cone (the 2^r charts V_eps of f_r, or
/// all of g_1 for exterior) or the strong cone (all of g_1; f_r modules must
/// be principal-block and are analysed over exterior(2r)).
CjtReport check_cjt(const Supermodule& m, const CheckOptions& options);

struct ProjectivityReport {
  bool projective = false;
  CjtReport evidence;
};
/// Strong-cone constant type with a1 = 0. Throws ProjectivityUndecided when
/// the certificate is inconclusive.
ProjectivityReport is_projective(const Supermodule& m, const CheckOptions& options = {.cone = Cone::strong});

struct EndotrivialReport {
  bool endotrivial = false;
  /// Certified strong-cone constant type with a1 = 1.
  bool cjt_route = false;
  CjtReport cjt;
  /// End(M) restricted to each sampled point is trivial plus projective.
  bool end_route = false;
  std::size_t end_points = 0;
  std::optional<OddPoint> end_counterexample;
  std::optional<JordanType> end_counterexample_type;
  /// sdim End(M) = sdim(M)^2.
  bool superdim_consistent = false;
  bool routes_agree = false;
};
EndotrivialReport is_endotrivial(const Supermodule& m, const CheckOptions& options = {.cone = Cone::strong}, std::size_t end_samples = 12);

/// Jordan type of End(M) = Hom(M, M) at a point. Builds the Hom module for
/// small M; otherwise combines the Hom modules of the Jordan blocks of M at
/// the point (k_ev, k_od and the two-dimensional blocks of either parity).
JordanType endomorphism_type_at(const Supermodule& m, const OddPoint& p);

}  // namespace sjt
