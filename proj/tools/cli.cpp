#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "sjt/bundle.hpp"
#include "sjt/cjt.hpp"
#include "sjt/constructions.hpp"
#include "sjt/error.hpp"
#include "sjt/indecomposability.hpp"
#include "sjt/jordan.hpp"
#include "sjt/module_io.hpp"
#include "sjt/recipe.hpp"

namespace sjt::cli {

namespace {

using Json = nlohmann::ordered_json;

Json report_header(const std::string& command) {
  Json j;
  j["format"] = kReportFormat;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  return j;
}

Json type_json(const JordanType& t) {
  return Json{{"a_ev", t.a_ev}, {"a_od", t.a_od}, {"a2", t.a2}, {"a1", t.a1()}, {"text", to_string(t)}};
}

Json superdim_json(const SuperDim& d) { return Json{{"even", d.even}, {"odd", d.odd}, {"text", to_string(d)}}; }

Json point_json(const OddPoint& p) {
  Json coeffs = Json::object();
  auto names = p.algebra().odd_generators();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!sjt::is_zero(p.coeffs()[i])) coeffs[names[i]] = to_string(p.coeffs()[i]);
  }
  return Json{{"text", p.to_string()}, {"algebra", p.algebra().to_string()}, {"coeffs", coeffs}};
}

std::string to_string(RankOutcome o) {
  switch (o) {
    case RankOutcome::constant:
      return "constant";
    case RankOutcome::drop:
      return "drop";
    case RankOutcome::inconclusive:
      return "inconclusive";
  }
  return "";
}

Json certificate_json(const RankCertificate& c) {
  Json j;
  j["outcome"] = to_string(c.outcome);
  j["generic_rank"] = c.generic_rank;
  j["resource_limited"] = c.resource_limited;
  j["drop_certified"] = c.drop_certified;
  if (!c.reason.empty()) j["reason"] = c.reason;
  Json blocks = Json::array();
  for (const auto& b : c.blocks) {
    Json bj;
    bj["rows"] = b.rows;
    bj["cols"] = b.cols;
    bj["generic_rank"] = b.generic_rank;
    bj["upper_method"] = b.upper_method;
    bj["upper_checks"] = b.upper_checks;
    bj["lower_method"] = b.lower_method;
    bj["ideal_generators"] = b.lower_generators;
    bj["saturation_degree"] = b.saturation ? Json(*b.saturation) : Json(nullptr);
    bj["outcome"] = to_string(b.outcome);
    bj["resource_limited"] = b.resource_limited;
    blocks.push_back(bj);
  }
  j["blocks"] = blocks;
  return j;
}

Json cjt_json(const CjtReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["cone"] = to_string(r.cone);
  j["method"] = r.certified_method ? "certified" : "sampled";
  j["probabilistic"] = r.probabilistic;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["jordan_type"] = r.type ? type_json(*r.type) : Json(nullptr);
  Json witnesses = Json::array();
  if (r.witness1) witnesses.push_back(Json{{"point", point_json(*r.witness1)}, {"jordan_type", type_json(*r.type1)}});
  if (r.witness2) witnesses.push_back(Json{{"point", point_json(*r.witness2)}, {"jordan_type", type_json(*r.type2)}});
  j["witnesses"] = witnesses;
  if (r.sampled_type) j["sampled_type"] = type_json(*r.sampled_type);
  j["reason"] = r.reason;
  Json strata = Json::array();
  for (const auto& c : r.charts) {
    Json cj;
    cj["chart"] = c.chart;
    cj["generators"] = c.generators;
    cj["generic_rank"] = c.generic_rank;
    cj["generic_type"] = type_json(c.generic_type);
    cj["verdict"] = to_string(c.verdict);
    if (c.certificate) cj["certificate"] = certificate_json(*c.certificate);
    strata.push_back(cj);
  }
  j["strata"] = strata;
  return j;
}

void print_cjt(std::ostream& out, const CjtReport& r) {
  out << "verdict: " << to_string(r.verdict) << '\n';
  out << "cone: " << to_string(r.cone) << ", method: " << (r.certified_method ? "certified" : "sampled");
  if (r.probabilistic) out << " (probabilistic, " << r.samples << " samples)";
  out << ", seed: " << r.seed << '\n';
  if (r.type) out << "jordan type: " << to_string(*r.type) << '\n';
  if (r.witness1) out << "witness: " << r.witness1->to_string() << " -> " << to_string(*r.type1) << '\n';
  if (r.witness2) out << "witness: " << r.witness2->to_string() << " -> " << to_string(*r.type2) << '\n';
  if (r.sampled_type) out << "sampled jordan type: " << to_string(*r.sampled_type) << '\n';
  if (!r.reason.empty()) out << "reason: " << r.reason << '\n';
  for (const auto& c : r.charts) {
    out << "stratum " << c.chart << ": generic rank " << c.generic_rank << ", " << to_string(c.verdict) << '\n';
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::constant:
      return kExitTrue;
    case Verdict::not_constant:
      return kExitFalse;
    case Verdict::inconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<int, int> parse_window(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--window", "expected A..B");
  try {
    std::size_t used = 0;
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--window", "expected integers A..B");
  }
}

struct Session {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  Limits limits;

  CheckOptions check_options(Cone cone) const {
    CheckOptions o;
    o.cone = cone;
    o.limits = limits;
    return o;
  }
  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s{out, err, false, {}};
  CLI::App app{"Super Jordan types of supermodules over sl(1|1)^r and exterior algebras", "sjt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);
  app.add_option("--max-minors", s.limits.max_minors, "Largest number of minors computed symbolically")->capture_default_str();
  app.add_option("--max-spairs", s.limits.max_spairs, "Largest number of S-pairs processed by Buchberger")->capture_default_str();

  std::function<int()> action;
  std::string file, point_text, cone_text = "weak", method_text = "certify", recipe_text, output, algebra_text, generators_text,
                                window_text;
  std::size_t samples = 100, fibers = 100;
  std::uint64_t seed = 0;
  bool no_fallback = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check parities and defining relations");
  validate_cmd->add_option("file", file, "Module file")->required();
  validate_cmd->add_flag("--json", s.json, "Machine-readable report");
  validate_cmd->callback([&] {
    action = [&] {
      Supermodule m = read_module_file(file, false);
      auto violations = validate(m);
      if (s.json) {
        Json j = report_header("validate");
        j["algebra"] = m.algebra().to_string();
        j["superdim"] = superdim_json(superdim(m));
        j["valid"] = violations.empty();
        j["violations"] = violations;
        s.emit(j);
      } else {
        out << (violations.empty() ? "valid" : "invalid") << ": " << m.algebra().to_string() << " module of superdimension "
            << to_string(superdim(m)) << '\n';
        for (const auto& v : violations) out << "  " << v << '\n';
      }
      return violations.empty() ? kExitTrue : kExitValidation;
    };
  });

  auto* jt_cmd = app.add_subcommand("jordan-type", "Jordan type at a point");
  jt_cmd->add_option("file", file, "Module file")->required();
  jt_cmd->add_option("--point", point_text, "Odd point, e.g. \"x1 + 2*y1\"")->required();
  jt_cmd->add_flag("--json", s.json, "Machine-readable report");
  jt_cmd->callback([&] {
    action = [&] {
      Supermodule m = read_module_file(file);
      OddPoint p = parse_point(point_text, m.algebra());
      JordanType t = jordan_type_at(m, p);
      SuperDim f = fiber_at(m, p);
      if (s.json) {
        Json j = report_header("jordan-type");
        j["point"] = point_json(p);
        j["in_weak_cone"] = p.in_weak_cone();
        j["jordan_type"] = type_json(t);
        j["fiber"] = superdim_json(f);
        s.emit(j);
      } else {
        out << to_string(t) << '\n';
      }
      return kExitTrue;
    };
  });

  auto* cjt_cmd = app.add_subcommand("check-cjt", "Decide constant Jordan type");
  cjt_cmd->add_option("file", file, "Module file")->required();
  cjt_cmd->add_option("--cone", cone_text, "weak or strong")->check(CLI::IsMember({"weak", "strong"}))->capture_default_str();
  cjt_cmd->add_option("--method", method_text, "certify or sample")->check(CLI::IsMember({"certify", "sample"}))->capture_default_str();
  cjt_cmd->add_option("--samples", samples, "Points per stratum for sampling")->capture_default_str();
  cjt_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  cjt_cmd->add_flag("--no-fallback", no_fallback, "Exit 70 instead of sampling when certification runs out of resources");
  cjt_cmd->add_flag("--json", s.json, "Machine-readable report");
  cjt_cmd->callback([&] {
    action = [&] {
      Supermodule m = read_module_file(file);
      CheckOptions o = s.check_options(cone_text == "strong" ? Cone::strong : Cone::weak);
      o.certified = method_text == "certify";
      o.samples = samples;
      o.seed = seed;
      if (no_fallback) o.fallback_samples = 0;
      CjtReport r = check_cjt(m, o);
      if (s.json) {
        Json j = report_header("check-cjt");
        j.update(cjt_json(r));
        s.emit(j);
      } else {
        print_cjt(out, r);
      }
      if (no_fallback && r.verdict == Verdict::inconclusive && r.reason == "resource-limit") return kExitResource;
      return verdict_exit(r.verdict);
    };
  });

  auto* proj_cmd = app.add_subcommand("projective", "Decide projectivity (a1 = 0 on the whole odd part)");
  proj_cmd->add_option("file", file, "Module file")->required();
  proj_cmd->add_flag("--json", s.json, "Machine-readable report");
  proj_cmd->callback([&] {
    action = [&] {
      Supermodule m = read_module_file(file);
      std::optional<ProjectivityReport> r;
      std::string reason;
      try {
        r = is_projective(m, s.check_options(Cone::strong));
      } catch (const ProjectivityUndecided& e) {
        reason = e.what();
      }
      if (s.json) {
        Json j = report_header("projective");
        j["projective"] = r ? Json(r->projective) : Json(nullptr);
        if (r) j["evidence"] = cjt_json(r->evidence);
        if (!r) j["reason"] = reason;
        s.emit(j);
      } else if (r) {
        out << "projective: " << (r->projective ? "true" : "false") << '\n';
        print_cjt(out, r->evidence);
      } else {
        out << "projective: undecided\nreason: " << reason << '\n';
      }
      if (!r) return kExitInconclusive;
      return r->projective ? kExitTrue : kExitFalse;
    };
  });

  auto* endo_cmd = app.add_subcommand("endotrivial", "Decide endotriviality");
  endo_cmd->add_option("file", file, "Module file")->required();
  endo_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  endo_cmd->add_flag("--json", s.json, "Machine-readable report");
  endo_cmd->callback([&] {
    action = [&] {
      Supermodule m = read_module_file(file);
      CheckOptions o = s.check_options(Cone::strong);
      o.seed = seed;
      EndotrivialReport r = is_endotrivial(m, o);
      if (s.json) {
        Json j = report_header("endotrivial");
        j["endotrivial"] = r.endotrivial;
        j["cjt_route"] = r.cjt_route;
        j["end_route"] = r.end_route;
        j["routes_agree"] = r.routes_agree;
        j["superdim_consistent"] = r.superdim_consistent;
        j["end_points"] = r.end_points;
        if (r.end_counterexample) {
          j["end_counterexample"] = Json{{"point", point_json(*r.end_counterexample)}, {"jordan_type", type_json(*r.end_counterexample_type)}};
        }
        j["cjt"] = cjt_json(r.cjt);
        s.emit(j);
      } else {
        out << "endotrivial: " << (r.endotrivial ? "true" : "false") << '\n';
        out << "constant type with a1 = 1: " << (r.cjt_route ? "yes" : "no") << '\n';
        out << "End(M) = k + projective at " << r.end_points << " points: " << (r.end_route ? "yes" : "no") << '\n';
        if (r.end_counterexample) {
          out << "End(M) at " << r.end_counterexample->to_string() << ": " << to_string(*r.end_counterexample_type) << '\n';
        }
        if (!r.routes_agree) out << "warning: the two routes disagree\n";
      }
      return r.endotrivial ? kExitTrue : kExitFalse;
    };
  });

  auto* indec_cmd = app.add_subcommand("indecomposable", "Decide indecomposability through the endomorphism algebra");
  indec_cmd->add_option("file", file, "Module file")->required();
  indec_cmd->add_flag("--json", s.json, "Machine-readable report");
  indec_cmd->callback([&] {
    action = [&] {
      Supermodule m = read_module_file(file);
      IndecomposabilityReport r = indecomposability(m);
      if (s.json) {
        Json j = report_header("indecomposable");
        j["verdict"] = to_string(r.verdict);
        j["end_dim"] = r.end_dim;
        j["radical_dim"] = r.radical_dim;
        j["idempotent_rank"] = r.idempotent ? Json(rank(*r.idempotent)) : Json(nullptr);
        j["reason"] = r.reason;
        s.emit(j);
      } else {
        out << "verdict: " << to_string(r.verdict) << '\n';
        out << "even endomorphisms: " << r.end_dim << ", radical: " << r.radical_dim << '\n';
        if (r.idempotent) out << "idempotent of rank " << rank(*r.idempotent) << '\n';
        if (!r.reason.empty()) out << "reason: " << r.reason << '\n';
      }
      switch (r.verdict) {
        case Decomposition::indecomposable:
          return kExitTrue;
        case Decomposition::decomposable:
          return kExitFalse;
        case Decomposition::inconclusive:
          break;
      }
      return kExitInconclusive;
    };
  });

  auto* construct_cmd = app.add_subcommand("construct", "Build a module from a recipe");
  construct_cmd->add_option("recipe", recipe_text, "e.g. \"tensor(kac0, dual(kac0))\"")->required();
  construct_cmd->add_option("-o,--output", output, "Output file (stdout when absent)");
  construct_cmd->add_option("--algebra", algebra_text, "sl11, f<r> or exterior(<s>)");
  construct_cmd->callback([&] {
    action = [&] {
      std::optional<AlgebraSpec> a;
      if (!algebra_text.empty()) a = AlgebraSpec::parse(algebra_text);
      Supermodule m = build_recipe(recipe_text, a, [](const std::string& path) { return read_module_file(path); });
      if (output.empty()) {
        out << serialize_module(m);
      } else {
        write_module_file(output, m);
        out << "wrote " << output << ": " << m.algebra().to_string() << " module of superdimension " << to_string(superdim(m)) << '\n';
      }
      return kExitTrue;
    };
  });

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict to the subalgebra spanned by some generators");
  restrict_cmd->add_option("file", file, "Module file")->required();
  restrict_cmd->add_option("--generators", generators_text, "Comma-separated generator list")->required();
  restrict_cmd->add_option("-o,--output", output, "Output file (stdout when absent)");
  restrict_cmd->callback([&] {
    action = [&] {
      Supermodule m = restrict_to_subalgebra(read_module_file(file), split_list(generators_text));
      if (output.empty()) {
        out << serialize_module(m);
      } else {
        write_module_file(output, m);
        out << "wrote " << output << ": " << m.algebra().to_string() << " module of superdimension " << to_string(superdim(m)) << '\n';
      }
      return kExitTrue;
    };
  });

  auto* bundle_cmd = app.add_subcommand("bundle", "Certify constant fiber rank and report fibers");
  bundle_cmd->add_option("file", file, "Module file")->required();
  bundle_cmd->add_option("--fibers", fibers, "Number of sampled fibers")->capture_default_str();
  bundle_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  bundle_cmd->add_option("--window", window_text, "Degree window A..B within 0..8");
  bundle_cmd->add_flag("--json", s.json, "Machine-readable report");
  bundle_cmd->callback([&] {
    action = [&] {
      Supermodule m = read_module_file(file);
      std::optional<std::pair<int, int>> window;
      if (!window_text.empty()) window = parse_window(window_text);
      CheckOptions o = s.check_options(Cone::strong);
      o.seed = seed;
      BundleReport r = certify_bundle(m, o);
      auto samples = sample_fibers(m, fibers, seed);
      bool fibers_agree = std::all_of(samples.begin(), samples.end(), [&](const FiberReport& f) {
        return f.f1 == samples.front().f1 && f.f2 == samples.front().f2;
      });
      std::vector<WindowRow> rows;
      if (window) rows = graded_window_dims(m, window->first, window->second);
      if (s.json) {
        Json j = report_header("bundle");
        j["verdict"] = to_string(r.verdict);
        if (r.verdict == BundleVerdict::bundle) {
          j["f1"] = superdim_json(r.f1);
          j["f2"] = r.f2;
        }
        Json w = Json::array();
        for (const auto* f : {&r.witness1, &r.witness2}) {
          if (*f) w.push_back(Json{{"point", point_json((*f)->point)}, {"f1", superdim_json((*f)->f1)}, {"f2", (*f)->f2}});
        }
        j["witnesses"] = w;
        j["fibers"] = Json{{"count", samples.size()}, {"seed", seed}, {"identical", fibers_agree}};
        if (!samples.empty()) {
          j["fibers"]["f1"] = superdim_json(samples.front().f1);
          j["fibers"]["f2"] = samples.front().f2;
        }
        Json ideals = Json::array();
        for (const auto& ideal : r.certificate_ideals) {
          Json gens = Json::array();
          auto names = as_exterior(m).algebra().coordinate_names();
          if (names.size() != ideal.nvars()) names = indexed_names("c", ideal.nvars());
          for (const auto& g : ideal.generators()) gens.push_back(g.to_string(names));
          ideals.push_back(gens);
        }
        j["certificate_ideals"] = ideals;
        if (window) {
          Json table = Json::array();
          for (const auto& row : rows) table.push_back(Json{{"degree", row.degree}, {"kernel", row.kernel}, {"image", row.image}, {"f1", row.f1}});
          j["window"] = table;
        }
        j["cjt"] = cjt_json(r.cjt);
        s.emit(j);
      } else {
        out << "verdict: " << to_string(r.verdict) << '\n';
        if (r.verdict == BundleVerdict::bundle) out << "F1 rank " << to_string(r.f1) << ", F2 rank " << r.f2 << '\n';
        for (const auto* f : {&r.witness1, &r.witness2}) {
          if (*f) out << "fiber at " << (*f)->point.to_string() << ": F1 " << to_string((*f)->f1) << ", F2 " << (*f)->f2 << '\n';
        }
        if (!samples.empty()) {
          out << samples.size() << " sampled fibers " << (fibers_agree ? "identical" : "differ") << ": F1 "
              << to_string(samples.front().f1) << ", F2 " << samples.front().f2 << '\n';
        }
        for (const auto& row : rows) {
          out << "degree " << row.degree << ": ker " << row.kernel << ", im " << row.image << ", f1 " << row.f1 << '\n';
        }
      }
      switch (r.verdict) {
        case BundleVerdict::bundle:
          return kExitTrue;
        case BundleVerdict::not_bundle:
          return kExitFalse;
        case BundleVerdict::inconclusive:
          break;
      }
      return kExitInconclusive;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitTrue;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sjt::ParseError& e) {
    err << e.what() << '\n';
    return kExitParse;
  } catch (const UnknownGenerator& e) {
    err << "unknown generator: " << e.what() << '\n';
    return kExitParse;
  } catch (const ZeroPoint& e) {
    err << e.what() << '\n';
    return kExitParse;
  } catch (const sjt::ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ConeViolation& e) {
    err << "cone violation: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AlgebraMismatch& e) {
    err << "algebra mismatch: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotSubalgebra& e) {
    err << "not a subalgebra: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeTooLarge& e) {
    err << "range too large: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sjt::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitResource;
  }
}

}  // namespace sjt::cli
