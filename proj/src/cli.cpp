#include "hint/cli.hpp"

#include <sstream>

#include "CLI11.hpp"

#include "hint/deficiency.hpp"
#include "hint/errors.hpp"
#include "hint/integral.hpp"
#include "hint/io.hpp"

namespace hint {

int run_eval(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 2) throw ParseError("eval needs a space file and a function file");
  const MeasureSpace space = parse_space(load_json_file(cfg.inputs[0]));
  const HFunction f = parse_function(load_json_file(cfg.inputs[1]));
  const IntegralResult r = integrate(space, f);
  if (cfg.json) {
    Json j{{"value", to_string(r.value.value())}};
    if (cfg.certificate) j["certificate"] = to_json(r.certificate);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << to_string(r.value.value()) << "\n";
  if (cfg.certificate) out << to_json(r.certificate).dump(2) << "\n";
  return kExitOk;
}

int run_laws(const RunConfig& cfg, const Hooks& hooks, std::ostream& out) {
  if (cfg.suite != "all" && cfg.suite != "algebra" && cfg.suite != "integral") {
    throw ParseError("unknown suite '" + cfg.suite + "'");
  }
  std::vector<LawReport> reports;
  if (cfg.suite != "integral") reports.push_back(check_algebra_laws(cfg.trials, cfg.seed, hooks));
  if (cfg.suite != "algebra") reports.push_back(check_integral_laws(cfg.trials, cfg.seed, hooks));
  bool ok = true;
  Json all = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (cfg.json) {
      all.push_back(to_json(r));
    } else {
      out << render_text(r);
    }
  }
  if (cfg.json) out << all.dump(2) << "\n";
  return ok ? kExitOk : kExitLawViolation;
}

int run_defi(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw ParseError("defi needs a scenario file");
  const Json j = load_json_file(cfg.inputs[0]);
  if (j.is_object() && j.contains("kind") && j["kind"].is_string() && j["kind"].get<std::string>() != cfg.name) {
    throw ParseError("scenario kind '" + j["kind"].get<std::string>() + "' does not match '" + cfg.name + "'");
  }
  Json result;
  if (cfg.name == "continuity") {
    result["value"] = to_string(defi_continuity(parse_continuity(j)).value());
  } else if (cfg.name == "convexity") {
    result["value"] = to_string(defi_convexity(parse_convexity(j)).value());
  } else if (cfg.name == "lineness") {
    const LinenessResult r = defi_lineness(parse_lineness(j));
    result["value"] = to_string(r.value.value());
    result["best"] = to_json(r.best);
    result["candidates"] = r.per_candidate.size();
    result["skipped"] = r.skipped;
    result["upper_bound"] = true;
    if (!cfg.json) {
      out << to_string(r.value.value()) << "\n"
          << "best: " << to_string(r.best) << "\n"
          << "(upper bound: minimum over " << r.per_candidate.size() << " candidate lines";
      if (r.skipped > 0) out << ", " << r.skipped << " skipped for irrational lengths";
      out << ")\n";
      return kExitOk;
    }
  } else {
    throw ParseError("unknown deficiency kind '" + cfg.name + "'");
  }
  if (cfg.json) {
    out << result.dump(2) << "\n";
  } else {
    out << result["value"].get<std::string>() << "\n";
  }
  return kExitOk;
}

namespace {

HValue hv(long d, long m) { return {Dim(d), ExtRational(m)}; }

bool show_check(std::ostream& out, const std::string& label, const HValue& got, const HValue& want) {
  const bool ok = got == want;
  out << "  " << label << " = " << to_string(got) << (ok ? "" : "   MISMATCH, expected " + to_string(want)) << "\n";
  return ok;
}

int demo_monotone(std::ostream& out) {
  IntervalSpace sp;
  sp.dim_offset = Dim(1);
  const MeasureSpace space = sp;
  bool ok = true;
  out << "K = (0,1), mu = (1, Lebesgue)\n";
  out << "f_n(x) = (x^(1/n), x^(1/n)) increases to f(x) = (1, 1)\n";
  for (long n = 1; n <= 3; ++n) {
    const Expr e = Expr::power(1, Rational(1, n));
    const PiecewiseFn fn{{Piece{Interval::open(0, 1), e, e}}};
    const IntegralResult r = integrate(space, fn);
    out << "n = " << n << ": pi1 = " << to_string(e) << ", ess sup pi1 = 1 (not attained on a set of positive length)\n";
    out << "  d = 1 + 1, m = 0 because {pi1 = 1} is null\n";
    for (const auto& w : r.certificate.d_witnesses) {
      out << "  witness " << to_string(w.set) << ": mu = " << to_string(w.measure.value()) << ", f >= "
          << to_string(w.lower) << "\n";
    }
    ok = show_check(out, "(H) int f_" + std::to_string(n), r.value, hv(2, 0)) && ok;
  }
  const PiecewiseFn limit{{Piece{Interval::open(0, 1), Expr::constant(1), Expr::constant(1)}}};
  out << "limit f = (1, 1): graded, (1,0) shifted by (H) int 1 dmu = (1, 1)\n";
  ok = show_check(out, "(H) int f", integrate(space, limit).value, hv(2, 1)) && ok;
  ok = show_check(out, "graded reduction", graded_integral(sp, limit), hv(2, 1)) && ok;
  out << "sup_n (H) int f_n = (2, 0) < (2, 1): monotone convergence fails\n";
  return ok ? kExitOk : kExitGoldenMismatch;
}

int demo_distributivity(std::ostream& out) {
  const HValue a = hv(1, 1), b = hv(0, 5), c = hv(0, -5);
  bool ok = true;
  out << "a = " << to_string(a) << ", b = " << to_string(b) << ", c = " << to_string(c) << "\n";
  ok = show_check(out, "b + c", add(b, c), hv(0, 0)) && ok;
  ok = show_check(out, "a(b + c)", mul(a, add(b, c)), hv(0, 0)) && ok;
  ok = show_check(out, "ab", mul(a, b), hv(1, 5)) && ok;
  ok = show_check(out, "ac", mul(a, c), hv(1, -5)) && ok;
  ok = show_check(out, "ab + ac", add(mul(a, b), mul(a, c)), hv(1, 0)) && ok;
  out << "(0, 0) != (1, 0): distributivity needs nonnegative second coordinates\n";
  return ok ? kExitOk : kExitGoldenMismatch;
}

int demo_no_approx(std::ostream& out) {
  // Dyadic staircases g_k(x) = (j/2^k, j/2^k) on [j/2^k, (j+1)/2^k).
  std::vector<SimpleFn> chain;
  for (long k = 1; k <= 3; ++k) {
    SimpleFn g;
    const long cells = 1L << k;
    for (long j = 1; j < cells; ++j) {
      const Rational lo(j, cells), hi(j + 1, cells);
      g.pieces.push_back({HValue(Dim(lo), ExtRational(lo)), MeasurableSet::of_intervals({Interval{lo, hi, true, false}})});
    }
    chain.push_back(std::move(g));
  }
  out << "f(x) = (x, x) on (0,1); chain of " << chain.size() << " dyadic step functions below f\n";
  const ApproxGapWitness w = approx_gap_witness(chain);
  out << "witness x = " << to_string(w.x) << "\n";
  for (std::size_t k = 0; k < chain.size(); ++k) {
    out << "  g_" << k + 1 << "(x) = " << to_string(chain[k].at(w.x)) << ", not strictly between ("
        << to_string(w.x) << ", 0) and (" << to_string(w.x) << ", 1)\n";
  }
  out << (w.verified ? "verified" : "NOT verified") << "\n";
  return w.verified ? kExitOk : kExitGoldenMismatch;
}

}  // namespace

int run_demo(const RunConfig& cfg, std::ostream& out) {
  if (cfg.name == "monotone-failure") return demo_monotone(out);
  if (cfg.name == "distributivity") return demo_distributivity(out);
  if (cfg.name == "no-approx") return demo_no_approx(out);
  throw ParseError("unknown demo '" + cfg.name + "'");
}

int report_error(std::exception_ptr e, std::ostream& err) {
  try {
    std::rethrow_exception(e);
  } catch (const ParseError& x) {
    err << "parse error: " << x.what() << "\n";
    return kExitParse;
  } catch (const UndefinedSum& x) {
    err << "undefined sum: " << x.what() << "\n";
    return kExitUndefinedSum;
  } catch (const UnsupportedExpression& x) {
    err << "unsupported expression: " << x.what() << "\n";
    return kExitUnsupported;
  } catch (const UnsupportedScenario& x) {
    err << "unsupported scenario: " << x.what() << "\n";
    return kExitUnsupported;
  } catch (const UnknownSet& x) {
    err << "unknown set: " << x.what() << "\n";
    return kExitUnsupported;
  } catch (const NonDisjoint& x) {
    err << "sets overlap: " << x.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& x) {
    err << "invalid input: " << x.what() << "\n";
    return kExitParse;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized Hausdorff values, h-measures and H-integrals"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* eval = app.add_subcommand("eval", "integrate a function over a space");
  eval->add_option("space", cfg.inputs, "space JSON, then function JSON")->required()->expected(2);
  eval->add_flag("--json", cfg.json, "JSON output");
  eval->add_flag("--certificate", cfg.certificate, "print the witness certificate");

  auto* laws = app.add_subcommand("laws", "run the randomized law suites");
  laws->add_option("--trials", cfg.trials, "trials per suite")->capture_default_str();
  laws->add_option("--seed", cfg.seed, "first seed")->capture_default_str();
  laws->add_option("--suite", cfg.suite, "algebra | integral | all")->capture_default_str();
  laws->add_flag("--json", cfg.json, "JSON report");

  auto* defi = app.add_subcommand("defi", "evaluate a deficiency scenario");
  defi->add_option("kind", cfg.name, "continuity | lineness | convexity")->required();
  defi->add_option("scenario", cfg.inputs, "scenario JSON")->required()->expected(1);
  defi->add_flag("--json", cfg.json, "JSON output");

  auto* demo = app.add_subcommand("demo", "replay a worked example");
  demo->add_option("name", cfg.name, "monotone-failure | distributivity | no-approx")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*eval) return run_eval(cfg, out);
    if (*laws) return run_laws(cfg, default_hooks(), out);
    if (*defi) return run_defi(cfg, out);
    return run_demo(cfg, out);
  } catch (...) {
    return report_error(std::current_exception(), err);
  }
}

}  // namespace hint
