// One PASS/FAIL line per acceptance criterion. With an argument N only
// criterion N runs, so ctest can list them separately.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hint/cli.hpp"
#include "hint/deficiency.hpp"
#include "hint/hvalue.hpp"
#include "hint/oracle.hpp"

using namespace hint;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

HValue hv(const std::string& s) { return parse_hvalue(s); }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

Outcome demos() {
  Outcome o;
  RunConfig cfg;
  std::ostringstream mono, dist;
  cfg.name = "monotone-failure";
  o.require(run_demo(cfg, mono) == kExitOk, "monotone-failure exit code");
  for (int n = 1; n <= 3; ++n) o.require(has(mono.str(), "int f_" + std::to_string(n) + " = (2, 0)\n"), "f_n value");
  o.require(has(mono.str(), "(H) int f = (2, 1)\n"), "limit value");
  o.require(!has(mono.str(), "MISMATCH"), "monotone-failure mismatch");
  cfg.name = "distributivity";
  o.require(run_demo(cfg, dist) == kExitOk, "distributivity exit code");
  o.require(has(dist.str(), "a(b + c) = (0, 0)\n"), "a(b+c)");
  o.require(has(dist.str(), "ab + ac = (1, 0)\n"), "ab+ac");
  return o;
}

Outcome algebra() {
  const LawReport r = check_algebra_laws(10000, 0);
  Outcome o;
  o.require(r.trials == 10000, "trial count");
  for (const char* law : {"mul-commutative", "mul-associative", "zero-product", "distributive", "series-distributive",
                          "order-compatible", "embedding"}) {
    o.require(r.checks.count(law) && r.checks.at(law) > 0, std::string("law not exercised: ") + law);
  }
  o.require(r.ok(), std::to_string(r.violation_count) + " violations");
  return o;
}

Outcome integral() {
  const LawReport r = check_integral_laws(1000, 0);
  Outcome o;
  for (const char* law : {"additivity", "homogeneity", "monotonicity", "zero-law", "sup-formula-agreement", "ordinary-agreement",
                          "isimple-minorant", "indefinite-sigma-additivity"}) {
    o.require(r.checks.count(law) && r.checks.at(law) > 0, std::string("law not exercised: ") + law);
  }
  o.require(r.ok(), std::to_string(r.violation_count) + " violations");
  return o;
}

Primitive2 pt(long x, long y) { return {PrimKind::Point, {x, y}, {x, y}, ""}; }

Outcome goldens() {
  Outcome o;
  auto check = [&](const std::string& label, const HValue& got, const HValue& hand) {
    o.require(got == hand, label + " gave " + to_string(got) + ", hand " + to_string(hand));
  };
  // hand sums: weight times integrand per cell, then dominance add
  const HValue point_w = hv("(0,1)");
  check("convex segment", defi_convexity({{{PrimKind::Segment, {0, 0}, {1, 0}, ""}}, {}}).value(), hv("(0,0)"));
  const HValue pair1 = mul(mul(point_w, point_w), hv("(1,1)"));
  check("two points", defi_convexity({{pt(0, 0), pt(1, 0)}, {}}).value(), add(pair1, pair1));
  const HValue pair2 = mul(mul(point_w, point_w), hv("(1,2)"));
  check("three points", defi_convexity({{pt(0, 0), pt(1, 0), pt(2, 0)}, {}}).value(),
        sum_finite(std::vector<HValue>{pair1, pair1, pair1, pair1, pair2, pair2}));
  ClusterScenario jump;
  jump.jumps.push_back({0, HNonNeg(hv("(0,1)"))});
  check("single jump", defi_continuity(jump).value(), mul(hv("(0,1)"), point_w));
  ClusterScenario dirichlet;
  dirichlet.global = GlobalComponent{"real_line", HNonNeg(hv("(0,1)"))};
  check("dirichlet", defi_continuity(dirichlet).value(), mul(hv("(0,1)"), hv("(1,inf)")));
  const LinenessScenario lp{{{PrimKind::Line, {-1, 0}, {1, 0}, ""}, pt(0, 1)}, {}};
  check("line and point", defi_lineness(lp).value.value(), mul(hv("(0,1)"), point_w));
  return o;
}

Outcome mutants() {
  Outcome o;
  struct M {
    const char* name;
    Hooks hooks;
    bool algebra;
  };
  for (const M& m : {M{"add", mutant_add_hooks(), true}, M{"measure", mutant_measure_hooks(), false},
                     M{"integrate", mutant_integrate_hooks(), false}}) {
    const LawReport r = m.algebra ? check_algebra_laws(1000, 0, m.hooks) : check_integral_laws(200, 0, m.hooks);
    o.require(!r.ok() && !r.violations.empty(), std::string(m.name) + " mutant not caught");
    if (!r.violations.empty()) {
      const auto& v = r.violations.front();
      const LawReport again = m.algebra ? check_algebra_laws(1, v.seed, m.hooks) : check_integral_laws(1, v.seed, m.hooks);
      o.require(!again.ok(), std::string(m.name) + " reproducer seed " + std::to_string(v.seed) + " does not reproduce");
      o.note += (o.note.empty() ? "" : ", ") + std::string(m.name) + ": " + std::to_string(r.violation_count) +
                " (seed " + std::to_string(v.seed) + ")";
    }
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  Rng rng(0);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const HValue v = random_hvalue(rng, i % 2 ? Profile::WithInfinities : Profile::Signed);
    if (parse_hvalue(to_string(v)) != v) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " values changed");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0: no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "worked examples (demos)", 1.0, demos},
      {2, "algebra laws, 10000 trials, seed 0", 30.0, algebra},
      {3, "integral laws, 1000 trials", 60.0, integral},
      {4, "deficiency golden values", 0.0, goldens},
      {5, "mutant detection", 0.0, mutants},
      {6, "hvalue render/parse round trip, 10000 values", 0.0, round_trip},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_ok = true;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s >= c.limit_s) o.require(false, "over the time limit");
    all_ok = all_ok && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << s << " s]"
              << (o.note.empty() ? "" : "  " + o.note) << std::endl;
  }
  return all_ok ? 0 : 1;
}
