#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hint/cli.hpp"
#include "hint/errors.hpp"
#include "hint/io.hpp"

using namespace hint;

namespace {

std::string data(const std::string& f) { return std::string(HINT_TEST_DATA) + "/" + f; }

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hint");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

template <class E>
int code_of(const E& e) {
  std::ostringstream sink;
  return report_error(std::make_exception_ptr(e), sink);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("json syntax errors carry a position") {
    try {
      parse_json_text(R"js({"a": 1,, "b": 2})js");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 8);
    }
    CHECK_THROWS_AS(load_json_file(data("malformed.json")), ParseError);
    CHECK_THROWS_AS(load_json_file(data("missing.json")), ParseError);
  }

  TEST_CASE("spaces") {
    const MeasureSpace sp = parse_space(load_json_file(data("unit_space.json")));
    const auto& iv = std::get<IntervalSpace>(sp);
    CHECK(iv.dim_offset == Dim(1));
    CHECK(iv.hi == 1);
    const MeasureSpace atoms = parse_space(load_json_file(data("atom_space.json")));
    CHECK(std::get<AtomSpace>(atoms).weight("x") == N("(1/2, 3)"));
    const MeasureSpace cat = parse_space(parse_json_text(R"js({"kind": "catalog"})js"));
    CHECK(measure(cat, MeasurableSet::of_names({"unit_segment"})) == N("(1, 1)"));

    CHECK_THROWS_WITH_AS(parse_space(parse_json_text(R"js({"kind": "interval", "lo": 0.5})js")), doctest::Contains("space.lo"),
                         ParseError);
    CHECK_THROWS_AS(parse_space(parse_json_text(R"js({"kind": "interval", "lo": "1", "hi": "0"})js")), ParseError);
    CHECK_THROWS_AS(parse_space(parse_json_text(R"js({"kind": "atoms", "atoms": {"x": "(0, -1)"}})js")), ParseError);
    CHECK_THROWS_AS(parse_space(parse_json_text(R"js({"kind": "sphere"})js")), ParseError);
    CHECK_THROWS_AS(parse_space(parse_json_text(R"js({"kind": "interval", "density": ["-1"]})js")), UnsupportedExpression);
  }

  TEST_CASE("expressions and functions") {
    CHECK(parse_expr(parse_json_text(R"js({"kind": "affine", "a": "1", "b": "-1"})js")).eval(Q("1/4")).value() == Q("3/4"));
    CHECK(parse_expr(parse_json_text(R"js({"kind": "pow", "coef": "2", "exp": "1/2"})js")).eval(Q("1/4")).value() == 1);
    CHECK(parse_expr(parse_json_text(R"js({"kind": "poly", "coeffs": ["1", "0", "3"]})js")).eval(2).value() == 13);
    CHECK_THROWS_AS(parse_expr(parse_json_text(R"js({"kind": "exp"})js")), ParseError);

    const HFunction f = parse_function(load_json_file(data("root_function.json")));
    CHECK(*std::get<PiecewiseFn>(f).at(Q("1/4")) == H("(1/2, 1/2)"));
    const HFunction g = parse_function(load_json_file(data("atom_function.json")));
    CHECK(std::get<SimpleFn>(g).at("y") == H("(1, 5)"));
    CHECK_THROWS_AS(parse_function(parse_json_text(R"js({"simple": [{"coeff": "(1, 2)"}]})js")), ParseError);
  }

  TEST_CASE("renderings") {
    const MeasurableSet s{{"a"}, {Interval::point(Q("1/2")), Interval::open(0, Q("1/3"))}};
    const Json j = to_json(s);
    CHECK(j.size() == 3);
    CHECK(parse_set(j) == s);

    const MeasureSpace sp = parse_space(load_json_file(data("unit_space.json")));
    const IntegralResult r = integrate(sp, parse_function(load_json_file(data("root_function.json"))));
    const Json c = to_json(r.certificate);
    CHECK(c["value"] == "(2, 0)");
    CHECK(c["d_witnesses"].size() == 3);

    const LawReport empty = check_algebra_laws(0, 0);
    CHECK(to_json(empty)["seeds"].is_null());
    const Json full = to_json(check_algebra_laws(3, 10));
    CHECK(full["seeds"][0] == 10);
    CHECK(full["seeds"][1] == 12);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("eval") {
    const Run r = cli({"eval", data("unit_space.json"), data("root_function.json")});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "(2, 0)\n");
    CHECK(cli({"eval", data("unit_space.json"), data("constant_function.json")}).out == "(2, 1)\n");
    CHECK(cli({"eval", data("atom_space.json"), data("atom_function.json")}).out == "(1, 16)\n");
    const Run j = cli({"eval", "--json", "--certificate", data("unit_space.json"), data("root_function.json")});
    REQUIRE(j.code == kExitOk);
    const Json parsed = parse_json_text(j.out);
    CHECK(parsed["value"] == "(2, 0)");
    CHECK(parsed["certificate"]["d_witnesses"].size() == 3);
  }

  TEST_CASE("exit codes") {
    CHECK(cli({"eval", data("unit_space.json"), data("malformed.json")}).code == kExitParse);
    CHECK(cli({"eval", data("unit_space.json"), data("quadratic_function.json")}).code == kExitUnsupported);
    CHECK(cli({"eval", data("unit_space.json")}).code == kExitParse);
    CHECK(cli({"frobnicate"}).code == kExitParse);
    CHECK(cli({"demo", "nope"}).code == kExitParse);
    CHECK(cli({"defi", "convexity", data("continuity_dirichlet.json")}).code == kExitParse);

    CHECK(code_of(ParseError("x")) == kExitParse);
    CHECK(code_of(UnsupportedExpression("x")) == kExitUnsupported);
    CHECK(code_of(UnsupportedScenario("x")) == kExitUnsupported);
    CHECK(code_of(NonDisjoint("x")) == kExitUnsupported);
    CHECK(code_of(UndefinedSum("x")) == kExitUndefinedSum);
    CHECK(code_of(std::domain_error("x")) == kExitParse);
  }

  TEST_CASE("defi") {
    CHECK(cli({"defi", "continuity", data("continuity_dirichlet.json")}).out == "(1, inf)\n");
    CHECK(cli({"defi", "convexity", data("convexity_three_points.json")}).out == "(1, 8)\n");
    const Run l = cli({"defi", "lineness", data("lineness_line_point.json")});
    CHECK(l.code == kExitOk);
    CHECK(l.out.rfind("(0, 1)\n", 0) == 0);
    CHECK(l.out.find("upper bound") != std::string::npos);
    const Run lj = cli({"defi", "lineness", "--json", data("lineness_line_point.json")});
    CHECK(parse_json_text(lj.out)["upper_bound"] == true);
  }

  TEST_CASE("demos") {
    for (const char* d : {"monotone-failure", "distributivity", "no-approx"}) {
      const Run r = cli({"demo", d});
      CHECK_MESSAGE(r.code == kExitOk, d << "\n" << r.out);
    }
    CHECK(cli({"demo", "monotone-failure"}).out.find("(2, 1)") != std::string::npos);
    CHECK(cli({"demo", "no-approx"}).out.find("witness x = 1/3") != std::string::npos);
  }

  TEST_CASE("laws") {
    const Run zero = cli({"laws", "--trials", "0"});
    CHECK(zero.code == kExitOk);
    CHECK(cli({"laws", "--suite", "algebra", "--trials", "50", "--seed", "4"}).code == kExitOk);
    CHECK(cli({"laws", "--suite", "bogus", "--trials", "1"}).code == kExitParse);
    const Run j = cli({"laws", "--trials", "5", "--json"});
    CHECK(parse_json_text(j.out).size() == 2);

    RunConfig cfg;
    cfg.suite = "algebra";
    cfg.trials = 100;
    std::ostringstream out;
    CHECK(run_laws(cfg, mutant_add_hooks(), out) == kExitLawViolation);
    CHECK(out.str().find("seed") != std::string::npos);
  }
}
