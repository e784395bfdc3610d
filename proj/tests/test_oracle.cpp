#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hint/integral.hpp"
#include "hint/oracle.hpp"

using namespace hint;

TEST_SUITE("oracle") {
  TEST_CASE("generators are deterministic") {
    for (auto p : {Profile::FiniteNonNeg, Profile::NonNeg, Profile::Signed, Profile::WithInfinities}) {
      for (std::uint64_t s = 0; s < 50; ++s) CHECK(random_hvalue(s, p) == random_hvalue(s, p));
    }
    const AtomSpace a = random_atom_space(7, 4), b = random_atom_space(7, 4);
    REQUIRE(a.atoms() == b.atoms());
    for (const auto& id : a.atoms()) CHECK(a.weight(id) == b.weight(id));
    CHECK_THROWS_AS(random_atom_space(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_atom_space(1, 7), std::invalid_argument);
  }

  TEST_CASE("profiles cover their ranges") {
    bool neg = false, inf = false, neg_inf = false;
    for (std::uint64_t s = 0; s < 2000; ++s) {
      const HValue f = random_hvalue(s, Profile::FiniteNonNeg);
      CHECK(f.m.is_finite());
      CHECK(f.m.sign() >= 0);
      CHECK(random_hvalue(s, Profile::NonNeg).m.sign() >= 0);
      CHECK(random_hvalue(s, Profile::Signed).m.is_finite());
      neg = neg || random_hvalue(s, Profile::Signed).m.sign() < 0;
      const HValue w = random_hvalue(s, Profile::WithInfinities);
      inf = inf || w.m == ExtRational::pos_inf();
      neg_inf = neg_inf || w.m == ExtRational::neg_inf();
    }
    CHECK(neg);
    CHECK(inf);
    CHECK(neg_inf);
  }

  TEST_CASE("set partitions") {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (std::size_t n = 0; n <= 6; ++n) CHECK(set_partitions(n).size() == bell[n]);
    std::set<std::vector<std::vector<std::size_t>>> distinct;
    for (const auto& p : set_partitions(4)) distinct.insert(p);
    CHECK(distinct.size() == 15);
  }

  TEST_CASE("brute force matches hand values") {
    AtomSpace sp;
    sp.add_atom("x", N("(1/2, 3)"));
    sp.add_atom("y", N("(0, 2)"));
    const SimpleFn f = simple_from_values({{"x", H("(1/2,2)")}, {"y", H("(1,5)")}});
    const auto mu = measure_of(MeasureSpace(sp));
    CHECK(sup_formula_brute_force(sp, f, mu) == H("(1, 16)"));
    CHECK(sup_formula_brute_force(sp, SimpleFn{}, mu) == H("(0, 0)"));
    const SimpleFn top = simple_from_values({{"x", H("(1,1)")}});
    CHECK(sup_formula_brute_force(sp, top, mu) == H("(3/2, 3)"));
  }

  TEST_CASE("default hooks pass") {
    const LawReport a = check_algebra_laws(500, 0);
    CHECK(a.ok());
    CHECK(a.trials == 500);
    CHECK(a.checks.at("mul-associative") == 500);
    const LawReport i = check_integral_laws(100, 0);
    CHECK(i.ok());
    for (const auto& law : i.laws) CHECK_MESSAGE(i.checks.count(law) == 1, law);
  }

  TEST_CASE("zero trials") {
    const LawReport r = check_algebra_laws(0, 5);
    CHECK(r.ok());
    CHECK(r.violations.empty());
    for (const auto& [law, n] : r.checks) CHECK_MESSAGE(n == 0, law);
    CHECK(check_integral_laws(0, 5).ok());
  }

  TEST_CASE("mutants are caught with reproducible seeds") {
    struct Case {
      const char* name;
      Hooks hooks;
      bool algebra;
    };
    for (const Case& c : {Case{"add", mutant_add_hooks(), true}, Case{"measure", mutant_measure_hooks(), false},
                          Case{"integrate", mutant_integrate_hooks(), false}}) {
      CAPTURE(c.name);
      const LawReport r = c.algebra ? check_algebra_laws(200, 11, c.hooks) : check_integral_laws(200, 11, c.hooks);
      REQUIRE(!r.ok());
      REQUIRE(!r.violations.empty());
      CHECK(r.violations.size() <= r.violation_count);
      const Violation& v = r.violations.front();
      CHECK(v.seed >= 11);
      CHECK(v.seed < 11 + 200);
      const LawReport again = c.algebra ? check_algebra_laws(1, v.seed, c.hooks) : check_integral_laws(1, v.seed, c.hooks);
      REQUIRE(!again.ok());
      bool same_law = false;
      for (const auto& w : again.violations) same_law = same_law || w.law == v.law;
      CHECK(same_law);
    }
  }

  TEST_CASE("minorant sampling") {
    const AtomSpace sp = random_atom_space(3, 4);
    Rng rng(3);
    const SimpleFn f = random_simple(rng, sp, true);
    for (int k = 0; k < 20; ++k) CHECK(pointwise_le(sp, random_minorant(rng, sp, f, true), f));
    CHECK(minorant_sample_check(sp, f, 100, 9).ok());
  }
}
