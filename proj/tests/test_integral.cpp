#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hint/errors.hpp"
#include "hint/function.hpp"
#include "hint/integral.hpp"

using namespace hint;

namespace {

MeasureSpace lebesgue(long d0) {
  IntervalSpace sp;
  sp.dim_offset = Dim(d0);
  return sp;
}

PiecewiseFn one_piece(const Expr& pi1, const Expr& pi2) { return {{Piece{Interval::open(0, 1), pi1, pi2}}}; }

AtomSpace xy_space() {
  AtomSpace sp;
  sp.add_atom("x", N("(1/2, 3)"));
  sp.add_atom("y", N("(0, 2)"));
  return sp;
}

SimpleFn on_atoms(std::vector<std::pair<std::string, HValue>> v) { return simple_from_values(v); }

bool contains(const MeasurableSet& s, const Rational& x) {
  for (const auto& i : s.intervals) {
    if (i.contains(x)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("integral") {
  TEST_CASE("sublevel sets on atoms") {
    const MeasureSpace sp = xy_space();
    const SimpleFn f = on_atoms({{"x", H("(1,2)")}, {"y", H("(0,5)")}});
    CHECK(sublevel_set(sp, f, H("(1,0)")).names == std::vector<std::string>{"y"});
    CHECK(sublevel_set(sp, f, H("(0,0)")).empty());
  }

  TEST_CASE("sublevel set of (x, x) against a rational grid") {
    const MeasureSpace sp = lebesgue(1);
    const PiecewiseFn f = one_piece(Expr::affine(0, 1), Expr::affine(0, 1));
    for (const std::string v : {"(1/2, 0)", "(1/2, 1/2)", "(1/2, 1)", "(1/3, inf)", "(0,0)", "(2, 0)"}) {
      const HValue bound = H(v);
      const MeasurableSet s = sublevel_set(sp, f, bound);
      for (long k = 1; k < 128; ++k) {
        Rational x(k, 128);
        x.canonicalize();
        const HValue fx{Dim(x), ExtRational(x)};
        CHECK_MESSAGE(contains(s, x) == (fx < bound), "v=" << v << " x=" << to_string(x));
      }
    }
    const MeasurableSet half = sublevel_set(sp, f, H("(1/2, 0)"));
    REQUIRE(half.intervals.size() == 1);
    CHECK(half.intervals[0] == Interval::open(0, Q("1/2")));
    CHECK(sublevel_set(sp, f, H("(0,0)")).empty());
  }

  TEST_CASE("sublevel sets needing irrational endpoints are refused") {
    const MeasureSpace sp = lebesgue(1);
    const PiecewiseFn f = one_piece(Expr::power(1, Q("2/3")), Expr::constant(1));
    CHECK_THROWS_AS(sublevel_set(sp, f, H("(1/2, 0)")), UnsupportedExpression);
    // (1/2)^(3/2) is irrational, (1/4)^(3/2) = 1/8 is not
    const auto s = sublevel_set(sp, f, H("(1/4, 0)"));
    REQUIRE(s.intervals.size() == 1);
    CHECK(s.intervals[0] == Interval::open(0, Q("1/8")));
  }

  TEST_CASE("pointwise sums") {
    const MeasureSpace sp = lebesgue(1);
    auto constant = [](const char* d, const char* m) { return one_piece(Expr::constant(Q(d)), Expr::constant(Q(m))); };
    auto at = [](const HFunction& h, const Rational& x) { return *std::get<PiecewiseFn>(h).at(x); };

    const HFunction same = pointwise_add_fn(sp, constant("1", "2"), constant("1", "3"));
    CHECK(std::get<PiecewiseFn>(same).pieces.size() == 1);
    CHECK(at(same, Q("1/3")) == H("(1,5)"));

    const HFunction dom = pointwise_add_fn(sp, constant("1", "2"), constant("2", "7"));
    CHECK(std::get<PiecewiseFn>(dom).pieces.size() == 1);
    CHECK(at(dom, Q("1/3")) == H("(2,7)"));

    // pi1 = x against (1/2, 1): oracle = add() of the two values at probes
    const PiecewiseFn lin = one_piece(Expr::affine(0, 1), Expr::constant(2));
    const PiecewiseFn c = constant("1/2", "1");
    const HFunction sum = pointwise_add_fn(sp, lin, c);
    for (const char* x : {"1/10", "1/4", "1/2", "3/5", "9/10"}) {
      const Rational q = Q(x);
      CHECK(at(sum, q) == add(*lin.at(q), *c.at(q)));
    }
    bool split_at_half = false;
    for (const auto& p : std::get<PiecewiseFn>(sum).pieces) split_at_half = split_at_half || p.set.hi == Q("1/2");
    CHECK(split_at_half);
  }

  TEST_CASE("simple integrals") {
    const MeasureSpace sp = xy_space();
    const SimpleFn f = on_atoms({{"x", H("(1/2,2)")}, {"y", H("(1,5)")}});
    // oracle: (1/2,2)(1/2,3) + (1,5)(0,2) = (1,6) + (1,10)
    const HValue hand = add(H("(1,6)"), H("(1,10)"));
    CHECK(hand == H("(1,16)"));
    CHECK(integrate_simple(sp, f).value() == hand);
    CHECK(integrate_simple(sp, SimpleFn{}).value() == H("(0,0)"));
    // (3/4, 0) on a set of length 1/4 under (1, Lebesgue)
    const SimpleFn step{{{H("(3/4, 0)"), MeasurableSet::of_intervals({Interval::open(0, Q("1/4"))})}}};
    CHECK(integrate_simple(lebesgue(1), step).value() == H("(7/4, 0)"));
    const SimpleFn overlap{{{H("(1,1)"), MeasurableSet::of_names({"x"})}, {H("(1,2)"), MeasurableSet::of_names({"x"})}}};
    CHECK_THROWS_AS(integrate_simple(sp, overlap), NonDisjoint);
    CHECK_THROWS_AS(integrate_simple(sp, on_atoms({{"z", H("(1,1)")}})), UnknownSet);
  }

  TEST_CASE("general integral on the unit interval") {
    const MeasureSpace sp = lebesgue(1);
    for (long n = 1; n <= 5; ++n) {
      const Expr e = Expr::power(1, Rational(1, n));
      const PiecewiseFn f = one_piece(e, e);
      const IntegralResult r = integrate(sp, f);
      CHECK(r.value.value() == H("(2, 0)"));
      CHECK(r.certificate.m_witnesses.empty());
      CHECK(r.certificate.d_witnesses.size() == 3);
      CHECK(check_certificate(sp, f, r.certificate).empty());
    }
    const PiecewiseFn one = one_piece(Expr::constant(1), Expr::constant(1));
    const IntegralResult r1 = integrate(sp, one);
    CHECK(r1.value.value() == H("(2, 1)"));
    CHECK(check_certificate(sp, one, r1.certificate).empty());
    // oracle: graded reduction with int_0^1 x dx = 1/2
    const PiecewiseFn half = one_piece(Expr::constant(Q("1/2")), Expr::affine(0, 1));
    CHECK(integrate(sp, half).value.value() == H("(3/2, 1/2)"));
  }

  TEST_CASE("general integral edge cases") {
    const MeasureSpace sp = lebesgue(1);
    CHECK(integrate(sp, PiecewiseFn{}).value.value() == H("(0,0)"));
    // a spike on a point does not count
    const PiecewiseFn spike{{Piece{Interval::point(Q("1/2")), Expr::constant(5), Expr::constant(1)}}};
    CHECK(integrate(sp, spike).value.value() == H("(0,0)"));
    // pi1 = 0 with positive pi2 lands at the space's own dimension
    const PiecewiseFn flat = one_piece(Expr(), Expr::affine(0, 1));
    const IntegralResult rf = integrate(sp, flat);
    CHECK(rf.value.value() == H("(1, 1/2)"));
    CHECK(check_certificate(sp, flat, rf.certificate).empty());
    // decreasing pi1 on part of the space
    const PiecewiseFn dec{{Piece{Interval::open(0, Q("1/2")), Expr::affine(1, -1), Expr::constant(3)}}};
    const IntegralResult rd = integrate(sp, dec);
    CHECK(rd.value.value() == H("(2, 0)"));
    CHECK(check_certificate(sp, dec, rd.certificate).empty());
    CHECK_THROWS_AS(integrate(sp, one_piece(Expr::polynomial(Polynomial({0, 0, 1})), Expr::constant(1))),
                    UnsupportedExpression);
  }

  TEST_CASE("graded integral") {
    IntervalSpace zero;
    CHECK(graded_integral(zero, one_piece(Expr(), Expr::constant(1))).value() == H("(0, 1)"));
    IntervalSpace unit;
    unit.dim_offset = Dim(1);
    const PiecewiseFn one = one_piece(Expr::constant(1), Expr::constant(1));
    CHECK(graded_integral(unit, one).value() == H("(2, 1)"));
    const PiecewiseFn half = one_piece(Expr::constant(Q("1/2")), Expr::affine(0, 1));
    CHECK(graded_integral(unit, half).value() == H("(3/2, 1/2)"));
    CHECK(graded_integral(unit, half) == integrate(unit, half).value);
    const PiecewiseFn no_mass = one_piece(Expr::constant(Q("1/2")), Expr());
    CHECK(graded_integral(unit, no_mass) == integrate(unit, no_mass).value);
    const PiecewiseFn partial{{Piece{Interval::open(0, Q("1/2")), Expr::constant(1), Expr::constant(1)}}};
    CHECK_THROWS_AS(graded_integral(unit, partial), std::invalid_argument);
  }

  TEST_CASE("ordinary measure theorem") {
    const MeasureSpace nu = scaled_embedding(
        Dim(0), AtomMeasure{{{"a", ExtRational(Q("1/2"))}, {"b", ExtRational(Q("1/3"))}, {"c", ExtRational(Q("1/6"))}}});
    const SimpleFn f = on_atoms({{"a", H("(1,2)")}, {"b", H("(1,3)")}, {"c", H("(0,7)")}});
    // oracle: (1,1) + (1,1) + (0,7/6)
    const HValue hand = sum_finite(std::vector<HValue>{H("(1,1)"), H("(1,1)"), H("(0,7/6)")});
    CHECK(hand == H("(1,2)"));
    CHECK(integrate_ordinary(nu, f).value() == hand);
    CHECK(integrate(nu, f).value.value() == hand);

    const MeasureSpace leb = lebesgue(0);
    const PiecewiseFn c = one_piece(Expr(), Expr::constant(Q("5/3")));
    CHECK(integrate_ordinary(leb, c).value() == H("(0, 5/3)"));

    const PiecewiseFn spike{{Piece{Interval::open(0, Q("1/2")), Expr::constant(3), Expr::constant(1)},
                             Piece{Interval::point(Q("1/2")), Expr::constant(5), Expr::constant(1)},
                             Piece{Interval::open(Q("1/2"), 1), Expr::constant(3), Expr::constant(2)}}};
    CHECK(integrate_ordinary(leb, spike).value() == H("(3, 3/2)"));
    CHECK(integrate(leb, spike).value.value() == H("(3, 3/2)"));
    CHECK_THROWS_AS(integrate_ordinary(lebesgue(1), spike), std::invalid_argument);
  }

  TEST_CASE("essential supremum") {
    IntervalSpace sp;
    CHECK(ess_sup(sp, {{Interval::open(0, Q("1/2")), Expr::constant(3)}, {Interval{Q("1/2"), 1, true, false}, Expr::constant(5)}}) ==
          ExtRational(5));
    CHECK(ess_sup(sp, {{Interval::point(Q("1/2")), Expr::constant(5)},
                       {Interval::open(0, Q("1/2")), Expr::constant(3)},
                       {Interval::open(Q("1/2"), 1), Expr::constant(3)}}) == ExtRational(3));
    CHECK(ess_sup(sp, {{Interval::open(0, 1), Expr::constant(2)}}) == ExtRational(2));
    AtomSpace atoms;
    atoms.add_atom("p", N("(0, 1)"));
    atoms.add_atom("q", N("(0, 0)"));
    CHECK(ess_sup(atoms, {{"p", ExtRational(2)}, {"q", ExtRational(9)}}) == ExtRational(2));
  }

  TEST_CASE("indefinite integral") {
    const SetFunction nu = indefinite(lebesgue(0), one_piece(Expr(), Expr::constant(1)));
    CHECK(nu(MeasurableSet::of_intervals({Interval::open(0, Q("2/7"))})) == H("(0, 2/7)"));
    const MeasureSpace sp = xy_space();
    const SimpleFn f = on_atoms({{"x", H("(1/2,2)")}, {"y", H("(1,5)")}});
    const SetFunction g = indefinite(sp, f);
    CHECK(g(MeasurableSet::of_names({"x"})) == H("(1, 6)"));
    CHECK(g(MeasurableSet::empty_set()) == H("(0,0)"));
    CHECK(validate_h_measure(g, {MeasurableSet::of_names({"x"}), MeasurableSet::of_names({"y"})}));
  }

  TEST_CASE("i-simple minorants") {
    AtomSpace sp;
    sp.add_atom("p", N("(1, inf)"));
    sp.add_atom("q", N("(0, inf)"));
    const SimpleFn f = on_atoms({{"p", H("(1,2)")}, {"q", H("(1/2,1)")}});
    std::vector<SimpleFn> samples{on_atoms({{"p", H("(1/2, inf)")}}), on_atoms({{"q", H("(1/2, 1)")}}), f};
    const auto ok = isimple_sup_gap(sp, f, samples);
    CHECK(ok.violations.empty());
    CHECK(ok.largest == ok.integral);
    const auto zero = isimple_sup_gap(sp, SimpleFn{}, {SimpleFn{}});
    CHECK(zero.largest == H("(0,0)"));
    // g is not below f at p
    const auto bad = isimple_sup_gap(sp, f, {on_atoms({{"p", H("(1, 3)")}})});
    CHECK(bad.violations.size() == 1);
  }

  TEST_CASE("no simple chain approximates (x, x)") {
    CHECK(approx_gap_witness({}).x == Q("1/2"));
    CHECK(approx_gap_witness({}).verified);
    const SimpleFn zero{};
    CHECK(approx_gap_witness({zero}).verified);
    SimpleFn two_dims{{{H("(1/4, 1)"), MeasurableSet::of_intervals({Interval::open(0, Q("1/2"))})},
                       {H("(1/2, 1)"), MeasurableSet::of_intervals({Interval{Q("1/2"), 1, true, false}})}}};
    SimpleFn half{{{H("(1/2, 1/2)"), MeasurableSet::of_intervals({Interval::open(0, 1)})}}};
    const auto w = approx_gap_witness({two_dims, half});
    CHECK(w.x != Q("1/4"));
    CHECK(w.x != Q("1/2"));
    CHECK(w.x == Q("1/3"));
    CHECK(w.verified);
  }
}
