#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hint/errors.hpp"
#include "hint/hvalue.hpp"

using namespace hint;

TEST_SUITE("hvalue") {
  TEST_CASE("ordering is lexicographic") {
    CHECK(compare(H("(1,3)"), H("(2,5)")) == std::strong_ordering::less);
    CHECK(compare(H("(0,5)"), H("(0,5)")) == std::strong_ordering::equal);
    CHECK(compare(H("(1,inf)"), H("(1,-inf)")) == std::strong_ordering::greater);
    CHECK(H("(1/2, 100)") < H("(1, -inf)"));
    CHECK(H("(1, -inf)") < H("(1, -7/3)"));
  }

  TEST_CASE("dominance addition") {
    CHECK(add(H("(1,3)"), H("(2,5)")) == H("(2,5)"));
    CHECK(add(H("(1,3)"), H("(1,4)")) == H("(1,7)"));
    CHECK(add(H("(1,inf)"), H("(1,2)")) == H("(1,inf)"));
    CHECK_THROWS_AS(add(H("(1,inf)"), H("(1,-inf)")), UndefinedSum);
    // different dimensions never clash, even with opposite infinities
    CHECK(add(H("(2,inf)"), H("(1,-inf)")) == H("(2,inf)"));
  }

  TEST_CASE("scalar multiplication") {
    CHECK(scalar_mul(2, H("(1,3)")) == H("(1,6)"));
    CHECK(scalar_mul(0, H("(5,inf)")) == H("(0,0)"));
    CHECK(scalar_mul(-1, H("(1,4)")) == H("(1,-4)"));
    CHECK(scalar_mul(-1, H("(1,inf)")) == H("(1,-inf)"));
  }

  TEST_CASE("pair product") {
    CHECK(mul(H("(1,1)"), H("(0,5)")) == H("(1,5)"));
    CHECK(mul(H("(0,0)"), H("(3,inf)")) == H("(0,0)"));
    CHECK(mul(H("(1,0)"), H("(2,inf)")) == H("(3,0)"));
    CHECK(mul(H("(1/2,-2)"), H("(1/3,-inf)")) == H("(5/6,inf)"));
  }

  TEST_CASE("the distributivity counterexample holds verbatim") {
    const HValue a = H("(1,1)");
    CHECK(mul(a, add(H("(0,5)"), H("(0,-5)"))) == H("(0,0)"));
    CHECK(add(mul(a, H("(0,5)")), mul(a, H("(0,-5)"))) == H("(1,0)"));
  }

  TEST_CASE("finite sums") {
    std::vector<HValue> xs{H("(1,2)"), H("(1,3)"), H("(0,9)")};
    CHECK(sum_finite(xs) == H("(1,5)"));
    CHECK(sum_finite(std::vector<HValue>{}) == H("(0,0)"));
    CHECK(sum_finite(std::vector<HValue>{H("(2,1)"), H("(1,inf)")}) == H("(2,1)"));
  }

  TEST_CASE("described series against partial sums") {
    // oracle: fold `add` over prefix + k tail copies and watch it settle
    auto partial = [](const SeqDescriptor& s, int k) {
      HValue acc;
      for (const auto& t : s.prefix) acc = add(acc, t);
      for (int i = 0; i < k; ++i) acc = add(acc, s.tail);
      return acc;
    };
    SeqDescriptor finite{{N("(1,2)"), N("(2,3)")}, N("(0,0)")};
    CHECK(sum_described(finite).value() == H("(2,3)"));
    CHECK(partial(finite, 50) == H("(2,3)"));

    SeqDescriptor lower_tail{{N("(2,3)")}, N("(1,1)")};
    CHECK(partial(lower_tail, 10) == H("(2,3)"));
    CHECK(partial(lower_tail, 1000) == H("(2,3)"));
    CHECK(sum_described(lower_tail).value() == H("(2,3)"));

    SeqDescriptor same_dim_tail{{N("(2,3)")}, N("(2,1)")};
    // partial sums (2, 3 + k) grow without bound
    CHECK(partial(same_dim_tail, 10) == H("(2,13)"));
    CHECK(partial(same_dim_tail, 1000) == H("(2,1003)"));
    CHECK(sum_described(same_dim_tail).value() == H("(2,inf)"));

    SeqDescriptor zero_mass_tail{{N("(1,2)")}, N("(3,0)")};
    CHECK(sum_described(zero_mass_tail).value() == H("(3,0)"));
  }

  TEST_CASE("sup of a finite list") {
    CHECK(sup_finite(std::vector<HValue>{H("(1,2)"), H("(0,inf)")}) == H("(1,2)"));
    CHECK(sup_finite(std::vector<HValue>{H("(1,2)"), H("(1,5)")}) == H("(1,5)"));
    CHECK(sup_finite(std::vector<HValue>{H("(0,0)")}) == H("(0,0)"));
    CHECK_THROWS_AS(sup_finite(std::vector<HValue>{}), EmptyList);
  }

  TEST_CASE("rendering and parsing") {
    CHECK(to_string(H("(2/4, -6/3)")) == "(1/2, -2)");
    CHECK(to_string(H("(0,inf)")) == "(0, inf)");
    CHECK(to_string(H(" ( 3 , -inf ) ")) == "(3, -inf)");
    CHECK(H("(1,+inf)") == H("(1,inf)"));
    CHECK_THROWS_AS(H("(-1, 2)"), ParseError);
    CHECK_THROWS_AS(hint::Dim(Q("-1")), std::domain_error);
    CHECK_THROWS_AS(H("(1, 2"), ParseError);
    CHECK_THROWS_AS(H("(1, 2) x"), ParseError);
    CHECK_THROWS_AS(H("(1/0, 2)"), ParseError);
    try {
      H("(1; 2)");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
  }

  TEST_CASE("nonnegative wrapper rejects negative measure") {
    CHECK_THROWS_AS(HNonNeg(H("(1,-1)")), std::domain_error);
    CHECK_NOTHROW(HNonNeg(H("(1,inf)")));
  }

  TEST_CASE("extended rationals") {
    CHECK(ExtRational(0) * ExtRational::pos_inf() == ExtRational(0));
    CHECK(ExtRational(-2) * ExtRational::pos_inf() == ExtRational::neg_inf());
    CHECK_FALSE(checked_add(ExtRational::pos_inf(), ExtRational::neg_inf()).has_value());
    CHECK(parse_ext_rational("-3/6") == ExtRational(Rational(-1, 2)));
    CHECK(to_string(ExtRational(Rational(10, 4))) == "5/2");
    CHECK(rational_pow(Q("8/27"), Q("1/3")) == Q("2/3"));
    CHECK_FALSE(rational_pow(Q("2"), Q("1/2")).has_value());
    CHECK(compare_pow(Q("2"), Q("1/2"), Q("7/5")) > 0);  // sqrt 2 > 1.4
    CHECK(compare_pow(Q("2"), Q("1/2"), Q("3/2")) < 0);
  }
}
