#pragma once

// Closed expression grammar for the coordinates of piecewise functions:
// polynomials with rational coefficients (constants and affine maps are the
// low-degree cases) and scaled rational powers c * x^q with c > 0, q > 0.
// Every query here is exact; when an exact answer would need an irrational
// number the query throws UnsupportedExpression instead of approximating.

#include <optional>
#include <string>
#include <vector>

#include "hint/polynomial.hpp"
#include "hint/rational.hpp"

namespace hint {

class Expr {
 public:
  enum class Kind { Poly, Pow };

  Expr() = default;  // the zero polynomial

  static Expr constant(const Rational& c);
  static Expr affine(const Rational& a, const Rational& b);
  static Expr polynomial(Polynomial p);
  /// c * x^q. Integer exponents normalize to a polynomial; c = 0 to zero.
  static Expr power(const Rational& coef, const Rational& exponent);

  Kind kind() const noexcept { return kind_; }
  const Polynomial& poly() const noexcept { return poly_; }
  const Rational& coef() const noexcept { return coef_; }
  const Rational& exponent() const noexcept { return exponent_; }

  bool is_zero() const { return kind_ == Kind::Poly && poly_.is_zero(); }
  std::optional<Rational> constant_value() const;
  /// Degree <= 1 polynomial or a power: the grammar allowed for pi1.
  bool is_monotone_form() const;

  /// Exact value at x when rational.
  std::optional<Rational> eval(const Rational& x) const;
  /// Sign of e(x) - v.
  int compare_at(const Rational& x, const Rational& v) const;

  /// Minimum or maximum over the closed interval [lo, hi].
  Rational extreme(const Rational& lo, const Rational& hi, bool want_max) const;

  /// e(x) >= 0 for every x in [lo, hi].
  bool nonneg_on(const Rational& lo, const Rational& hi) const;

  /// Integral of e(x) * density(x) over [lo, hi].
  Rational integrate(const Rational& lo, const Rational& hi, const Polynomial& density) const;

  /// Points of the open interval (lo, hi) where e(x) == v.
  std::vector<Rational> solve(const Rational& v, const Rational& lo, const Rational& hi) const;

  friend Expr operator+(const Expr& a, const Expr& b);

  friend bool operator==(const Expr& a, const Expr& b) = default;

 private:
  Kind kind_ = Kind::Poly;
  Polynomial poly_;
  Rational coef_ = 0;
  Rational exponent_ = 0;
};

/// Sign of a(x) - b(x).
int compare_exprs_at(const Expr& a, const Expr& b, const Rational& x);

/// Crossing points of a and b inside the open interval (lo, hi), or nullopt
/// when the two expressions are identical there.
std::optional<std::vector<Rational>> crossings(const Expr& a, const Expr& b, const Rational& lo,
                                               const Rational& hi);

std::string to_string(const Expr& e);

}  // namespace hint
