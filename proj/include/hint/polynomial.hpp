#pragma once

#include <initializer_list>
#include <vector>

#include "hint/rational.hpp"

namespace hint {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// c * x^n
  static Polynomial monomial(const Rational& c, unsigned n);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  Rational integrate(const Rational& lo, const Rational& hi) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; throws std::domain_error for a zero divisor.
  static void divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Distinct rational roots in increasing order (rational root theorem).
/// Throws UnsupportedExpression when the integer coefficients are too large
/// to factor by trial division. The zero polynomial is rejected.
std::vector<Rational> rational_roots(const Polynomial& p);

/// p divided by every (x - r) factor for rational roots r, with multiplicity.
Polynomial strip_rational_roots(const Polynomial& p);

/// Number of distinct real roots in the open interval (lo, hi) by Sturm's
/// theorem. Requires p(lo) != 0 and p(hi) != 0.
int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);

/// All real roots of p in the open interval (lo, hi), each rational.
/// Throws UnsupportedExpression if some root in the interval is irrational.
std::vector<Rational> exact_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace hint
