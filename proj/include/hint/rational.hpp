#pragma once

// Exact rationals and the extended rationals [-inf, +inf].

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace hint {

using Rational = mpq_class;

/// Canonical text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q" with decimal integers. Throws ParseError.
Rational parse_rational(std::string_view text);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// r^exponent when the result is rational; nullopt when it is irrational.
/// Requires r >= 0 (and r > 0 for negative exponents).
std::optional<Rational> rational_pow(const Rational& r, const Rational& exponent);

/// Exact sign of (x^exponent - v) for x >= 0, without computing x^exponent.
/// x = 0 with a negative exponent is not allowed.
int compare_pow(const Rational& x, const Rational& exponent, const Rational& v);

/// An exact rational or one of the two infinities.
class ExtRational {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtRational() = default;
  ExtRational(Rational q) : value_(std::move(q)) { value_.canonicalize(); }
  ExtRational(long v) : value_(v) {}
  ExtRational(int v) : value_(v) {}

  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }
  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  bool is_zero() const { return is_finite() && sgn(value_) == 0; }
  int sign() const;

  /// The finite value; throws std::logic_error on an infinity.
  const Rational& value() const;

  ExtRational operator-() const;

  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b);

 private:
  explicit ExtRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_ = 0;
};

/// Extended sum; nullopt for (+inf) + (-inf).
std::optional<ExtRational> checked_add(const ExtRational& a, const ExtRational& b);

/// Extended product with 0 * inf = 0 and the usual sign rules.
ExtRational operator*(const ExtRational& a, const ExtRational& b);

/// "inf", "-inf", or the canonical rational text.
std::string to_string(const ExtRational& x);
ExtRational parse_ext_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ExtRational& x);

}  // namespace hint
