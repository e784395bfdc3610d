#pragma once

// Generalized Hausdorff values: pairs (dimension, measure) with the
// lexicographic order, the dominance addition and the pair product.

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hint/rational.hpp"

namespace hint {

/// A nonnegative exact dimension.
class Dim {
 public:
  Dim() = default;
  /// Throws std::domain_error on a negative value.
  Dim(Rational v);
  Dim(long v) : Dim(Rational(v)) {}
  Dim(int v) : Dim(Rational(v)) {}

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }

  friend Dim operator+(const Dim& a, const Dim& b) { return Dim(Rational(a.value_ + b.value_)); }
  friend std::strong_ordering operator<=>(const Dim& a, const Dim& b) {
    return compare(a.value_, b.value_);
  }
  friend bool operator==(const Dim& a, const Dim& b) { return a.value_ == b.value_; }

 private:
  Rational value_ = 0;
};

/// (d, m) with d >= 0 and m in [-inf, +inf].
struct HValue {
  Dim d;
  ExtRational m;

  HValue() = default;
  HValue(Dim dim, ExtRational measure) : d(std::move(dim)), m(std::move(measure)) {}

  static HValue zero() { return {}; }

  bool is_zero() const { return d.is_zero() && m.is_zero(); }
  bool is_nonneg() const { return m.sign() >= 0; }
  bool has_finite_measure() const { return m.is_finite(); }

  friend std::strong_ordering operator<=>(const HValue& a, const HValue& b);
  friend bool operator==(const HValue& a, const HValue& b) = default;
};

/// An HValue with m >= 0 (m = +inf allowed). This is the domain where the
/// product distributes over the addition.
class HNonNeg {
 public:
  HNonNeg() = default;
  /// Throws std::domain_error when v.m < 0.
  HNonNeg(HValue v);
  HNonNeg(Dim d, ExtRational m) : HNonNeg(HValue(std::move(d), std::move(m))) {}

  const HValue& value() const noexcept { return value_; }
  operator const HValue&() const noexcept { return value_; }
  const Dim& d() const noexcept { return value_.d; }
  const ExtRational& m() const noexcept { return value_.m; }

  friend bool operator==(const HNonNeg& a, const HNonNeg& b) = default;

 private:
  HValue value_;
};

/// A countable sequence: a finite prefix followed by one value repeated
/// forever. Use a (0,0) tail for a finite sum.
struct SeqDescriptor {
  std::vector<HNonNeg> prefix;
  HNonNeg tail;
};

std::strong_ordering compare(const HValue& a, const HValue& b);

/// Dominance addition. Throws UndefinedSum for equal dimensions with
/// second coordinates +inf and -inf.
HValue add(const HValue& a, const HValue& b);

/// c(d, m) = (d, c m) for c != 0 and (0, 0) for c = 0.
HValue scalar_mul(const Rational& c, const HValue& a);

/// (0,0) if either factor is (0,0), else (d1 + d2, m1 m2) with 0 * inf = 0.
HValue mul(const HValue& a, const HValue& b);

/// Left fold of `add` starting from (0,0).
HValue sum_finite(std::span<const HValue> terms);

/// Sum of a prefix-plus-constant-tail sequence. The dimension is the largest
/// dimension present; the measure adds the terms at that dimension, and a
/// tail at that dimension with positive measure contributes +inf.
HNonNeg sum_described(const SeqDescriptor& seq);

/// Maximum under `compare`; throws EmptyList.
HValue sup_finite(std::span<const HValue> values);

/// "(d, m)" with exact rationals and "inf" / "-inf".
std::string to_string(const HValue& v);

/// Parses the canonical rendering; whitespace around the components is
/// optional. Throws ParseError with a character position.
HValue parse_hvalue(std::string_view text);

std::ostream& operator<<(std::ostream& os, const HValue& v);

}  // namespace hint
