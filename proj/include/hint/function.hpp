#pragma once

// Measurable functions K -> [0,inf) x [0,inf): simple functions over any
// space, and piecewise-graded functions over an interval space whose
// coordinates come from the closed expression grammar.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hint/expr.hpp"
#include "hint/hvalue.hpp"
#include "hint/space.hpp"

namespace hint {

struct SimplePiece {
  HValue coeff;
  MeasurableSet set;
};

/// sum of coeff_i * chi(A_i) over pairwise disjoint A_i; (0,0) elsewhere.
/// With an infinite second coordinate in some coefficient it is i-simple.
struct SimpleFn {
  std::vector<SimplePiece> pieces;

  bool is_isimple() const;
  /// Coefficients in [0,inf) x [0,inf) (or [0,inf] when allow_infinite),
  /// piece sets pairwise disjoint. Throws std::domain_error / NonDisjoint.
  void validate(bool allow_infinite) const;

  /// Value at an atom or catalog primitive name.
  HValue at(const std::string& name) const;
  /// Value at a real point (interval-space pieces).
  HValue at(const Rational& x) const;
};

/// One cell of a piecewise-graded function: on `set`, f(x) = (pi1(x), pi2(x)).
struct Piece {
  Interval set;
  Expr pi1;
  Expr pi2;
};

struct PiecewiseFn {
  std::vector<Piece> pieces;

  /// Pieces inside the space and pairwise disjoint; pi1 constant, affine or
  /// a power; both coordinates nonnegative on their piece; powers only on
  /// x >= 0. Throws UnsupportedExpression / UnknownSet / NonDisjoint.
  void validate(const IntervalSpace& space) const;

  /// Exact value when rational.
  std::optional<HValue> at(const Rational& x) const;
  /// Sign of f(x) - v under the lexicographic order, always exact.
  int compare_at(const Rational& x, const HValue& v) const;
  /// True when pi1 is the same constant on every piece.
  std::optional<Rational> constant_dimension() const;
};

using HFunction = std::variant<SimpleFn, PiecewiseFn>;

/// {x : f(x) < v}, exactly. Points outside every piece carry (0,0).
/// Throws UnsupportedExpression for catalog spaces or when an endpoint of
/// the set is irrational.
MeasurableSet sublevel_set(const MeasureSpace& space, const HFunction& f, const HValue& v);

/// Pointwise dominance sum f + g on a common refinement of the pieces.
/// Throws UnsupportedExpression when an equal-dimension cell needs a pi2
/// sum outside the grammar.
HFunction pointwise_add_fn(const MeasureSpace& space, const HFunction& f, const HFunction& g);

/// A finite-valued simple function on intervals as constant pieces.
/// Throws UnsupportedExpression on an infinite coefficient, UnknownSet on names.
PiecewiseFn to_piecewise(const SimpleFn& f);

/// f restricted to L (zero outside L).
HFunction restrict_to(const HFunction& f, const MeasurableSet& L);

/// c * f for a constant c in [0,inf) x [0,inf).
SimpleFn scale(const HValue& c, const SimpleFn& f);

/// The function that is (d, m) on each listed atom / primitive.
SimpleFn simple_from_values(const std::vector<std::pair<std::string, HValue>>& values);

/// Pointwise f <= g on an atom space.
bool pointwise_le(const AtomSpace& space, const SimpleFn& f, const SimpleFn& g);

}  // namespace hint
