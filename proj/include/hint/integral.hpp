#pragma once

// The H-integral. Simple functions are summed directly; piecewise functions
// on an interval space go through the sup-over-witness-sets formula, which
// also produces a certificate of witness sets and lower bounds.

#include <string>
#include <vector>

#include "hint/function.hpp"
#include "hint/hvalue.hpp"
#include "hint/space.hpp"

namespace hint {

/// A set L with mu(L) > (0,0) and a constant lower bound (0,0) < lower <= f on L.
struct Witness {
  MeasurableSet set;
  HNonNeg measure;
  HValue lower;
};

struct T4Certificate {
  HNonNeg value;
  /// Each has lower.d + measure.d <= value.d, approaching or attaining it.
  std::vector<Witness> d_witnesses;
  /// Pairwise disjoint, each with lower.d + measure.d == value.d; the sum of
  /// lower.m * measure.m is at most value.m. Empty when value.m comes from sup of nothing.
  std::vector<Witness> m_witnesses;
};

struct IntegralResult {
  HNonNeg value;
  T4Certificate certificate;
};

/// sum of coeff_i * mu(A_i). Accepts i-simple functions. Throws NonDisjoint,
/// UnknownSet, std::domain_error on a negative coefficient.
HNonNeg integrate_simple(const SetFunction& mu, const SimpleFn& f);
HNonNeg integrate_simple(const MeasureSpace& space, const SimpleFn& f);

/// The general integral with a certificate.
IntegralResult integrate(const MeasureSpace& space, const HFunction& f);
inline HNonNeg integrate_value(const MeasureSpace& space, const HFunction& f) {
  return integrate(space, f).value;
}

/// For pi1 == d on every piece: (d + e, m) where (e, m) is the integral of
/// (0, pi2); (d + dim_offset, 0) when pi2 vanishes almost everywhere but d > 0.
HNonNeg graded_integral(const IntervalSpace& space, const PiecewiseFn& f);

/// (ess sup pi1, integral of pi2 over {pi1 = ess sup pi1}) for an
/// h-measure of the form (0, nu). Throws std::invalid_argument when the
/// space is not of that form.
HNonNeg integrate_ordinary(const MeasureSpace& space, const HFunction& f);

/// A real-valued expression on one interval.
struct RealPiece {
  Interval set;
  Expr g;
};

/// Essential supremum against the density measure; points, zero-length
/// pieces and uncovered parts (where g = 0) do not raise it above 0.
ExtRational ess_sup(const IntervalSpace& space, const std::vector<RealPiece>& g);
/// Same on atoms: an atom counts when its nu-mass (weight.m) is positive.
ExtRational ess_sup(const AtomSpace& space, const std::vector<std::pair<std::string, ExtRational>>& g);

/// L -> integral of f restricted to L.
SetFunction indefinite(const MeasureSpace& space, const HFunction& f);

struct ISimpleGapReport {
  std::size_t samples = 0;
  std::vector<std::size_t> violations;  // indices of offending samples
  std::vector<std::string> reasons;
  HValue largest;                        // largest integral among valid samples
  HValue integral;                       // integral of f
};

/// Every sampled g with (0,0) <= g <= f must integrate to at most the integral of f.
ISimpleGapReport isimple_sup_gap(const AtomSpace& space, const SimpleFn& f, const std::vector<SimpleFn>& samples);

struct ApproxGapWitness {
  Rational x;
  bool verified = false;
};

/// A point x of (0,1) at which no member of the chain takes a value strictly
/// between (x,0) and (x,1).
ApproxGapWitness approx_gap_witness(const std::vector<SimpleFn>& chain);

/// Re-evaluates every recorded inequality. Returns the failures (empty = sound).
std::vector<std::string> check_certificate(const MeasureSpace& space, const HFunction& f, const T4Certificate& cert);

}  // namespace hint
