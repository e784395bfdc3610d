#pragma once

// Deficiency functionals for continuity, lineness and convexity. Each one
// builds a simple integrand over a declared mu^H space and hands it to
// integrate_simple; none of them computes cluster sets or sections from a
// formula for f.

#include <optional>
#include <string>
#include <vector>

#include "hint/hvalue.hpp"
#include "hint/space.hpp"

namespace hint {

struct Jump {
  Rational x;
  HNonNeg remainder;  // mu^H of the cluster set at x minus f(x)
};

struct GlobalComponent {
  std::string set;  // catalog name
  HNonNeg remainder;
};

struct ClusterScenario {
  std::vector<Jump> jumps;
  std::optional<GlobalComponent> global;
  Catalog catalog = Catalog::standard();
};

/// Throws NonDisjoint on a repeated jump location, UnknownSet on an unknown global set.
HNonNeg defi_continuity(const ClusterScenario& s);

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

enum class PrimKind { Point, Segment, Line };

/// A point (p), a closed segment [p, q] or the line through p and q.
struct Primitive2 {
  PrimKind kind = PrimKind::Point;
  Point2 p, q;
  std::string name;
};

struct Line2 {
  Point2 p, q;
};

std::string to_string(const Point2& p);
std::string to_string(const Line2& l);

/// Throws NonDisjoint when two primitives meet; std::invalid_argument on a
/// degenerate segment or line (p == q).
void check_primitives(const std::vector<Primitive2>& k);

struct LinenessScenario {
  std::vector<Primitive2> primitives;
  std::vector<Line2> candidates;  // empty: lines through pairs of anchors
};

struct LinenessResult {
  HNonNeg value;  // upper bound of the inf over all lines
  Line2 best;
  std::vector<std::pair<Line2, HNonNeg>> per_candidate;
  std::size_t skipped = 0;  // generated candidates that needed an irrational length
};

/// Throws UnsupportedScenario when no candidate line exists, when an explicit
/// candidate needs an irrational length, or when every generated one does.
LinenessResult defi_lineness(const LinenessScenario& s);

/// Declared mu^H(xy - K) for x in primitive a and y in primitive b, assumed
/// constant over the pair (and symmetric).
struct PairValue {
  std::string a, b;
  HNonNeg value;
};

struct ConvexityScenario {
  std::vector<Primitive2> primitives;  // bounded: points and segments
  std::vector<PairValue> pair_values;
};

/// Throws UnsupportedScenario for unbounded K, irrational lengths, or a pair
/// of distinct primitives whose integrand is neither derivable nor declared.
HNonNeg defi_convexity(const ConvexityScenario& s);

}  // namespace hint
