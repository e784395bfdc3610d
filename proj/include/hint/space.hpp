#pragma once

// h-measure spaces: finite atom spaces, scaled-Lebesgue interval spaces and
// the catalog of declared mu^H values.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hint/hvalue.hpp"
#include "hint/polynomial.hpp"

namespace hint {

/// A real interval with rational endpoints. A point is the closed interval
/// [x, x].
struct Interval {
  Rational lo = 0;
  Rational hi = 0;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval open(const Rational& lo, const Rational& hi) { return {lo, hi, false, false}; }
  static Interval closed(const Rational& lo, const Rational& hi) { return {lo, hi, true, true}; }
  static Interval point(const Rational& x) { return {x, x, true, true}; }

  bool is_point() const { return lo == hi && lo_closed && hi_closed; }
  bool is_empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  Rational length() const { return is_empty() ? Rational(0) : Rational(hi - lo); }
  bool contains(const Rational& x) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);
bool overlaps(const Interval& a, const Interval& b);
/// Sorted, merged, empty pieces removed.
std::vector<Interval> normalize(std::vector<Interval> parts);
/// whole minus the union of parts, normalized.
std::vector<Interval> subtract(const Interval& whole, const std::vector<Interval>& parts);
std::string to_string(const Interval& i);

/// A finite disjoint union of primitives: atom ids or catalog names, and
/// subintervals or points of an interval space.
struct MeasurableSet {
  std::vector<std::string> names;
  std::vector<Interval> intervals;

  static MeasurableSet empty_set() { return {}; }
  static MeasurableSet of_names(std::vector<std::string> n) { return {std::move(n), {}}; }
  static MeasurableSet of_intervals(std::vector<Interval> i) { return {{}, std::move(i)}; }

  bool empty() const;
  friend bool operator==(const MeasurableSet&, const MeasurableSet&) = default;
};

/// Concatenation of primitives; the caller is responsible for disjointness.
MeasurableSet disjoint_union(const MeasurableSet& a, const MeasurableSet& b);

/// Throws NonDisjoint if two primitives among the given sets overlap
/// (repeated names, intersecting intervals).
void check_disjoint(const std::vector<MeasurableSet>& sets);

std::string to_string(const MeasurableSet& s);

/// Finite space with the full power set as sigma-algebra.
class AtomSpace {
 public:
  AtomSpace() = default;
  /// Throws std::invalid_argument on a repeated id.
  void add_atom(const std::string& id, HNonNeg weight);

  const std::vector<std::string>& atoms() const noexcept { return ids_; }
  const HNonNeg& weight(const std::string& id) const;  // throws UnknownSet
  bool contains(const std::string& id) const { return weights_.contains(id); }
  std::size_t size() const noexcept { return ids_.size(); }
  MeasurableSet all() const { return MeasurableSet::of_names(ids_); }

 private:
  std::vector<std::string> ids_;
  std::map<std::string, HNonNeg> weights_;
};

/// The open interval (lo, hi) with mu(L) = (dim_offset, nu(L)) when
/// nu(L) > 0 and (0,0) otherwise, nu having the given polynomial density.
struct IntervalSpace {
  Rational lo = 0;
  Rational hi = 1;
  Dim dim_offset;
  Polynomial density = Polynomial::constant(1);

  /// Throws UnsupportedExpression if the density is negative somewhere.
  void validate() const;
  Interval bounds() const { return Interval::open(lo, hi); }
  Rational nu(const Interval& i) const;
};

enum class CatalogKind { FinitePoints, Countable, Segment, Line, SelfSimilar, Product, Declared };

std::string to_string(CatalogKind k);
CatalogKind parse_catalog_kind(const std::string& s);

/// A set whose mu^H value is declared rather than computed.
struct CatalogSet {
  std::string name;
  int ambient = 1;
  HNonNeg hvalue;
  CatalogKind kind = CatalogKind::Declared;

  /// Throws std::invalid_argument when the declared value is outside the
  /// mu^H codomain for the ambient space.
  void validate() const;
};

class Catalog {
 public:
  Catalog() = default;

  /// The shipped entries (points, segments, lines, a rational-dimension
  /// self-similar set, and a few planar sets).
  static Catalog standard();

  void add(CatalogSet set);  // validates; replaces an entry of the same name
  const CatalogSet& find(const std::string& name) const;  // throws UnknownSet
  bool contains(const std::string& name) const { return sets_.contains(name); }
  const std::map<std::string, CatalogSet>& sets() const noexcept { return sets_; }

 private:
  std::map<std::string, CatalogSet> sets_;
};

struct CatalogSpace {
  Catalog catalog;
};

using MeasureSpace = std::variant<AtomSpace, IntervalSpace, CatalogSpace>;

/// A set function on measurable sets (an h-measure, or something being
/// checked for being one).
using SetFunction = std::function<HValue(const MeasurableSet&)>;

/// sigma-additive evaluation of the space's h-measure. Throws UnknownSet or
/// NonDisjoint.
HNonNeg measure(const MeasureSpace& space, const MeasurableSet& s);

SetFunction measure_of(const MeasureSpace& space);

/// Ordinary measures that can be lifted into h-measure spaces.
struct AtomMeasure {
  std::vector<std::pair<std::string, ExtRational>> masses;  // each >= 0
};
struct DensityMeasure {
  Rational lo = 0;
  Rational hi = 1;
  Polynomial density = Polynomial::constant(1);
};
using OrdinaryMeasure = std::variant<AtomMeasure, DensityMeasure>;

/// mu(L) = (d0, nu(L)) for nu(L) > 0 and (0,0) for nu-null L.
MeasureSpace scaled_embedding(const Dim& d0, const OrdinaryMeasure& nu);

/// Sum of declared catalog values of a disjoint union of catalog sets.
HNonNeg mu_H(const Catalog& catalog, const std::vector<std::string>& names);

/// True iff the measure of the union equals the dominance sum of the
/// measures of the members. Throws NonDisjoint.
bool validate_h_measure(const MeasureSpace& space, const std::vector<MeasurableSet>& partition);
bool validate_h_measure(const SetFunction& mu, const std::vector<MeasurableSet>& partition);

}  // namespace hint
