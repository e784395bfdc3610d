#include "hint/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hint/errors.hpp"
#include "hint/expr.hpp"

namespace hint {

bool Interval::contains(const Rational& x) const {
  const bool above = x > lo || (x == lo && lo_closed);
  const bool below = x < hi || (x == hi && hi_closed);
  return above && below;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo > b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  }
  if (out.is_empty()) return std::nullopt;
  return out;
}

bool overlaps(const Interval& a, const Interval& b) { return intersect(a, b).has_value(); }

std::vector<Interval> normalize(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return i.is_empty(); });
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> out;
  for (const auto& p : parts) {
    if (!out.empty()) {
      Interval& cur = out.back();
      const bool touches = p.lo < cur.hi || (p.lo == cur.hi && (cur.hi_closed || p.lo_closed));
      if (touches) {
        if (p.hi > cur.hi) {
          cur.hi = p.hi;
          cur.hi_closed = p.hi_closed;
        } else if (p.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    out.push_back(p);
  }
  return out;
}

std::vector<Interval> subtract(const Interval& whole, const std::vector<Interval>& parts) {
  std::vector<Interval> clipped;
  for (const auto& p : parts) {
    if (auto c = intersect(whole, p)) clipped.push_back(*c);
  }
  clipped = normalize(std::move(clipped));
  std::vector<Interval> out;
  Rational cursor = whole.lo;
  bool cursor_closed = whole.lo_closed;
  for (const auto& p : clipped) {
    out.push_back({cursor, p.lo, cursor_closed, !p.lo_closed});
    cursor = p.hi;
    cursor_closed = !p.hi_closed;
  }
  out.push_back({cursor, whole.hi, cursor_closed, whole.hi_closed});
  return normalize(std::move(out));
}

std::string to_string(const Interval& i) {
  if (i.is_point()) return "{" + to_string(i.lo) + "}";
  return std::string(i.lo_closed ? "[" : "(") + to_string(i.lo) + ", " + to_string(i.hi) +
         (i.hi_closed ? "]" : ")");
}

bool MeasurableSet::empty() const {
  return names.empty() &&
         std::all_of(intervals.begin(), intervals.end(), [](const Interval& i) { return i.is_empty(); });
}

MeasurableSet disjoint_union(const MeasurableSet& a, const MeasurableSet& b) {
  MeasurableSet out = a;
  out.names.insert(out.names.end(), b.names.begin(), b.names.end());
  out.intervals.insert(out.intervals.end(), b.intervals.begin(), b.intervals.end());
  return out;
}

void check_disjoint(const std::vector<MeasurableSet>& sets) {
  std::set<std::string> seen;
  std::vector<Interval> all;
  for (const auto& s : sets) {
    for (const auto& n : s.names) {
      if (!seen.insert(n).second) throw NonDisjoint("primitive '" + n + "' appears twice");
    }
    for (const auto& i : s.intervals) {
      if (i.is_empty()) continue;
      for (const auto& j : all) {
        if (overlaps(i, j)) throw NonDisjoint("intervals " + to_string(i) + " and " + to_string(j) + " overlap");
      }
      all.push_back(i);
    }
  }
}

std::string to_string(const MeasurableSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& n : s.names) {
    os << (first ? "" : ", ") << n;
    first = false;
  }
  for (const auto& i : s.intervals) {
    os << (first ? "" : ", ") << to_string(i);
    first = false;
  }
  os << "}";
  return os.str();
}

void AtomSpace::add_atom(const std::string& id, HNonNeg weight) {
  if (weights_.contains(id)) throw std::invalid_argument("duplicate atom '" + id + "'");
  ids_.push_back(id);
  weights_.emplace(id, std::move(weight));
}

const HNonNeg& AtomSpace::weight(const std::string& id) const {
  auto it = weights_.find(id);
  if (it == weights_.end()) throw UnknownSet("unknown atom '" + id + "'");
  return it->second;
}

void IntervalSpace::validate() const {
  if (!(lo < hi)) throw std::invalid_argument("interval space needs lo < hi");
  if (sgn(Expr::polynomial(density).extreme(lo, hi, false)) < 0) {
    throw UnsupportedExpression("density is negative somewhere on the interval");
  }
}

Rational IntervalSpace::nu(const Interval& i) const {
  if (i.is_empty() || i.lo == i.hi) return 0;
  return density.integrate(i.lo, i.hi);
}

std::string to_string(CatalogKind k) {
  switch (k) {
    case CatalogKind::FinitePoints: return "finite-points";
    case CatalogKind::Countable: return "countable";
    case CatalogKind::Segment: return "segment";
    case CatalogKind::Line: return "line";
    case CatalogKind::SelfSimilar: return "self-similar";
    case CatalogKind::Product: return "product";
    case CatalogKind::Declared: return "declared";
  }
  return "declared";
}

CatalogKind parse_catalog_kind(const std::string& s) {
  for (auto k : {CatalogKind::FinitePoints, CatalogKind::Countable, CatalogKind::Segment, CatalogKind::Line,
                 CatalogKind::SelfSimilar, CatalogKind::Product, CatalogKind::Declared}) {
    if (to_string(k) == s) return k;
  }
  if (s == "interval") return CatalogKind::Segment;
  throw ParseError("unknown catalog kind '" + s + "'");
}

void CatalogSet::validate() const {
  if (ambient != 1 && ambient != 2 && ambient != 4) {
    throw std::invalid_argument("catalog set '" + name + "': ambient dimension must be 1, 2 or 4");
  }
  if (hvalue.d().value() > ambient) {
    throw std::invalid_argument("catalog set '" + name + "': dimension exceeds the ambient space");
  }
  if (hvalue.d().is_zero() && hvalue.m().is_finite() && hvalue.m().value().get_den() != 1) {
    throw std::invalid_argument("catalog set '" + name + "': a dimension-0 value must be a count");
  }
}

Catalog Catalog::standard() {
  Catalog c;
  auto put = [&](std::string name, int ambient, std::string_view value, CatalogKind kind) {
    c.add({std::move(name), ambient, HNonNeg(parse_hvalue(value)), kind});
  };
  put("point", 1, "(0, 1)", CatalogKind::FinitePoints);
  put("integers", 1, "(0, inf)", CatalogKind::Countable);
  put("rationals", 1, "(0, inf)", CatalogKind::Countable);
  put("unit_segment", 1, "(1, 1)", CatalogKind::Segment);
  put("real_line", 1, "(1, inf)", CatalogKind::Line);
  // Four similar copies at ratio 1/16: dimension log 4 / log 16 = 1/2.
  put("quarter_cantor", 1, "(1/2, 1)", CatalogKind::SelfSimilar);
  put("plane_point", 2, "(0, 1)", CatalogKind::FinitePoints);
  put("plane_line", 2, "(1, inf)", CatalogKind::Line);
  put("plane", 2, "(2, inf)", CatalogKind::Declared);
  put("unit_square", 2, "(2, 1)", CatalogKind::Product);
  return c;
}

void Catalog::add(CatalogSet set) {
  set.validate();
  auto name = set.name;
  sets_.insert_or_assign(std::move(name), std::move(set));
}

const CatalogSet& Catalog::find(const std::string& name) const {
  auto it = sets_.find(name);
  if (it == sets_.end()) throw UnknownSet("unknown catalog set '" + name + "'");
  return it->second;
}

namespace {

void check_inside(const IntervalSpace& sp, const Interval& i) {
  if (i.is_empty()) return;
  const bool lo_ok = i.lo > sp.lo || (i.lo == sp.lo && !i.lo_closed);
  const bool hi_ok = i.hi < sp.hi || (i.hi == sp.hi && !i.hi_closed);
  if (!lo_ok || !hi_ok) throw UnknownSet("interval " + to_string(i) + " is not inside the space");
}

struct MeasureVisitor {
  const MeasurableSet& s;

  HNonNeg operator()(const AtomSpace& sp) const {
    if (!s.intervals.empty()) throw UnknownSet("atom space has no intervals");
    check_disjoint({s});
    HValue acc;
    for (const auto& n : s.names) acc = add(acc, sp.weight(n));
    return acc;
  }

  HNonNeg operator()(const IntervalSpace& sp) const {
    if (!s.names.empty()) throw UnknownSet("interval space has no named primitive '" + s.names.front() + "'");
    check_disjoint({s});
    Rational nu = 0;
    for (const auto& i : s.intervals) {
      check_inside(sp, i);
      nu += sp.nu(i);
    }
    if (sgn(nu) == 0) return HNonNeg();
    return HNonNeg(sp.dim_offset, ExtRational(nu));
  }

  HNonNeg operator()(const CatalogSpace& sp) const {
    if (!s.intervals.empty()) throw UnknownSet("catalog space has no intervals");
    return mu_H(sp.catalog, s.names);
  }
};

}  // namespace

HNonNeg measure(const MeasureSpace& space, const MeasurableSet& s) {
  return std::visit(MeasureVisitor{s}, space);
}

SetFunction measure_of(const MeasureSpace& space) {
  return [space](const MeasurableSet& s) -> HValue { return measure(space, s); };
}

MeasureSpace scaled_embedding(const Dim& d0, const OrdinaryMeasure& nu) {
  if (const auto* atoms = std::get_if<AtomMeasure>(&nu)) {
    AtomSpace sp;
    for (const auto& [id, mass] : atoms->masses) {
      if (mass.sign() < 0) throw std::invalid_argument("negative mass for atom '" + id + "'");
      sp.add_atom(id, mass.sign() > 0 ? HNonNeg(d0, mass) : HNonNeg());
    }
    return sp;
  }
  const auto& dm = std::get<DensityMeasure>(nu);
  IntervalSpace sp{dm.lo, dm.hi, d0, dm.density};
  sp.validate();
  return sp;
}

HNonNeg mu_H(const Catalog& catalog, const std::vector<std::string>& names) {
  check_disjoint({MeasurableSet::of_names(names)});
  HValue acc;
  for (const auto& n : names) acc = add(acc, catalog.find(n).hvalue);
  return acc;
}

bool validate_h_measure(const MeasureSpace& space, const std::vector<MeasurableSet>& partition) {
  return validate_h_measure(measure_of(space), partition);
}

bool validate_h_measure(const SetFunction& mu, const std::vector<MeasurableSet>& partition) {
  check_disjoint(partition);
  MeasurableSet whole;
  std::vector<HValue> parts;
  for (const auto& s : partition) {
    whole = disjoint_union(whole, s);
    parts.push_back(mu(s));
  }
  if (!mu(MeasurableSet::empty_set()).is_zero()) return false;
  return mu(whole) == sum_finite(parts);
}

}  // namespace hint
