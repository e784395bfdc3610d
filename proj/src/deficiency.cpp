#include "hint/deficiency.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hint/errors.hpp"
#include "hint/function.hpp"
#include "hint/integral.hpp"

namespace hint {

HNonNeg defi_continuity(const ClusterScenario& s) {
  Catalog cat = s.catalog;
  SimpleFn f;
  std::set<Rational> seen;
  for (const auto& j : s.jumps) {
    if (!seen.insert(j.x).second) throw NonDisjoint("jump location " + to_string(j.x) + " listed twice");
    const std::string name = "jump@" + to_string(j.x);
    if (cat.contains(name)) throw NonDisjoint("catalog already has a set named " + name);
    cat.add(CatalogSet{name, 1, HNonNeg(Dim(0), ExtRational(1)), CatalogKind::FinitePoints});
    f.pieces.push_back({j.remainder, MeasurableSet::of_names({name})});
  }
  if (s.global) {
    cat.find(s.global->set);  // UnknownSet
    f.pieces.push_back({s.global->remainder, MeasurableSet::of_names({s.global->set})});
  }
  return integrate_simple(MeasureSpace(CatalogSpace{cat}), f);
}

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }
std::string to_string(const Line2& l) { return "line through " + to_string(l.p) + " and " + to_string(l.q); }

namespace {

Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator*(const Rational& t, const Point2& a) { return {t * a.x, t * a.y}; }
Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

// p + t w with t in a closed range; nullopt ends are infinite.
struct Lin {
  Point2 p, w;
  std::optional<Rational> lo, hi;
};

Lin lin_of(const Primitive2& k) {
  switch (k.kind) {
    case PrimKind::Point: return {k.p, {0, 0}, Rational(0), Rational(0)};
    case PrimKind::Segment: return {k.p, k.q - k.p, Rational(0), Rational(1)};
    case PrimKind::Line: return {k.p, k.q - k.p, std::nullopt, std::nullopt};
  }
  return {};
}

bool in_range(const Lin& l, const Rational& t) { return (!l.lo || *l.lo <= t) && (!l.hi || t <= *l.hi); }

bool is_point(const Lin& l) { return sgn(l.w.x) == 0 && sgn(l.w.y) == 0; }

bool contains(const Lin& l, const Point2& x) {
  if (is_point(l)) return l.p == x;
  if (sgn(cross(l.w, x - l.p)) != 0) return false;
  return in_range(l, Rational(dot(x - l.p, l.w) / dot(l.w, l.w)));
}

bool meets(const Lin& a, const Lin& b) {
  if (is_point(a)) return contains(b, a.p);
  if (is_point(b)) return contains(a, b.p);
  const Rational c = cross(a.w, b.w);
  const Point2 d = b.p - a.p;
  if (sgn(c) != 0) {
    const Rational t = cross(d, b.w) / c;
    const Rational s = cross(d, a.w) / c;
    return in_range(a, t) && in_range(b, s);
  }
  if (sgn(cross(a.w, d)) != 0) return false;  // parallel, apart
  // Collinear: b's range in a's parameter.
  const Rational ww = dot(a.w, a.w);
  const Rational k = dot(b.w, a.w) / ww;
  const Rational off = dot(d, a.w) / ww;
  std::optional<Rational> lo, hi;
  auto image = [&](const std::optional<Rational>& s) -> std::optional<Rational> {
    if (!s) return std::nullopt;
    return Rational(off + k * *s);
  };
  if (sgn(k) > 0) {
    lo = image(b.lo);
    hi = image(b.hi);
  } else {
    lo = image(b.hi);
    hi = image(b.lo);
  }
  const bool left_ok = !a.hi || !lo || *lo <= *a.hi;
  const bool right_ok = !a.lo || !hi || *a.lo <= *hi;
  return left_ok && right_ok;
}

Rational exact_length(const Point2& a, const Point2& b, const std::string& what) {
  auto len = rational_pow(dot(b - a, b - a), Rational(1, 2));
  if (!len) throw UnsupportedScenario("the length of " + what + " is irrational");
  return *len;
}

std::vector<std::string> names_of(const std::vector<Primitive2>& k) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < k.size(); ++i) {
    std::string n = k[i].name.empty() ? "#" + std::to_string(i) : k[i].name;
    if (!seen.insert(n).second) throw std::invalid_argument("primitive name '" + n + "' repeated");
    out.push_back(std::move(n));
  }
  return out;
}

// mu^H of the perpendicular section through e(u), excluding e(u) itself.
HValue section(const Primitive2& k, const Point2& P, const Point2& v, const Rational& u) {
  const Point2 y = P + u * v;
  const Lin l = lin_of(k);
  if (is_point(l)) {
    return (sgn(dot(l.p - y, v)) == 0 && !(l.p == y)) ? HValue(Dim(0), ExtRational(1)) : HValue();
  }
  const Rational wv = dot(l.w, v);
  if (sgn(wv) != 0) {
    const Rational t = dot(y - l.p, v) / wv;
    if (!in_range(l, t)) return {};
    return (l.p + t * l.w) == y ? HValue() : HValue(Dim(0), ExtRational(1));
  }
  if (sgn(dot(y - l.p, v)) != 0) return {};
  if (k.kind == PrimKind::Line) return {Dim(1), ExtRational::pos_inf()};
  return {Dim(1), ExtRational(exact_length(k.p, k.q, "a perpendicular segment"))};
}

HNonNeg lineness_for(const std::vector<Primitive2>& K, const Line2& e) {
  const Point2 v = e.q - e.p;
  const Rational vv = dot(v, v);
  auto u_of = [&](const Point2& x) { return Rational(dot(x - e.p, v) / vv); };

  std::vector<Rational> cuts;
  for (const auto& k : K) {
    cuts.push_back(u_of(k.p));
    if (k.kind == PrimKind::Point) continue;
    cuts.push_back(u_of(k.q));
    const Point2 w = k.q - k.p;
    const Rational c = cross(v, w);
    if (sgn(c) != 0) {
      const Rational t = -cross(v, k.p - e.p) / c;
      cuts.push_back(u_of(k.p + t * w));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  struct Cell {
    Rational probe;
    std::optional<Rational> lo, hi;  // both set and equal for a point cell
    bool point = false;
  };
  std::vector<Cell> cells;
  if (cuts.empty()) {
    cells.push_back({0, std::nullopt, std::nullopt, false});
  } else {
    cells.push_back({cuts.front() - 1, std::nullopt, cuts.front(), false});
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      cells.push_back({cuts[i], cuts[i], cuts[i], true});
      if (i + 1 < cuts.size()) cells.push_back({(cuts[i] + cuts[i + 1]) / 2, cuts[i], cuts[i + 1], false});
    }
    cells.push_back({cuts.back() + 1, cuts.back(), std::nullopt, false});
  }

  AtomSpace space;
  std::vector<std::pair<std::string, HValue>> values;
  std::optional<Rational> unit;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    HValue g;
    for (const auto& k : K) g = add(g, section(k, e.p, v, c.probe));
    if (g.is_zero()) continue;
    HNonNeg w;
    if (c.point) {
      w = HNonNeg(Dim(0), ExtRational(1));
    } else if (!c.lo || !c.hi) {
      w = HNonNeg(Dim(1), ExtRational::pos_inf());
    } else {
      if (!unit) unit = exact_length(e.p, e.q, "the candidate's direction vector");
      w = HNonNeg(Dim(1), ExtRational(Rational((*c.hi - *c.lo) * *unit)));
    }
    const std::string id = "cell" + std::to_string(i);
    space.add_atom(id, w);
    values.emplace_back(id, g);
  }
  return integrate_simple(MeasureSpace(space), simple_from_values(values));
}

}  // namespace

void check_primitives(const std::vector<Primitive2>& k) {
  for (const auto& p : k) {
    if (p.kind != PrimKind::Point && p.p == p.q) throw std::invalid_argument("degenerate segment or line at " + to_string(p.p));
  }
  const auto names = names_of(k);
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      if (meets(lin_of(k[i]), lin_of(k[j]))) throw NonDisjoint("primitives " + names[i] + " and " + names[j] + " meet");
    }
  }
}

LinenessResult defi_lineness(const LinenessScenario& s) {
  check_primitives(s.primitives);
  std::vector<Line2> candidates = s.candidates;
  const bool defaults = candidates.empty();
  if (defaults) {
    std::vector<Point2> anchors;
    for (const auto& k : s.primitives) {
      anchors.push_back(k.p);
      if (k.kind != PrimKind::Point) anchors.push_back(k.q);
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
      for (std::size_t j = i + 1; j < anchors.size(); ++j) {
        if (anchors[i] == anchors[j]) continue;
        const Line2 l{anchors[i], anchors[j]};
        const Point2 v = l.q - l.p;
        const bool dup = std::any_of(candidates.begin(), candidates.end(), [&](const Line2& c) {
          return sgn(cross(c.q - c.p, v)) == 0 && sgn(cross(c.q - c.p, l.p - c.p)) == 0;
        });
        if (!dup) candidates.push_back(l);
      }
    }
  }
  if (candidates.empty()) throw UnsupportedScenario("no candidate line");
  LinenessResult out;
  bool first = true;
  std::optional<UnsupportedScenario> last_skip;
  for (const auto& e : candidates) {
    if (e.p == e.q) throw std::invalid_argument("degenerate candidate line at " + to_string(e.p));
    HNonNeg v;
    try {
      v = lineness_for(s.primitives, e);
    } catch (const UnsupportedScenario& x) {
      // generated lines through anchors often have irrational unit length
      if (!defaults) throw;
      ++out.skipped;
      last_skip = x;
      continue;
    }
    out.per_candidate.emplace_back(e, v);
    if (first || v.value() < out.value.value()) {
      out.value = v;
      out.best = e;
      first = false;
    }
  }
  if (first) throw *last_skip;
  return out;
}

HNonNeg defi_convexity(const ConvexityScenario& s) {
  check_primitives(s.primitives);
  const auto names = names_of(s.primitives);
  const auto& K = s.primitives;
  for (const auto& k : K) {
    if (k.kind == PrimKind::Line) throw UnsupportedScenario("K must be bounded");
  }
  std::map<std::pair<std::string, std::string>, HNonNeg> declared;
  for (const auto& pv : s.pair_values) {
    declared[{pv.a, pv.b}] = pv.value;
    declared[{pv.b, pv.a}] = pv.value;
  }

  auto size_of = [&](std::size_t i) -> HValue {
    if (K[i].kind == PrimKind::Point) return {Dim(0), ExtRational(1)};
    return {Dim(1), ExtRational(exact_length(K[i].p, K[i].q, "segment " + names[i]))};
  };

  auto integrand = [&](std::size_t i, std::size_t j) -> HValue {
    if (auto it = declared.find({names[i], names[j]}); it != declared.end()) return it->second;
    if (i == j) return {};  // xy stays inside a point or a segment
    if (K[i].kind == PrimKind::Point && K[j].kind == PrimKind::Point) {
      const Lin xy{K[i].p, K[j].p - K[i].p, Rational(0), Rational(1)};
      for (std::size_t k = 0; k < K.size(); ++k) {
        if (K[k].kind != PrimKind::Segment) continue;
        const Lin seg = lin_of(K[k]);
        const bool collinear = sgn(cross(xy.w, seg.w)) == 0 && sgn(cross(xy.w, seg.p - xy.p)) == 0;
        if (collinear && meets(xy, seg)) {
          throw UnsupportedScenario("segment " + names[k] + " lies along " + names[i] + names[j] + "; declare the pair value");
        }
      }
      return {Dim(1), ExtRational(exact_length(K[i].p, K[j].p, "segment " + names[i] + names[j]))};
    }
    throw UnsupportedScenario("pair (" + names[i] + ", " + names[j] + ") needs a declared value");
  };

  AtomSpace space;
  std::vector<std::pair<std::string, HValue>> values;
  for (std::size_t i = 0; i < K.size(); ++i) {
    for (std::size_t j = 0; j < K.size(); ++j) {
      const HValue g = integrand(i, j);
      if (g.is_zero()) continue;
      const std::string id = names[i] + "|" + names[j];
      space.add_atom(id, HNonNeg(mul(size_of(i), size_of(j))));
      values.emplace_back(id, g);
    }
  }
  return integrate_simple(MeasureSpace(space), simple_from_values(values));
}

}  // namespace hint
