#include "hint/function.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hint/errors.hpp"

namespace hint {

bool SimpleFn::is_isimple() const {
  return std::any_of(pieces.begin(), pieces.end(), [](const SimplePiece& p) { return !p.coeff.m.is_finite(); });
}

void SimpleFn::validate(bool allow_infinite) const {
  std::vector<MeasurableSet> sets;
  for (const auto& p : pieces) {
    if (!p.coeff.is_nonneg()) throw std::domain_error("negative coefficient " + to_string(p.coeff));
    if (!allow_infinite && !p.coeff.m.is_finite()) {
      throw std::domain_error("infinite coefficient " + to_string(p.coeff) + " in a simple function");
    }
    sets.push_back(p.set);
  }
  check_disjoint(sets);
}

HValue SimpleFn::at(const std::string& name) const {
  for (const auto& p : pieces) {
    if (std::find(p.set.names.begin(), p.set.names.end(), name) != p.set.names.end()) return p.coeff;
  }
  return HValue::zero();
}

HValue SimpleFn::at(const Rational& x) const {
  for (const auto& p : pieces) {
    for (const auto& i : p.set.intervals) {
      if (i.contains(x)) return p.coeff;
    }
  }
  return HValue::zero();
}

void PiecewiseFn::validate(const IntervalSpace& space) const {
  std::vector<MeasurableSet> sets;
  for (const auto& p : pieces) {
    if (p.set.is_empty()) throw UnknownSet("empty piece");
    const bool inside = (p.set.lo > space.lo || (p.set.lo == space.lo && !p.set.lo_closed)) &&
                        (p.set.hi < space.hi || (p.set.hi == space.hi && !p.set.hi_closed));
    if (!inside) throw UnknownSet("piece " + to_string(p.set) + " is not inside the space");
    if (!p.pi1.is_monotone_form()) {
      throw UnsupportedExpression("pi1 must be constant, affine or a power: " + to_string(p.pi1));
    }
    for (const Expr* e : {&p.pi1, &p.pi2}) {
      if (e->kind() == Expr::Kind::Pow && sgn(p.set.lo) < 0) {
        throw UnsupportedExpression("power " + to_string(*e) + " on negative arguments");
      }
      if (!e->nonneg_on(p.set.lo, p.set.hi)) {
        throw UnsupportedExpression(to_string(*e) + " is negative on " + to_string(p.set));
      }
    }
    sets.push_back(MeasurableSet::of_intervals({p.set}));
  }
  check_disjoint(sets);
}

std::optional<HValue> PiecewiseFn::at(const Rational& x) const {
  for (const auto& p : pieces) {
    if (!p.set.contains(x)) continue;
    auto d = p.pi1.eval(x);
    auto m = p.pi2.eval(x);
    if (!d || !m) return std::nullopt;
    return HValue(Dim(*d), ExtRational(*m));
  }
  return HValue::zero();
}

int PiecewiseFn::compare_at(const Rational& x, const HValue& v) const {
  for (const auto& p : pieces) {
    if (!p.set.contains(x)) continue;
    if (int c = p.pi1.compare_at(x, v.d.value()); c != 0) return c;
    if (v.m.is_pos_inf()) return -1;
    if (v.m.is_neg_inf()) return 1;
    return p.pi2.compare_at(x, v.m.value());
  }
  const auto ord = HValue::zero() <=> v;
  return ord < 0 ? -1 : (ord > 0 ? 1 : 0);
}

std::optional<Rational> PiecewiseFn::constant_dimension() const {
  std::optional<Rational> d;
  for (const auto& p : pieces) {
    auto c = p.pi1.constant_value();
    if (!c || (d && *d != *c)) return std::nullopt;
    d = c;
  }
  return d;
}

namespace {

struct Classified {
  std::vector<Interval> less;
  std::vector<Interval> equal;
};

// Cells of P cut at the given interior points: alternately points and open
// intervals, clipped to P's own endpoint closedness.
std::vector<Interval> cells_of(const Interval& P, std::vector<Rational> cuts) {
  std::vector<Interval> out;
  if (P.lo == P.hi) {
    out.push_back(P);
    return out;
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (P.lo_closed) out.push_back(Interval::point(P.lo));
  Rational prev = P.lo;
  for (const auto& c : cuts) {
    if (!(c > P.lo && c < P.hi)) continue;
    out.push_back(Interval::open(prev, c));
    out.push_back(Interval::point(c));
    prev = c;
  }
  out.push_back(Interval::open(prev, P.hi));
  if (P.hi_closed) out.push_back(Interval::point(P.hi));
  return out;
}

Rational probe(const Interval& cell) { return cell.lo == cell.hi ? cell.lo : Rational((cell.lo + cell.hi) / 2); }

// Split P into {e < t} and {e = t}.
Classified classify(const Expr& e, const Interval& P, const Rational& t) {
  Classified out;
  if (auto c = e.constant_value()) {
    if (*c < t) out.less.push_back(P);
    if (*c == t) out.equal.push_back(P);
    return out;
  }
  std::vector<Rational> roots;
  if (P.lo < P.hi) roots = e.solve(t, P.lo, P.hi);
  for (const auto& cell : cells_of(P, roots)) {
    const int s = e.compare_at(probe(cell), t);
    if (s < 0) out.less.push_back(cell);
    if (s == 0) out.equal.push_back(cell);
  }
  return out;
}

std::vector<Interval> piece_sublevel(const Piece& p, const HValue& v) {
  Classified by_dim = classify(p.pi1, p.set, v.d.value());
  std::vector<Interval> out = by_dim.less;
  for (const auto& eq : by_dim.equal) {
    if (v.m.is_pos_inf()) {
      out.push_back(eq);
    } else if (v.m.is_finite()) {
      auto by_measure = classify(p.pi2, eq, v.m.value());
      out.insert(out.end(), by_measure.less.begin(), by_measure.less.end());
    }
  }
  return out;
}

struct SublevelVisitor {
  const HValue& v;

  MeasurableSet operator()(const AtomSpace& sp, const SimpleFn& f) const {
    MeasurableSet out;
    for (const auto& a : sp.atoms()) {
      if (f.at(a) < v) out.names.push_back(a);
    }
    return out;
  }

  MeasurableSet operator()(const IntervalSpace& sp, const SimpleFn& f) const {
    std::vector<Interval> covered, out;
    for (const auto& p : f.pieces) {
      if (!p.set.names.empty()) throw UnknownSet("named primitive in an interval space");
      covered.insert(covered.end(), p.set.intervals.begin(), p.set.intervals.end());
      if (p.coeff < v) out.insert(out.end(), p.set.intervals.begin(), p.set.intervals.end());
    }
    if (HValue::zero() < v) {
      auto rest = subtract(sp.bounds(), covered);
      out.insert(out.end(), rest.begin(), rest.end());
    }
    return MeasurableSet::of_intervals(normalize(std::move(out)));
  }

  MeasurableSet operator()(const IntervalSpace& sp, const PiecewiseFn& f) const {
    std::vector<Interval> covered, out;
    for (const auto& p : f.pieces) {
      covered.push_back(p.set);
      auto part = piece_sublevel(p, v);
      out.insert(out.end(), part.begin(), part.end());
    }
    if (HValue::zero() < v) {
      auto rest = subtract(sp.bounds(), covered);
      out.insert(out.end(), rest.begin(), rest.end());
    }
    return MeasurableSet::of_intervals(normalize(std::move(out)));
  }

  MeasurableSet operator()(const AtomSpace&, const PiecewiseFn&) const {
    throw UnsupportedExpression("piecewise functions live on interval spaces");
  }

  template <class F>
  MeasurableSet operator()(const CatalogSpace&, const F&) const {
    throw UnsupportedExpression("sublevel sets are not available on catalog spaces");
  }
};

}  // namespace

PiecewiseFn to_piecewise(const SimpleFn& f) {
  PiecewiseFn out;
  for (const auto& p : f.pieces) {
    if (!p.set.names.empty()) throw UnknownSet("named primitive in an interval space");
    if (!p.coeff.m.is_finite()) {
      throw UnsupportedExpression("infinite coefficient cannot be refined symbolically");
    }
    for (const auto& i : p.set.intervals) {
      if (!i.is_empty()) out.pieces.push_back({i, Expr::constant(p.coeff.d.value()), Expr::constant(p.coeff.m.value())});
    }
  }
  return out;
}

namespace {

Expr pi2_sum_at_point(const Expr& a, const Expr& b, const Rational& x) {
  try {
    return a + b;
  } catch (const UnsupportedExpression&) {
    auto va = a.eval(x);
    auto vb = b.eval(x);
    if (!va || !vb) throw;
    return Expr::constant(Rational(*va + *vb));
  }
}

PiecewiseFn add_piecewise(const PiecewiseFn& f, const PiecewiseFn& g) {
  std::vector<Rational> cuts;
  for (const auto* fn : {&f, &g}) {
    for (const auto& p : fn->pieces) {
      cuts.push_back(p.set.lo);
      cuts.push_back(p.set.hi);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.empty()) return {};

  std::vector<Interval> cells;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    cells.push_back(Interval::point(cuts[i]));
    if (i + 1 < cuts.size()) cells.push_back(Interval::open(cuts[i], cuts[i + 1]));
  }

  auto find = [](const PiecewiseFn& fn, const Rational& x) -> const Piece* {
    for (const auto& p : fn.pieces) {
      if (p.set.contains(x)) return &p;
    }
    return nullptr;
  };

  PiecewiseFn out;
  const Expr zero;
  for (const auto& cell : cells) {
    const Rational x = probe(cell);
    const Piece* pf = find(f, x);
    const Piece* pg = find(g, x);
    if (!pf && !pg) continue;
    const Expr& f1 = pf ? pf->pi1 : zero;
    const Expr& f2 = pf ? pf->pi2 : zero;
    const Expr& g1 = pg ? pg->pi1 : zero;
    const Expr& g2 = pg ? pg->pi2 : zero;

    std::vector<Interval> sub{cell};
    if (cell.lo < cell.hi) {
      auto cross = crossings(f1, g1, cell.lo, cell.hi);
      if (!cross) {
        out.pieces.push_back({cell, f1, f2 + g2});
        continue;
      }
      sub = cells_of(cell, *cross);
    }
    for (const auto& s : sub) {
      const Rational y = probe(s);
      const int c = compare_exprs_at(f1, g1, y);
      if (c > 0) {
        out.pieces.push_back({s, f1, f2});
      } else if (c < 0) {
        out.pieces.push_back({s, g1, g2});
      } else {
        out.pieces.push_back({s, f1, pi2_sum_at_point(f2, g2, y)});
      }
    }
  }

  // Merge touching cells that carry the same expressions.
  PiecewiseFn merged;
  for (auto& p : out.pieces) {
    if (!merged.pieces.empty()) {
      Piece& last = merged.pieces.back();
      const bool touching = last.set.hi == p.set.lo && (last.set.hi_closed != p.set.lo_closed);
      if (touching && last.pi1 == p.pi1 && last.pi2 == p.pi2) {
        last.set.hi = p.set.hi;
        last.set.hi_closed = p.set.hi_closed;
        continue;
      }
    }
    merged.pieces.push_back(std::move(p));
  }
  return merged;
}

SimpleFn add_simple_named(const SimpleFn& f, const SimpleFn& g) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto* fn : {&f, &g}) {
    for (const auto& p : fn->pieces) {
      for (const auto& n : p.set.names) {
        if (seen.insert(n).second) order.push_back(n);
      }
    }
  }
  std::vector<std::pair<std::string, HValue>> values;
  for (const auto& n : order) values.emplace_back(n, add(f.at(n), g.at(n)));
  return simple_from_values(values);
}

bool has_intervals(const SimpleFn& f) {
  return std::any_of(f.pieces.begin(), f.pieces.end(), [](const SimplePiece& p) { return !p.set.intervals.empty(); });
}

}  // namespace

MeasurableSet sublevel_set(const MeasureSpace& space, const HFunction& f, const HValue& v) {
  return std::visit(SublevelVisitor{v}, space, f);
}

HFunction pointwise_add_fn(const MeasureSpace& space, const HFunction& f, const HFunction& g) {
  const auto* sf = std::get_if<SimpleFn>(&f);
  const auto* sg = std::get_if<SimpleFn>(&g);
  if (!std::holds_alternative<IntervalSpace>(space)) {
    if (!sf || !sg) throw UnsupportedExpression("piecewise functions live on interval spaces");
    return add_simple_named(*sf, *sg);
  }
  if (sf && sg && !has_intervals(*sf) && !has_intervals(*sg)) return add_simple_named(*sf, *sg);
  const PiecewiseFn pf = sf ? to_piecewise(*sf) : std::get<PiecewiseFn>(f);
  const PiecewiseFn pg = sg ? to_piecewise(*sg) : std::get<PiecewiseFn>(g);
  return add_piecewise(pf, pg);
}

HFunction restrict_to(const HFunction& f, const MeasurableSet& L) {
  if (const auto* sf = std::get_if<SimpleFn>(&f)) {
    SimpleFn out;
    for (const auto& p : sf->pieces) {
      MeasurableSet s;
      for (const auto& n : p.set.names) {
        if (std::find(L.names.begin(), L.names.end(), n) != L.names.end()) s.names.push_back(n);
      }
      for (const auto& i : p.set.intervals) {
        for (const auto& j : L.intervals) {
          if (auto c = intersect(i, j)) s.intervals.push_back(*c);
        }
      }
      if (!s.empty()) out.pieces.push_back({p.coeff, std::move(s)});
    }
    return out;
  }
  PiecewiseFn out;
  for (const auto& p : std::get<PiecewiseFn>(f).pieces) {
    for (const auto& j : L.intervals) {
      if (auto c = intersect(p.set, j)) out.pieces.push_back({*c, p.pi1, p.pi2});
    }
  }
  return out;
}

SimpleFn scale(const HValue& c, const SimpleFn& f) {
  SimpleFn out;
  for (const auto& p : f.pieces) out.pieces.push_back({mul(c, p.coeff), p.set});
  return out;
}

SimpleFn simple_from_values(const std::vector<std::pair<std::string, HValue>>& values) {
  SimpleFn out;
  for (const auto& [name, v] : values) {
    if (v.is_zero()) continue;
    auto it = std::find_if(out.pieces.begin(), out.pieces.end(), [&](const SimplePiece& p) { return p.coeff == v; });
    if (it == out.pieces.end()) {
      out.pieces.push_back({v, MeasurableSet::of_names({name})});
    } else {
      it->set.names.push_back(name);
    }
  }
  return out;
}

bool pointwise_le(const AtomSpace& space, const SimpleFn& f, const SimpleFn& g) {
  return std::all_of(space.atoms().begin(), space.atoms().end(),
                     [&](const std::string& a) { return f.at(a) <= g.at(a); });
}

}  // namespace hint
