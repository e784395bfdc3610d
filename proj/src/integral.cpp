#include "hint/integral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hint/errors.hpp"

namespace hint {

HNonNeg integrate_simple(const SetFunction& mu, const SimpleFn& f) {
  f.validate(true);
  std::vector<HValue> terms;
  terms.reserve(f.pieces.size());
  for (const auto& p : f.pieces) terms.push_back(mul(p.coeff, mu(p.set)));
  return HNonNeg(sum_finite(terms));
}

HNonNeg integrate_simple(const MeasureSpace& space, const SimpleFn& f) {
  return integrate_simple(measure_of(space), f);
}

namespace {

bool positive(const HValue& v) { return HValue::zero() < v; }

// Witnesses straight from the pieces: on A_i the infimum is the coefficient.
T4Certificate simple_certificate(const MeasureSpace& space, const SimpleFn& f, const HNonNeg& value) {
  T4Certificate cert{value, {}, {}};
  if (value.value().is_zero()) return cert;
  const Witness* best = nullptr;
  std::vector<Witness> all;
  for (const auto& p : f.pieces) {
    if (!positive(p.coeff)) continue;
    HNonNeg mu = measure(space, p.set);
    if (!positive(mu)) continue;
    all.push_back({p.set, mu, p.coeff});
  }
  for (const auto& w : all) {
    if (!best || best->lower.d + best->measure.d() < w.lower.d + w.measure.d()) best = &w;
    if (w.lower.d + w.measure.d() == value.d()) cert.m_witnesses.push_back(w);
  }
  if (best) cert.d_witnesses.push_back(*best);
  return cert;
}

bool increasing(const Expr& e) {
  if (e.kind() == Expr::Kind::Pow) return true;
  return sgn(e.poly().coeff(1)) > 0;
}

bool positive_length(const Interval& i) { return i.lo < i.hi; }

// Positive-length open cells of P on which pi2 has a positive exact minimum.
std::vector<std::pair<Interval, Rational>> positive_cells(const Piece& p, int parts) {
  std::vector<std::pair<Interval, Rational>> out;
  const Rational step = (p.set.hi - p.set.lo) / parts;
  for (int k = 0; k < parts; ++k) {
    const Rational a = p.set.lo + step * k;
    const Rational b = a + step;
    try {
      Rational lo = p.pi2.extreme(a, b, false);
      if (sgn(lo) > 0) out.emplace_back(Interval::open(a, b), lo);
    } catch (const UnsupportedExpression&) {
    }
  }
  return out;
}

IntegralResult integrate_piecewise(const IntervalSpace& space, const PiecewiseFn& f) {
  f.validate(space);
  const HNonNeg zero;
  if (space.density.is_zero()) return {zero, {zero, {}, {}}};

  std::vector<const Piece*> fat;
  for (const auto& p : f.pieces) {
    if (positive_length(p.set)) fat.push_back(&p);
  }
  const bool vanishes = std::all_of(fat.begin(), fat.end(), [](const Piece* p) { return p->pi1.is_zero() && p->pi2.is_zero(); });
  if (vanishes) return {zero, {zero, {}, {}}};

  // ess sup of pi1: suprema over closures of positive-length pieces.
  Rational s = 0;
  const Piece* top = nullptr;
  for (const Piece* p : fat) {
    Rational sup = p->pi1.extreme(p->set.lo, p->set.hi, true);
    if (!top || sup > s) {
      s = sup;
      top = p;
    }
  }
  if (sgn(s) == 0) {
    bool any = std::any_of(fat.begin(), fat.end(), [](const Piece* p) { return !p->pi2.is_zero(); });
    if (!any) return {zero, {zero, {}, {}}};
  }

  // Top-dimension set: pieces where pi1 is the constant s.
  std::vector<const Piece*> top_set;
  for (const Piece* p : fat) {
    auto c = p->pi1.constant_value();
    if (c && *c == s) top_set.push_back(p);
  }
  Rational m = 0;
  for (const Piece* p : top_set) m += p->pi2.integrate(p->set.lo, p->set.hi, space.density);

  const HNonNeg value(Dim(Rational(space.dim_offset.value() + s)), ExtRational(m));
  T4Certificate cert{value, {}, {}};
  const MeasureSpace ms = space;
  auto witness = [&](const Interval& L, HValue lower) {
    return Witness{MeasurableSet::of_intervals({L}), measure(ms, MeasurableSet::of_intervals({L})), std::move(lower)};
  };

  if (sgn(s) > 0) {
    for (const Piece* p : top_set) {
      Rational inf = 0;
      try {
        inf = p->pi2.extreme(p->set.lo, p->set.hi, false);
      } catch (const UnsupportedExpression&) {
        // 0 is still a valid lower bound
      }
      cert.m_witnesses.push_back(witness(p->set, HValue(Dim(s), ExtRational(inf))));
    }
    if (!cert.m_witnesses.empty()) {
      cert.d_witnesses.push_back(cert.m_witnesses.front());
    } else {
      // Unattained: cut the top piece where pi1 >= t for t just below s.
      const Interval& P = top->set;
      const bool up = increasing(top->pi1);
      for (const Rational& eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
        Rational t = s - eps;
        if (sgn(t) <= 0) t = s * (1 - eps);
        Rational width = P.hi - P.lo;
        for (int k = 0; k < 256; ++k) {
          width /= 2;
          const Rational c = up ? Rational(P.hi - width) : Rational(P.lo + width);
          if (top->pi1.compare_at(c, t) >= 0) {
            Interval J = up ? Interval{c, P.hi, true, P.hi_closed} : Interval{P.lo, c, P.lo_closed, true};
            cert.d_witnesses.push_back(witness(J, HValue(Dim(t), ExtRational(0))));
            break;
          }
        }
      }
    }
  } else {
    for (const Piece* p : top_set) {
      for (auto& [cell, inf] : positive_cells(*p, 16)) {
        cert.m_witnesses.push_back(witness(cell, HValue(Dim(0), ExtRational(inf))));
      }
    }
    if (!cert.m_witnesses.empty()) cert.d_witnesses.push_back(cert.m_witnesses.front());
  }
  return {value, std::move(cert)};
}

}  // namespace

IntegralResult integrate(const MeasureSpace& space, const HFunction& f) {
  if (const auto* sf = std::get_if<SimpleFn>(&f)) {
    HNonNeg v = integrate_simple(space, *sf);
    return {v, simple_certificate(space, *sf, v)};
  }
  const auto* is = std::get_if<IntervalSpace>(&space);
  if (!is) throw UnsupportedExpression("piecewise functions live on interval spaces");
  return integrate_piecewise(*is, std::get<PiecewiseFn>(f));
}

HNonNeg graded_integral(const IntervalSpace& space, const PiecewiseFn& f) {
  auto d = f.constant_dimension();
  if (!d) throw std::invalid_argument("pi1 is not one constant across the pieces");
  if (sgn(*d) > 0) {
    std::vector<Interval> covered;
    for (const auto& p : f.pieces) covered.push_back(p.set);
    for (const auto& gap : subtract(space.bounds(), covered)) {
      if (sgn(space.nu(gap)) > 0) throw std::invalid_argument("pi1 is not constant on the space");
    }
  }
  PiecewiseFn lifted_fn = f;
  for (auto& p : lifted_fn.pieces) p.pi1 = Expr();
  const HNonNeg lifted = integrate(space, lifted_fn).value;
  if (lifted.value().is_zero()) {
    if (sgn(*d) == 0 || space.density.is_zero() || f.pieces.empty()) return HNonNeg();
    return HNonNeg(Dim(*d) + space.dim_offset, ExtRational(0));
  }
  return HNonNeg(Dim(*d) + lifted.d(), lifted.m());
}

ExtRational ess_sup(const IntervalSpace& space, const std::vector<RealPiece>& g) {
  Rational s = 0;
  if (space.density.is_zero()) return s;
  for (const auto& p : g) {
    if (!positive_length(p.set)) continue;
    s = std::max(s, p.g.extreme(p.set.lo, p.set.hi, true));
  }
  return s;
}

ExtRational ess_sup(const AtomSpace& space, const std::vector<std::pair<std::string, ExtRational>>& g) {
  ExtRational s = 0;
  for (const auto& [atom, v] : g) {
    if (space.weight(atom).m().sign() > 0 && s < v) s = v;
  }
  return s;
}

namespace {

std::vector<Interval> set_minus(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  std::vector<Interval> out;
  for (const auto& i : a) {
    auto rest = subtract(i, b);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

HNonNeg ordinary_atoms(const AtomSpace& space, const SimpleFn& f) {
  std::vector<std::pair<std::string, ExtRational>> pi1;
  for (const auto& a : space.atoms()) {
    if (!space.weight(a).d().is_zero()) throw std::invalid_argument("atom weight " + a + " is not of the form (0, nu)");
    pi1.emplace_back(a, ExtRational(f.at(a).d.value()));
  }
  const ExtRational s = ess_sup(space, pi1);
  ExtRational m = 0;
  for (const auto& a : space.atoms()) {
    const HValue v = f.at(a);
    if (ExtRational(v.d.value()) != s) continue;
    m = *checked_add(m, v.m * space.weight(a).m());
  }
  return HNonNeg(Dim(s.value()), m);
}

HNonNeg ordinary_interval(const IntervalSpace& space, const PiecewiseFn& f) {
  if (!space.dim_offset.is_zero()) throw std::invalid_argument("the space is not of the form (0, nu)");
  f.validate(space);
  if (space.density.is_zero()) return HNonNeg();
  std::vector<RealPiece> pi1;
  for (const auto& p : f.pieces) pi1.push_back({p.set, p.pi1});
  const Rational s = ess_sup(space, pi1).value();

  // E_f = {f < (s, +inf)} minus {f < (s, -inf)}.
  const MeasureSpace ms = space;
  const auto upto = sublevel_set(ms, f, HValue(Dim(s), ExtRational::pos_inf()));
  const auto below = sublevel_set(ms, f, HValue(Dim(s), ExtRational::neg_inf()));
  const auto E = set_minus(upto.intervals, below.intervals);

  Rational m = 0;
  for (const auto& p : f.pieces) {
    for (const auto& e : E) {
      auto c = intersect(p.set, e);
      if (c && positive_length(*c)) m += p.pi2.integrate(c->lo, c->hi, space.density);
    }
  }
  return HNonNeg(Dim(s), ExtRational(m));
}

}  // namespace

HNonNeg integrate_ordinary(const MeasureSpace& space, const HFunction& f) {
  if (const auto* as = std::get_if<AtomSpace>(&space)) {
    const auto* sf = std::get_if<SimpleFn>(&f);
    if (!sf) throw UnsupportedExpression("piecewise functions live on interval spaces");
    return ordinary_atoms(*as, *sf);
  }
  if (const auto* is = std::get_if<IntervalSpace>(&space)) {
    if (const auto* sf = std::get_if<SimpleFn>(&f)) return ordinary_interval(*is, to_piecewise(*sf));
    return ordinary_interval(*is, std::get<PiecewiseFn>(f));
  }
  throw std::invalid_argument("catalog spaces carry no underlying ordinary measure");
}

SetFunction indefinite(const MeasureSpace& space, const HFunction& f) {
  return [space, f](const MeasurableSet& L) -> HValue { return integrate(space, restrict_to(f, L)).value; };
}

ISimpleGapReport isimple_sup_gap(const AtomSpace& space, const SimpleFn& f, const std::vector<SimpleFn>& samples) {
  ISimpleGapReport report;
  report.samples = samples.size();
  const MeasureSpace ms = space;
  report.integral = integrate(ms, f).value;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const SimpleFn& g = samples[i];
    try {
      g.validate(true);
    } catch (const std::exception& e) {
      report.violations.push_back(i);
      report.reasons.push_back(e.what());
      continue;
    }
    if (!pointwise_le(space, g, f)) {
      report.violations.push_back(i);
      report.reasons.push_back("sample is not below f");
      continue;
    }
    const HValue v = integrate_simple(ms, g);
    if (report.integral < v) {
      report.violations.push_back(i);
      report.reasons.push_back("sample integral " + to_string(v) + " exceeds " + to_string(report.integral));
      continue;
    }
    report.largest = std::max(report.largest, v);
  }
  return report;
}

ApproxGapWitness approx_gap_witness(const std::vector<SimpleFn>& chain) {
  std::vector<Rational> dims;
  for (const auto& g : chain) {
    for (const auto& p : g.pieces) dims.push_back(p.coeff.d.value());
  }
  auto used = [&](const Rational& x) { return std::find(dims.begin(), dims.end(), x) != dims.end(); };
  // 1/2, 1/3, 2/3, 1/4, 3/4, ... has more points than any chain has dimensions.
  Rational x = Rational(1, 2);
  bool found = false;
  for (long q = 2; !found; ++q) {
    for (long p = 1; p < q && !found; ++p) {
      if (std::gcd(p, q) != 1) continue;
      x = Rational(p, q);
      found = !used(x);
    }
  }
  const HValue low(Dim(x), ExtRational(0));
  const HValue high(Dim(x), ExtRational(1));
  bool verified = true;
  for (const auto& g : chain) {
    const HValue v = g.at(x);
    if (low < v && v < high) verified = false;
  }
  return {x, verified};
}

std::vector<std::string> check_certificate(const MeasureSpace& space, const HFunction& f, const T4Certificate& cert) {
  std::vector<std::string> problems;
  const HValue& value = cert.value;
  auto check = [&](const Witness& w, const std::string& tag) {
    const std::string where = tag + " " + to_string(w.set);
    const HNonNeg mu = measure(space, w.set);
    if (!(mu == w.measure)) problems.push_back(where + ": recorded measure " + to_string(w.measure) + " but got " + to_string(mu));
    if (!positive(mu)) problems.push_back(where + ": measure is not positive");
    if (!positive(w.lower)) problems.push_back(where + ": lower bound is not positive");
    const MeasurableSet below = sublevel_set(space, restrict_to(f, w.set), w.lower);
    for (const auto& n : below.names) {
      if (std::find(w.set.names.begin(), w.set.names.end(), n) != w.set.names.end()) {
        problems.push_back(where + ": f drops below " + to_string(w.lower) + " at " + n);
      }
    }
    for (const auto& i : below.intervals) {
      for (const auto& j : w.set.intervals) {
        if (intersect(i, j)) problems.push_back(where + ": f drops below " + to_string(w.lower) + " on " + to_string(i));
      }
    }
  };
  for (const auto& w : cert.d_witnesses) {
    check(w, "d-witness");
    if (value.d < w.lower.d + w.measure.d()) problems.push_back("d-witness exceeds the reported dimension");
  }
  std::vector<MeasurableSet> family;
  ExtRational total = 0;
  for (const auto& w : cert.m_witnesses) {
    check(w, "m-witness");
    if (!(w.lower.d + w.measure.d() == value.d)) problems.push_back("m-witness is off the reported dimension");
    family.push_back(w.set);
    total = *checked_add(total, w.lower.m * w.measure.m());
  }
  try {
    check_disjoint(family);
  } catch (const NonDisjoint& e) {
    problems.push_back(std::string("m-witnesses overlap: ") + e.what());
  }
  if (value.m < total) problems.push_back("m-witness sum " + to_string(total) + " exceeds " + to_string(value.m));
  if (positive(value) && cert.d_witnesses.empty()) problems.push_back("positive value without a d-witness");
  return problems;
}

}  // namespace hint
