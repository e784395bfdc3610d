#include "hint/oracle.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "hint/errors.hpp"
#include "hint/integral.hpp"

namespace hint {

Rational Rng::small_rational() {
  const long p = static_cast<long>(below(101));
  const long q = 1 + static_cast<long>(below(100));
  Rational r(p, q);
  r.canonicalize();
  return r;
}

namespace {

const std::array<Rational, 5> kCommonDims = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};

Rational random_dim(Rng& rng) {
  if (rng.chance(1, 2)) return kCommonDims[rng.below(kCommonDims.size())];
  return rng.small_rational();
}

}  // namespace

HValue random_hvalue(Rng& rng, Profile profile) {
  if (rng.chance(1, 10)) return HValue::zero();
  Dim d(random_dim(rng));
  const bool infinite = profile != Profile::FiniteNonNeg && profile != Profile::Signed && rng.chance(1, 8);
  const bool negative = (profile == Profile::Signed || profile == Profile::WithInfinities) && rng.chance(1, 2);
  ExtRational m;
  if (infinite) {
    m = negative ? ExtRational::neg_inf() : ExtRational::pos_inf();
  } else if (!rng.chance(1, 10)) {
    Rational q = rng.small_rational();
    m = negative ? ExtRational(Rational(-q)) : ExtRational(q);
  }
  return {d, m};
}

HValue random_hvalue(std::uint64_t seed, Profile profile) {
  Rng rng(seed);
  return random_hvalue(rng, profile);
}

AtomSpace random_atom_space(Rng& rng, std::size_t n) {
  if (n < 1 || n > 6) throw std::invalid_argument("atom spaces hold 1 to 6 atoms");
  AtomSpace sp;
  for (std::size_t i = 0; i < n; ++i) sp.add_atom("a" + std::to_string(i), HNonNeg(random_hvalue(rng, Profile::NonNeg)));
  return sp;
}

AtomSpace random_atom_space(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  return random_atom_space(rng, n);
}

SimpleFn random_simple(Rng& rng, const AtomSpace& space, bool allow_infinite) {
  std::vector<std::pair<std::string, HValue>> values;
  for (const auto& a : space.atoms()) {
    if (rng.chance(1, 5)) continue;
    values.emplace_back(a, random_hvalue(rng, allow_infinite ? Profile::NonNeg : Profile::FiniteNonNeg));
  }
  return simple_from_values(values);
}

SimpleFn random_minorant(Rng& rng, const AtomSpace& space, const SimpleFn& f, bool allow_infinite) {
  std::vector<std::pair<std::string, HValue>> values;
  for (const auto& a : space.atoms()) {
    const HValue v = f.at(a);
    HValue g;
    switch (rng.below(4)) {
      case 0:
        break;
      case 1:
        g = v;
        break;
      case 2:
        // lower dimension, anything in the second coordinate
        if (!v.d.is_zero()) {
          const long p = static_cast<long>(rng.below(10));
          g = HValue(Dim(Rational(v.d.value() * Rational(p, 10))),
                     random_hvalue(rng, allow_infinite ? Profile::NonNeg : Profile::FiniteNonNeg).m);
        }
        break;
      default:
        if (v.m.is_finite()) {
          const long q = 1 + static_cast<long>(rng.below(10));
          const long p = static_cast<long>(rng.below(static_cast<std::uint64_t>(q) + 1));
          g = HValue(v.d, ExtRational(Rational(v.m.value() * Rational(p, q))));
        } else {
          g = HValue(v.d, ExtRational(rng.small_rational()));
        }
        break;
    }
    if (g.d.is_zero() && g.m.is_zero()) continue;
    values.emplace_back(a, g);
  }
  return simple_from_values(values);
}

std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // Restricted growth strings.
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      std::vector<std::vector<std::size_t>> p(blocks);
      for (std::size_t k = 0; k < n; ++k) p[label[k]].push_back(k);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t b = 0; b <= blocks && b <= i; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

namespace {

MeasurableSet set_of_mask(const AtomSpace& space, unsigned mask) {
  MeasurableSet s;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (mask & (1u << i)) s.names.push_back(space.atoms()[i]);
  }
  return s;
}

}  // namespace

HValue sup_formula_brute_force(const AtomSpace& space, const SimpleFn& f, const std::function<HValue(const MeasurableSet&)>& mu) {
  const std::size_t n = space.size();
  const unsigned full = (1u << n);
  std::vector<HValue> mu_of(full), inf_of(full);
  std::vector<bool> admissible(full, false);
  bool any = false;
  Dim d;
  for (unsigned mask = 1; mask < full; ++mask) {
    mu_of[mask] = mu(set_of_mask(space, mask));
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      const HValue v = f.at(space.atoms()[i]);
      if (first || v < inf_of[mask]) inf_of[mask] = v;
      first = false;
    }
    admissible[mask] = HValue::zero() < mu_of[mask] && HValue::zero() < inf_of[mask];
    if (admissible[mask]) {
      const Dim cand = inf_of[mask].d + mu_of[mask].d;
      if (!any || d < cand) d = cand;
      any = true;
    }
  }
  if (!any) return HValue::zero();

  // Disjoint families: each atom unused (0) or in block 1..k.
  ExtRational best = 0;
  std::vector<unsigned> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (blocks.empty()) return;
      ExtRational total = 0;
      for (unsigned b : blocks) {
        if (!admissible[b] || !(inf_of[b].d + mu_of[b].d == d)) return;
        total = *checked_add(total, inf_of[b].m * mu_of[b].m);
      }
      if (best < total) best = total;
      return;
    }
    rec(i + 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= (1u << i);
      rec(i + 1);
      blocks[b] &= ~(1u << i);
    }
    blocks.push_back(1u << i);
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return {d, best};
}

Hooks default_hooks() {
  Hooks h;
  h.add = [](const HValue& a, const HValue& b) { return add(a, b); };
  h.measure = [](const AtomSpace& sp, const MeasurableSet& s) -> HValue { return measure(MeasureSpace(sp), s); };
  return h;
}

Hooks mutant_add_hooks() {
  Hooks h = default_hooks();
  h.add = [](const HValue& a, const HValue& b) {
    auto m = checked_add(a.m, b.m);
    if (!m) throw UndefinedSum("mutant sum undefined");
    return HValue(a.d, *m);
  };
  return h;
}

Hooks mutant_measure_hooks() {
  Hooks h = default_hooks();
  h.measure = [](const AtomSpace& sp, const MeasurableSet& s) -> HValue {
    MeasurableSet t = s;
    if (t.names.size() >= 2) t.names.pop_back();
    return measure(MeasureSpace(sp), t);
  };
  return h;
}

Hooks mutant_integrate_hooks() {
  Hooks h = default_hooks();
  h.integrate = [](const AtomSpace& sp, const SimpleFn& f) -> HValue {
    std::vector<std::string> kept(sp.atoms().begin(), sp.atoms().end() - 1);
    const auto g = std::get<SimpleFn>(restrict_to(f, MeasurableSet::of_names(kept)));
    return integrate_simple(MeasureSpace(sp), g);
  };
  return h;
}

std::string render_text(const LawReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << r.trials << " trials";
  if (r.trials > 0) os << " (seeds " << r.first_seed << ".." << r.first_seed + r.trials - 1 << ")";
  os << "\n";
  for (const auto& law : r.laws) {
    auto it = r.checks.find(law);
    os << "  " << law << ": " << (it == r.checks.end() ? 0 : it->second) << " checks\n";
  }
  os << "violations: " << r.violation_count << "\n";
  for (const auto& v : r.violations) os << "  VIOLATION " << v.law << " seed=" << v.seed << " " << v.detail << "\n";
  return os.str();
}

namespace {

constexpr std::size_t kKeptViolations = 20;

class Recorder {
 public:
  Recorder(LawReport& r) : r_(r) {}

  void declare(const std::string& law) {
    if (std::find(r_.laws.begin(), r_.laws.end(), law) == r_.laws.end()) r_.laws.push_back(law);
  }

  // Runs one check; an exception counts as a violation.
  template <class F>
  void check(const std::string& law, std::uint64_t seed, F&& body) {
    declare(law);
    ++r_.checks[law];
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail += std::string(" threw: ") + e.what();
    }
    if (ok) return;
    ++r_.violation_count;
    if (r_.violations.size() < kKeptViolations) r_.violations.push_back({law, seed, detail});
  }

 private:
  LawReport& r_;
};

std::string show(std::initializer_list<HValue> vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + to_string(v);
  return out;
}

std::string show_space(const AtomSpace& sp) {
  std::string out = "space{";
  for (const auto& a : sp.atoms()) out += a + ":" + to_string(sp.weight(a).value()) + " ";
  return out + "}";
}

std::string show_fn(const AtomSpace& sp, const SimpleFn& f) {
  std::string out = "f{";
  for (const auto& a : sp.atoms()) out += a + ":" + to_string(f.at(a)) + " ";
  return out + "}";
}

const std::array<std::size_t, 7> kBell = {1, 1, 2, 5, 15, 52, 203};

}  // namespace

LawReport check_algebra_laws(std::size_t trials, std::uint64_t seed, const Hooks& H) {
  LawReport r;
  r.suite = "algebra";
  r.trials = trials;
  r.first_seed = seed;
  Recorder rec(r);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t s = seed + i;
    Rng rng(s);
    const HValue a = random_hvalue(rng, Profile::WithInfinities);
    const HValue b = random_hvalue(rng, Profile::WithInfinities);
    const HValue c = random_hvalue(rng, Profile::WithInfinities);
    const HValue x = random_hvalue(rng, Profile::NonNeg);
    const HValue y = random_hvalue(rng, Profile::NonNeg);
    const HValue z = random_hvalue(rng, Profile::NonNeg);

    rec.check("mul-commutative", s, [&](std::string& why) {
      why = show({a, b});
      return mul(a, b) == mul(b, a);
    });
    rec.check("mul-associative", s, [&](std::string& why) {
      why = show({a, b, c});
      return mul(a, mul(b, c)) == mul(mul(a, b), c);
    });
    rec.check("zero-product", s, [&](std::string& why) {
      why = show({a, b});
      return mul(a, b).is_zero() == (a.is_zero() || b.is_zero());
    });
    rec.check("distributive", s, [&](std::string& why) {
      why = show({x, y, z});
      return mul(x, H.add(y, z)) == H.add(mul(x, y), mul(x, z));
    });

    SeqDescriptor seq;
    const std::size_t len = rng.below(5);
    for (std::size_t k = 0; k < len; ++k) seq.prefix.emplace_back(random_hvalue(rng, Profile::NonNeg));
    if (!rng.chance(1, 3)) seq.tail = HNonNeg(random_hvalue(rng, Profile::NonNeg));
    rec.check("series-distributive", s, [&](std::string& why) {
      SeqDescriptor scaled;
      for (const auto& t : seq.prefix) scaled.prefix.emplace_back(mul(x, t));
      scaled.tail = HNonNeg(mul(x, seq.tail));
      why = "a=" + to_string(x) + " tail=" + to_string(seq.tail.value()) + " prefix of " + std::to_string(len);
      return mul(x, sum_described(seq)) == sum_described(scaled).value();
    });
    rec.check("order-compatible", s, [&](std::string& why) {
      const HValue& lo = std::min(x, y);
      const HValue& hi = std::max(x, y);
      why = show({lo, hi, z});
      return mul(lo, z) <= mul(hi, z);
    });
    const Rational k = rng.chance(1, 10) ? Rational(0) : Rational(rng.chance(1, 2) ? rng.small_rational() : Rational(-rng.small_rational()));
    rec.check("embedding", s, [&](std::string& why) {
      why = "c=" + to_string(k) + " " + show({a});
      const HValue expect = sgn(k) == 0 ? HValue::zero() : mul(HValue(Dim(0), ExtRational(k)), a);
      return scalar_mul(k, a) == expect;
    });
    rec.check("add-commutative", s, [&](std::string& why) {
      why = show({x, y});
      return H.add(x, y) == H.add(y, x);
    });
    rec.check("add-associative", s, [&](std::string& why) {
      why = show({x, y, z});
      return H.add(x, H.add(y, z)) == H.add(H.add(x, y), z);
    });
    rec.check("add-upper-bound", s, [&](std::string& why) {
      why = show({x, y});
      const HValue sum = H.add(x, y);
      return x <= sum && y <= sum;
    });
    rec.check("add-identity", s, [&](std::string& why) {
      why = show({x});
      return H.add(x, HValue::zero()) == x;
    });
  }
  if (trials > 0) {
    rec.check("distributivity-counterexample", seed, [&](std::string& why) {
      const HValue one(Dim(1), ExtRational(1));
      const HValue p(Dim(0), ExtRational(5)), q(Dim(0), ExtRational(-5));
      const HValue lhs = mul(one, H.add(p, q));
      const HValue rhs = H.add(mul(one, p), mul(one, q));
      why = "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
      return lhs == HValue::zero() && rhs == HValue(Dim(1), ExtRational(0));
    });
  }
  return r;
}

namespace {

struct Ctx {
  const AtomSpace& space;
  const Hooks& H;

  HValue mu(const MeasurableSet& s) const { return H.measure(space, s); }
  HValue integral(const SimpleFn& f) const {
    if (H.integrate) return H.integrate(space, f);
    return integrate_simple([this](const MeasurableSet& s) { return mu(s); }, f);
  }
};

SimpleFn only(const SimpleFn& f, const MeasurableSet& L) { return std::get<SimpleFn>(restrict_to(f, L)); }

bool sigma_additive(const std::vector<HValue>& by_mask, std::size_t n, std::string& why) {
  const unsigned full = (1u << n) - 1;
  if (!by_mask[0].is_zero()) {
    why = "empty set gets " + to_string(by_mask[0]);
    return false;
  }
  for (const auto& p : set_partitions(n)) {
    std::vector<HValue> parts;
    for (const auto& block : p) {
      unsigned m = 0;
      for (auto i : block) m |= (1u << i);
      parts.push_back(by_mask[m]);
    }
    const HValue sum = sum_finite(parts);
    if (!(sum == by_mask[full])) {
      why = "partition into " + std::to_string(p.size()) + " blocks sums to " + to_string(sum) + " but the whole is " +
            to_string(by_mask[full]);
      return false;
    }
  }
  return true;
}

}  // namespace

LawReport check_integral_laws(std::size_t trials, std::uint64_t seed, const Hooks& H) {
  LawReport r;
  r.suite = "integral";
  r.trials = trials;
  r.first_seed = seed;
  Recorder rec(r);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t s = seed + i;
    Rng rng(s);
    const std::size_t n = 1 + rng.below(6);
    const AtomSpace space = random_atom_space(rng, n);
    const SimpleFn f = random_simple(rng, space, false);
    const SimpleFn g = random_simple(rng, space, false);
    const HValue c = random_hvalue(rng, Profile::FiniteNonNeg);
    const unsigned split = static_cast<unsigned>(rng.below(1u << n));
    std::vector<SimpleFn> minorants;
    for (int k = 0; k < 3; ++k) minorants.push_back(random_minorant(rng, space, f, k > 0));

    const Ctx ctx{space, H};
    const MeasureSpace ms = space;
    const std::string where = show_space(space) + " " + show_fn(space, f);

    rec.check("additivity", s, [&](std::string& why) {
      const auto fg = std::get<SimpleFn>(pointwise_add_fn(ms, f, g));
      const HValue lhs = ctx.integral(fg);
      const HValue rhs = add(ctx.integral(f), ctx.integral(g));
      why = where + " " + show_fn(space, g) + " -> " + show({lhs, rhs});
      return lhs == rhs;
    });
    rec.check("homogeneity", s, [&](std::string& why) {
      const HValue lhs = ctx.integral(scale(c, f));
      const HValue rhs = mul(c, ctx.integral(f));
      why = where + " c=" + to_string(c) + " -> " + show({lhs, rhs});
      return lhs == rhs;
    });
    rec.check("monotonicity", s, [&](std::string& why) {
      const auto fg = std::get<SimpleFn>(pointwise_add_fn(ms, f, g));
      const HValue If = ctx.integral(f);
      const HValue Ifg = ctx.integral(fg);
      const HValue Ih = ctx.integral(minorants[0]);
      why = where + " -> " + show({Ih, If, Ifg});
      return Ih <= If && If <= Ifg;
    });
    rec.check("set-additivity", s, [&](std::string& why) {
      const MeasurableSet A = set_of_mask(space, split);
      const MeasurableSet B = set_of_mask(space, ((1u << n) - 1) & ~split);
      const HValue lhs = add(ctx.integral(only(f, A)), ctx.integral(only(f, B)));
      const HValue rhs = ctx.integral(f);
      why = where + " split=" + std::to_string(split) + " -> " + show({lhs, rhs});
      return lhs == rhs;
    });
    rec.check("zero-law", s, [&](std::string& why) {
      MeasurableSet support;
      for (const auto& a : space.atoms()) {
        if (!f.at(a).is_zero()) support.names.push_back(a);
      }
      const HValue I = ctx.integral(f);
      why = where + " -> " + to_string(I);
      return I.is_zero() == ctx.mu(support).is_zero();
    });
    rec.check("partition-coverage", s, [&](std::string& why) {
      const auto count = set_partitions(n).size();
      why = std::to_string(count) + " partitions of " + std::to_string(n);
      return count == kBell[n];
    });
    rec.check("measure-sigma-additivity", s, [&](std::string& why) {
      std::vector<HValue> by_mask(1u << n);
      for (unsigned m = 0; m < (1u << n); ++m) by_mask[m] = ctx.mu(set_of_mask(space, m));
      const bool ok = sigma_additive(by_mask, n, why);
      why = show_space(space) + " " + why;
      return ok;
    });
    rec.check("indefinite-sigma-additivity", s, [&](std::string& why) {
      std::vector<HValue> by_mask(1u << n);
      for (unsigned m = 0; m < (1u << n); ++m) by_mask[m] = ctx.integral(only(f, set_of_mask(space, m)));
      const bool ok = sigma_additive(by_mask, n, why);
      why = where + " " + why;
      return ok;
    });
    rec.check("sup-formula-agreement", s, [&](std::string& why) {
      const HValue brute = sup_formula_brute_force(space, f, [&](const MeasurableSet& L) { return ctx.mu(L); });
      const HValue I = ctx.integral(f);
      why = where + " -> brute " + to_string(brute) + " vs " + to_string(I);
      return brute == I;
    });
    rec.check("ordinary-agreement", s, [&](std::string& why) {
      AtomSpace flat;
      for (const auto& a : space.atoms()) {
        const ExtRational m = space.weight(a).m();
        flat.add_atom(a, m.is_zero() ? HNonNeg() : HNonNeg(Dim(0), m));
      }
      const Ctx fctx{flat, H};
      const HValue I = fctx.integral(f);
      const HValue ord = integrate_ordinary(MeasureSpace(flat), f);
      why = show_space(flat) + " " + show_fn(space, f) + " -> " + show({I, ord});
      return I == ord;
    });
    rec.check("isimple-minorant", s, [&](std::string& why) {
      const HValue If = ctx.integral(f);
      for (const auto& h : minorants) {
        const HValue Ih = ctx.integral(h);
        if (!pointwise_le(space, h, f) || If < Ih) {
          why = where + " minorant " + show_fn(space, h) + " -> " + show({Ih, If});
          return false;
        }
      }
      return true;
    });
    rec.check("minorant-attainment", s, [&](std::string& why) {
      const HValue direct = integrate_simple([&](const MeasurableSet& L) { return ctx.mu(L); }, f);
      const HValue I = ctx.integral(f);
      why = where + " -> simple sum " + to_string(direct) + " vs integral " + to_string(I);
      return direct == I;
    });
    rec.check("certificate", s, [&](std::string& why) {
      const auto res = integrate(ms, f);
      const auto problems = check_certificate(ms, f, res.certificate);
      why = where + (problems.empty() ? "" : " " + problems.front());
      return problems.empty();
    });
  }
  return r;
}

LawReport minorant_sample_check(const AtomSpace& space, const SimpleFn& f, std::size_t samples, std::uint64_t seed,
                                const Hooks& H) {
  LawReport r;
  r.suite = "minorant";
  r.trials = samples;
  r.first_seed = seed;
  Recorder rec(r);
  const Ctx ctx{space, H};
  const std::string where = show_space(space) + " " + show_fn(space, f);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t s = seed + i;
    Rng rng(s);
    const SimpleFn g = random_minorant(rng, space, f, i % 2 == 1);
    rec.check("minorant-bound", s, [&](std::string& why) {
      const HValue Ig = ctx.integral(g);
      const HValue If = ctx.integral(f);
      why = where + " minorant " + show_fn(space, g) + " -> " + show({Ig, If});
      return pointwise_le(space, g, f) && Ig <= If;
    });
  }
  if (samples > 0) {
    rec.check("sup-attained-at-f", seed, [&](std::string& why) {
      const HValue direct = integrate_simple([&](const MeasurableSet& L) { return ctx.mu(L); }, f);
      const HValue I = ctx.integral(f);
      why = where + " -> simple sum " + to_string(direct) + " vs integral " + to_string(I);
      return direct == I;
    });
  }
  return r;
}

}  // namespace hint
