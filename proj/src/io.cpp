#include "hint/io.hpp"

#include <fstream>
#include <sstream>

#include "hint/errors.hpp"

namespace hint {

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

// Reparse errors inside a string value with the JSON path in front.
template <class F>
auto within(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Rational rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) fail(path, "inexact number; write rationals as strings \"p/q\"");
  const std::string s = text(j, path);
  return within(path, [&] { return parse_rational(s); });
}

HValue hvalue(const Json& j, const std::string& path) {
  const std::string s = text(j, path);
  return within(path, [&] { return parse_hvalue(s); });
}

HNonNeg hnonneg(const Json& j, const std::string& path) {
  const HValue v = hvalue(j, path);
  if (v.m.sign() < 0) fail(path, "negative measure coordinate in " + to_string(v));
  return HNonNeg(v);
}

bool flag(const Json& j, const char* key, bool fallback, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) fail(path + "." + key, "expected true or false");
  return it->get<bool>();
}

Interval interval(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an interval object");
  if (j.contains("point")) return Interval::point(rat(j["point"], path + ".point"));
  Interval i{rat(field(j, "lo", path), path + ".lo"), rat(field(j, "hi", path), path + ".hi"),
             flag(j, "lo_closed", false, path), flag(j, "hi_closed", false, path)};
  if (i.is_empty()) fail(path, "empty interval " + to_string(i));
  return i;
}

Point2 point2(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a point [\"x\", \"y\"]");
  return {rat(j[0], path + "[0]"), rat(j[1], path + "[1]")};
}

std::vector<Primitive2> primitives(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Primitive2> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const std::string type = text(field(j[i], "type", p), p + ".type");
    Primitive2 k;
    if (j[i].contains("name")) k.name = text(j[i]["name"], p + ".name");
    if (type == "point") {
      k.kind = PrimKind::Point;
      k.p = k.q = point2(field(j[i], "at", p), p + ".at");
    } else if (type == "segment" || type == "line") {
      k.kind = type == "line" ? PrimKind::Line : PrimKind::Segment;
      k.p = point2(field(j[i], "p", p), p + ".p");
      k.q = point2(field(j[i], "q", p), p + ".q");
    } else {
      fail(p + ".type", "unknown primitive type '" + type + "'");
    }
    out.push_back(std::move(k));
  }
  return out;
}

CatalogSet catalog_set(const Json& j, const std::string& path) {
  CatalogSet c;
  c.name = text(field(j, "name", path), path + ".name");
  if (j.contains("ambient")) {
    if (!j["ambient"].is_number_integer()) fail(path + ".ambient", "expected 1, 2 or 4");
    c.ambient = j["ambient"].get<int>();
  }
  c.hvalue = hnonneg(field(j, "hvalue", path), path + ".hvalue");
  if (j.contains("kind")) {
    const std::string k = text(j["kind"], path + ".kind");
    c.kind = within(path + ".kind", [&] { return parse_catalog_kind(k); });
  }
  return c;
}

}  // namespace

MeasurableSet parse_set(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of names and intervals");
  MeasurableSet s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (j[i].is_string()) {
      s.names.push_back(j[i].get<std::string>());
    } else {
      s.intervals.push_back(interval(j[i], p));
    }
  }
  return s;
}

MeasureSpace parse_space(const Json& j) {
  const std::string path = "space";
  const std::string kind = text(field(j, "kind", path), path + ".kind");
  if (kind == "atoms") {
    const Json& atoms = field(j, "atoms", path);
    if (!atoms.is_object()) fail(path + ".atoms", "expected an object of id -> \"(d, m)\"");
    AtomSpace sp;
    for (const auto& [id, w] : atoms.items()) {
      const std::string p = path + ".atoms." + id;
      try {
        sp.add_atom(id, hnonneg(w, p));
      } catch (const std::invalid_argument& e) {
        fail(p, e.what());
      }
    }
    return sp;
  }
  if (kind == "interval") {
    IntervalSpace sp;
    if (j.contains("lo")) sp.lo = rat(j["lo"], path + ".lo");
    if (j.contains("hi")) sp.hi = rat(j["hi"], path + ".hi");
    if (!(sp.lo < sp.hi)) fail(path, "need lo < hi");
    if (j.contains("dim_offset")) {
      const Rational d = rat(j["dim_offset"], path + ".dim_offset");
      if (sgn(d) < 0) fail(path + ".dim_offset", "negative dimension");
      sp.dim_offset = Dim(d);
    }
    if (j.contains("density")) {
      const Json& dj = j["density"];
      if (!dj.is_array()) fail(path + ".density", "expected coefficients, lowest degree first");
      std::vector<Rational> cs;
      for (std::size_t i = 0; i < dj.size(); ++i) cs.push_back(rat(dj[i], path + ".density[" + std::to_string(i) + "]"));
      sp.density = Polynomial(cs);
    }
    sp.validate();
    return sp;
  }
  if (kind == "catalog") {
    CatalogSpace sp{Catalog::standard()};
    if (j.contains("sets")) {
      const Json& sets = j["sets"];
      if (!sets.is_array()) fail(path + ".sets", "expected an array");
      for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::string p = path + ".sets[" + std::to_string(i) + "]";
        try {
          sp.catalog.add(catalog_set(sets[i], p));
        } catch (const std::invalid_argument& e) {
          fail(p, e.what());
        }
      }
    }
    return sp;
  }
  fail(path + ".kind", "unknown space kind '" + kind + "'");
}

Expr parse_expr(const Json& j, const std::string& path) {
  const std::string kind = text(field(j, "kind", path), path + ".kind");
  if (kind == "const") return Expr::constant(rat(field(j, "value", path), path + ".value"));
  if (kind == "affine") return Expr::affine(rat(field(j, "a", path), path + ".a"), rat(field(j, "b", path), path + ".b"));
  if (kind == "pow") {
    const Rational coef = j.contains("coef") ? rat(j["coef"], path + ".coef") : Rational(1);
    const Rational exp = rat(field(j, "exp", path), path + ".exp");
    try {
      return Expr::power(coef, exp);
    } catch (const UnsupportedExpression& e) {
      fail(path, e.what());
    }
  }
  if (kind == "poly") {
    const Json& cj = field(j, "coeffs", path);
    if (!cj.is_array()) fail(path + ".coeffs", "expected coefficients, lowest degree first");
    std::vector<Rational> cs;
    for (std::size_t i = 0; i < cj.size(); ++i) cs.push_back(rat(cj[i], path + ".coeffs[" + std::to_string(i) + "]"));
    return Expr::polynomial(Polynomial(cs));
  }
  fail(path + ".kind", "unknown expression kind '" + kind + "'");
}

HFunction parse_function(const Json& j) {
  const std::string path = "function";
  if (!j.is_object()) fail(path, "expected an object");
  if (j.contains("simple")) {
    const Json& ps = j["simple"];
    if (!ps.is_array()) fail(path + ".simple", "expected an array");
    SimpleFn f;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::string p = path + ".simple[" + std::to_string(i) + "]";
      f.pieces.push_back({hvalue(field(ps[i], "coeff", p), p + ".coeff"), parse_set(field(ps[i], "set", p), p + ".set")});
    }
    return f;
  }
  const Json& ps = field(j, "pieces", path);
  if (!ps.is_array()) fail(path + ".pieces", "expected an array");
  PiecewiseFn f;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string p = path + ".pieces[" + std::to_string(i) + "]";
    f.pieces.push_back({interval(field(ps[i], "set", p), p + ".set"), parse_expr(field(ps[i], "pi1", p), p + ".pi1"),
                        parse_expr(field(ps[i], "pi2", p), p + ".pi2")});
  }
  return f;
}

ClusterScenario parse_continuity(const Json& j) {
  const std::string path = "scenario";
  ClusterScenario s;
  if (j.contains("catalog")) {
    const Json& cj = j["catalog"];
    if (!cj.is_array()) fail(path + ".catalog", "expected an array");
    for (std::size_t i = 0; i < cj.size(); ++i) {
      const std::string p = path + ".catalog[" + std::to_string(i) + "]";
      try {
        s.catalog.add(catalog_set(cj[i], p));
      } catch (const std::invalid_argument& e) {
        fail(p, e.what());
      }
    }
  }
  if (j.contains("jumps")) {
    const Json& js = j["jumps"];
    if (!js.is_array()) fail(path + ".jumps", "expected an array");
    for (std::size_t i = 0; i < js.size(); ++i) {
      const std::string p = path + ".jumps[" + std::to_string(i) + "]";
      s.jumps.push_back({rat(field(js[i], "x", p), p + ".x"), hnonneg(field(js[i], "remainder", p), p + ".remainder")});
    }
  }
  if (j.contains("global") && !j["global"].is_null()) {
    const Json& g = j["global"];
    const std::string p = path + ".global";
    s.global = GlobalComponent{text(field(g, "set", p), p + ".set"), hnonneg(field(g, "remainder", p), p + ".remainder")};
  }
  return s;
}

LinenessScenario parse_lineness(const Json& j) {
  const std::string path = "scenario";
  LinenessScenario s;
  s.primitives = primitives(field(j, "primitives", path), path + ".primitives");
  if (j.contains("candidates")) {
    const Json& cs = j["candidates"];
    if (!cs.is_array()) fail(path + ".candidates", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string p = path + ".candidates[" + std::to_string(i) + "]";
      s.candidates.push_back({point2(field(cs[i], "p", p), p + ".p"), point2(field(cs[i], "q", p), p + ".q")});
    }
  }
  return s;
}

ConvexityScenario parse_convexity(const Json& j) {
  const std::string path = "scenario";
  ConvexityScenario s;
  if (j.contains("points")) {
    const Json& ps = j["points"];
    if (!ps.is_array()) fail(path + ".points", "expected an array of points");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      Primitive2 k;
      k.p = k.q = point2(ps[i], path + ".points[" + std::to_string(i) + "]");
      s.primitives.push_back(k);
    }
  }
  if (j.contains("primitives")) {
    auto more = primitives(j["primitives"], path + ".primitives");
    s.primitives.insert(s.primitives.end(), more.begin(), more.end());
  }
  if (j.contains("pair_values")) {
    const Json& pv = j["pair_values"];
    if (!pv.is_array()) fail(path + ".pair_values", "expected an array");
    for (std::size_t i = 0; i < pv.size(); ++i) {
      const std::string p = path + ".pair_values[" + std::to_string(i) + "]";
      s.pair_values.push_back({text(field(pv[i], "a", p), p + ".a"), text(field(pv[i], "b", p), p + ".b"),
                               hnonneg(field(pv[i], "value", p), p + ".value")});
    }
  }
  return s;
}

Json to_json(const MeasurableSet& s) {
  Json out = Json::array();
  for (const auto& n : s.names) out.push_back(n);
  for (const auto& i : s.intervals) {
    if (i.is_point()) {
      out.push_back(Json{{"point", to_string(i.lo)}});
    } else {
      out.push_back(Json{{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}, {"lo_closed", i.lo_closed}, {"hi_closed", i.hi_closed}});
    }
  }
  return out;
}

Json to_json(const T4Certificate& c) {
  auto witnesses = [](const std::vector<Witness>& ws) {
    Json out = Json::array();
    for (const auto& w : ws) {
      out.push_back(Json{{"set", to_json(w.set)}, {"measure", to_string(w.measure.value())}, {"lower", to_string(w.lower)}});
    }
    return out;
  };
  return Json{{"value", to_string(c.value.value())},
              {"d_witnesses", witnesses(c.d_witnesses)},
              {"m_witnesses", witnesses(c.m_witnesses)}};
}

Json to_json(const LawReport& r) {
  Json laws = Json::object();
  for (const auto& law : r.laws) {
    auto it = r.checks.find(law);
    laws[law] = it == r.checks.end() ? 0 : it->second;
  }
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back(Json{{"law", v.law}, {"seed", v.seed}, {"detail", v.detail}});
  Json seeds = r.trials == 0 ? Json(nullptr) : Json::array({r.first_seed, r.first_seed + r.trials - 1});
  return Json{{"suite", r.suite},         {"trials", r.trials},   {"seeds", seeds},      {"laws", laws},
              {"violation_count", r.violation_count}, {"violations", vs}, {"ok", r.ok()}};
}

Json to_json(const Line2& l) {
  return Json{{"p", {to_string(l.p.x), to_string(l.p.y)}}, {"q", {to_string(l.q.x), to_string(l.q.y)}}};
}

}  // namespace hint
