#include "hint/hvalue.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hint/errors.hpp"

namespace hint {

Dim::Dim(Rational v) : value_(std::move(v)) {
  value_.canonicalize();
  if (sgn(value_) < 0) throw std::domain_error("negative dimension " + to_string(value_));
}

std::strong_ordering operator<=>(const HValue& a, const HValue& b) {
  if (auto c = a.d <=> b.d; c != 0) return c;
  return a.m <=> b.m;
}

std::strong_ordering compare(const HValue& a, const HValue& b) { return a <=> b; }

HNonNeg::HNonNeg(HValue v) : value_(std::move(v)) {
  if (!value_.is_nonneg()) throw std::domain_error("negative measure coordinate in " + to_string(value_));
}

HValue add(const HValue& a, const HValue& b) {
  if (a.d < b.d) return b;
  if (b.d < a.d) return a;
  auto m = checked_add(a.m, b.m);
  if (!m) throw UndefinedSum("undefined sum " + to_string(a) + " + " + to_string(b));
  return {a.d, *m};
}

HValue scalar_mul(const Rational& c, const HValue& a) {
  if (sgn(c) == 0) return HValue::zero();
  return {a.d, ExtRational(c) * a.m};
}

HValue mul(const HValue& a, const HValue& b) {
  if (a.is_zero() || b.is_zero()) return HValue::zero();
  return {a.d + b.d, a.m * b.m};
}

HValue sum_finite(std::span<const HValue> terms) {
  HValue acc;
  for (const auto& t : terms) acc = add(acc, t);
  return acc;
}

HNonNeg sum_described(const SeqDescriptor& seq) {
  Dim top = seq.tail.d();
  for (const auto& t : seq.prefix) top = std::max(top, t.d());

  ExtRational m(0);
  for (const auto& t : seq.prefix) {
    if (t.d() == top) m = *checked_add(m, t.m());
  }
  if (seq.tail.d() == top && seq.tail.m().sign() > 0) m = ExtRational::pos_inf();
  return HNonNeg(top, m);
}

HValue sup_finite(std::span<const HValue> values) {
  if (values.empty()) throw EmptyList("sup of an empty list");
  return *std::max_element(values.begin(), values.end());
}

std::string to_string(const HValue& v) {
  return "(" + to_string(v.d.value()) + ", " + to_string(v.m) + ")";
}

HValue parse_hvalue(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "' in hvalue '" + std::string(text) + "'", pos);
    }
    ++pos;
  };
  auto token = [&](char terminator) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != terminator &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return std::pair{start, text.substr(start, pos - start)};
  };
  auto parse_at = [&](std::size_t start, auto&& fn, std::string_view tok) {
    try {
      return fn(tok);
    } catch (const ParseError& e) {
      throw ParseError("bad component '" + std::string(tok) + "' in hvalue '" + std::string(text) + "'",
                       start + (e.position() == std::string::npos ? 0 : e.position()));
    }
  };

  expect('(');
  const auto [dstart, dtok] = token(',');
  const Rational d = parse_at(dstart, parse_rational, dtok);
  if (sgn(d) < 0) throw ParseError("negative dimension in '" + std::string(text) + "'", dstart);
  expect(',');
  const auto [mstart, mtok] = token(')');
  const ExtRational m = parse_at(mstart, parse_ext_rational, mtok);
  expect(')');
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after hvalue", pos);
  return {Dim(d), m};
}

std::ostream& operator<<(std::ostream& os, const HValue& v) { return os << to_string(v); }

}  // namespace hint
