#include "hint/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "hint/errors.hpp"

namespace hint {

namespace {

// offset of the first non-digit, 0 for an empty string
std::size_t bad_digit(std::string_view s) {
  const auto it = std::find_if(s.begin(), s.end(), [](char c) { return !std::isdigit(static_cast<unsigned char>(c)); });
  return it == s.end() ? 0 : static_cast<std::size_t>(it - s.begin());
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

unsigned long exponent_as_ulong(const mpz_class& z) {
  if (!z.fits_ulong_p() || z > 4096) {
    throw UnsupportedExpression("exponent too large for exact evaluation: " + z.get_str());
  }
  return z.get_ui();
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rational pow_q(const Rational& base, unsigned long e) {
  Rational out(pow_z(base.get_num(), e), pow_z(base.get_den(), e));
  out.canonicalize();
  return out;
}

// Exact k-th root of a nonnegative integer.
std::optional<mpz_class> exact_root(const mpz_class& z, unsigned long k) {
  mpz_class out;
  if (mpz_root(out.get_mpz_t(), z.get_mpz_t(), k) == 0) return std::nullopt;
  return out;
}

}  // namespace

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("expected a rational, found nothing", 0);
  std::string_view body = text;
  std::size_t offset = 0;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
    offset = 1;
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!all_digits(num)) {
    throw ParseError("expected an integer numerator in '" + std::string(text) + "'", offset + bad_digit(num));
  }
  Rational out;
  if (slash == std::string_view::npos) {
    out = Rational(mpz_class(std::string(num)));
  } else {
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(den)) {
      throw ParseError("expected an integer denominator in '" + std::string(text) + "'",
                       offset + slash + 1 + bad_digit(den));
    }
    mpz_class d(std::string{den});
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", offset + slash + 1);
    out = Rational(mpz_class(std::string(num)), d);
    out.canonicalize();
  }
  if (text.front() == '-') out = -out;
  return out;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Rational> rational_pow(const Rational& r, const Rational& exponent) {
  if (sgn(r) < 0) throw std::domain_error("rational_pow: negative base");
  if (sgn(exponent) == 0) return Rational(1);
  if (sgn(r) == 0) {
    if (sgn(exponent) < 0) throw std::domain_error("rational_pow: zero to a negative power");
    return Rational(0);
  }
  Rational base = r;
  if (sgn(exponent) < 0) base = 1 / r;
  const mpz_class a = abs(exponent.get_num());
  const unsigned long b = exponent_as_ulong(exponent.get_den());
  const auto num = exact_root(base.get_num(), b);
  const auto den = exact_root(base.get_den(), b);
  if (!num || !den) return std::nullopt;
  return pow_q(Rational(*num, *den), exponent_as_ulong(a));
}

int compare_pow(const Rational& x, const Rational& exponent, const Rational& v) {
  if (sgn(x) < 0) throw std::domain_error("compare_pow: negative base");
  if (sgn(exponent) == 0) return cmp(Rational(1), v) > 0 ? 1 : (cmp(Rational(1), v) < 0 ? -1 : 0);
  if (sgn(x) == 0) {
    if (sgn(exponent) < 0) throw std::domain_error("compare_pow: zero to a negative power");
    return -sgn(v);
  }
  if (sgn(v) <= 0) return 1;  // x^e > 0 >= v
  Rational base = sgn(exponent) < 0 ? Rational(1 / x) : x;
  const unsigned long a = exponent_as_ulong(abs(exponent.get_num()));
  const unsigned long b = exponent_as_ulong(exponent.get_den());
  // Both sides are positive, so raising to the b-th power preserves order.
  const int c = cmp(pow_q(base, a), pow_q(v, b));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int ExtRational::sign() const {
  switch (kind_) {
    case Kind::NegInf: return -1;
    case Kind::PosInf: return 1;
    case Kind::Finite: break;
  }
  return sgn(value_);
}

const Rational& ExtRational::value() const {
  if (!is_finite()) throw std::logic_error("ExtRational::value() on an infinity");
  return value_;
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: break;
  }
  return ExtRational(Rational(-value_));
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  return compare(a.value_, b.value_);
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::optional<ExtRational> checked_add(const ExtRational& a, const ExtRational& b) {
  if (a.is_finite() && b.is_finite()) return ExtRational(Rational(a.value() + b.value()));
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    return std::nullopt;
  }
  return a.is_finite() ? b : a;
}

ExtRational operator*(const ExtRational& a, const ExtRational& b) {
  if (a.is_zero() || b.is_zero()) return ExtRational(0);
  if (a.is_finite() && b.is_finite()) return ExtRational(Rational(a.value() * b.value()));
  return a.sign() * b.sign() > 0 ? ExtRational::pos_inf() : ExtRational::neg_inf();
}

std::string to_string(const ExtRational& x) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  return to_string(x.value());
}

ExtRational parse_ext_rational(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtRational::pos_inf();
  if (text == "-inf") return ExtRational::neg_inf();
  return ExtRational(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const ExtRational& x) { return os << to_string(x); }

}  // namespace hint
