#include "hint/expr.hpp"

#include <algorithm>
#include <sstream>

#include "hint/errors.hpp"

namespace hint {

namespace {

Rational require_pow(const Rational& x, const Rational& q) {
  auto v = rational_pow(x, q);
  if (!v) {
    throw UnsupportedExpression("irrational value " + to_string(x) + "^(" + to_string(q) + ")");
  }
  return *v;
}

// Sign of x^r - t on the right of x, where x may be 0.
int pow_sign_near(const Rational& x, const Rational& r, const Rational& t) {
  if (sgn(x) == 0) {
    if (sgn(r) > 0) return sgn(t) > 0 ? -1 : (sgn(t) == 0 ? 0 : 1);
    return 1;  // x^r -> +inf as x -> 0+
  }
  return compare_pow(x, r, t);
}

// The unique root of x^r = t in (lo, hi), if one exists.
std::vector<Rational> monotone_root(const Rational& r, const Rational& t, const Rational& lo,
                                    const Rational& hi) {
  if (sgn(t) <= 0) return {};
  const int s_lo = pow_sign_near(lo, r, t);
  const int s_hi = compare_pow(hi, r, t);
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) return {};
  return {require_pow(t, Rational(1 / r))};
}

}  // namespace

Expr Expr::constant(const Rational& c) { return polynomial(Polynomial::constant(c)); }

Expr Expr::affine(const Rational& a, const Rational& b) { return polynomial(Polynomial({a, b})); }

Expr Expr::polynomial(Polynomial p) {
  Expr e;
  e.kind_ = Kind::Poly;
  e.poly_ = std::move(p);
  return e;
}

Expr Expr::power(const Rational& coef, const Rational& exponent) {
  if (sgn(exponent) <= 0) throw UnsupportedExpression("power exponent must be positive");
  if (sgn(coef) < 0) throw UnsupportedExpression("power coefficient must be nonnegative");
  if (sgn(coef) == 0) return Expr{};
  if (exponent.get_den() == 1) {
    if (!exponent.get_num().fits_uint_p() || exponent.get_num() > 64) {
      throw UnsupportedExpression("integer exponent too large");
    }
    return polynomial(Polynomial::monomial(coef, static_cast<unsigned>(exponent.get_num().get_ui())));
  }
  Expr e;
  e.kind_ = Kind::Pow;
  e.coef_ = coef;
  e.exponent_ = exponent;
  e.coef_.canonicalize();
  e.exponent_.canonicalize();
  return e;
}

std::optional<Rational> Expr::constant_value() const {
  if (kind_ == Kind::Poly && poly_.degree() <= 0) return poly_.coeff(0);
  return std::nullopt;
}

bool Expr::is_monotone_form() const { return kind_ == Kind::Pow || poly_.degree() <= 1; }

std::optional<Rational> Expr::eval(const Rational& x) const {
  if (kind_ == Kind::Poly) return poly_(x);
  auto v = rational_pow(x, exponent_);
  if (!v) return std::nullopt;
  return Rational(coef_ * *v);
}

int Expr::compare_at(const Rational& x, const Rational& v) const {
  if (kind_ == Kind::Poly) return sgn(poly_(x) - v);
  return compare_pow(x, exponent_, Rational(v / coef_));
}

Rational Expr::extreme(const Rational& lo, const Rational& hi, bool want_max) const {
  if (kind_ == Kind::Pow) {
    // c > 0 and q > 0: increasing on [0, inf).
    return coef_ * require_pow(want_max ? hi : lo, exponent_);
  }
  std::vector<Rational> candidates{lo, hi};
  if (poly_.degree() >= 2 && lo < hi) {
    for (auto& r : exact_roots_in(poly_.derivative(), lo, hi)) candidates.push_back(r);
  }
  Rational best = poly_(candidates.front());
  for (const auto& c : candidates) {
    const Rational v = poly_(c);
    if (want_max ? v > best : v < best) best = v;
  }
  return best;
}

bool Expr::nonneg_on(const Rational& lo, const Rational& hi) const {
  if (kind_ == Kind::Pow) return sgn(lo) >= 0;
  if (poly_.degree() <= 0) return sgn(poly_.coeff(0)) >= 0;
  if (sgn(poly_(lo)) < 0 || sgn(poly_(hi)) < 0) return false;
  if (!(lo < hi)) return true;
  // The sign is constant between consecutive roots; all roots in (lo, hi)
  // must be rational for that to be checkable exactly.
  std::vector<Rational> cuts{lo};
  for (auto& r : exact_roots_in(poly_, lo, hi)) cuts.push_back(r);
  cuts.push_back(hi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (sgn(poly_((cuts[i] + cuts[i + 1]) / 2)) < 0) return false;
  }
  return true;
}

Rational Expr::integrate(const Rational& lo, const Rational& hi, const Polynomial& density) const {
  if (kind_ == Kind::Poly) return (poly_ * density).integrate(lo, hi);
  Rational total = 0;
  for (std::size_t k = 0; k < density.coeffs().size(); ++k) {
    const Rational& a = density.coeffs()[k];
    if (sgn(a) == 0) continue;
    const Rational e = exponent_ + static_cast<long>(k) + 1;
    total += a * coef_ * (require_pow(hi, e) - require_pow(lo, e)) / e;
  }
  return total;
}

std::vector<Rational> Expr::solve(const Rational& v, const Rational& lo, const Rational& hi) const {
  if (kind_ == Kind::Poly) {
    const Polynomial diff = poly_ - Polynomial::constant(v);
    if (diff.is_zero()) throw std::logic_error("Expr::solve on an expression identically equal to v");
    return exact_roots_in(diff, lo, hi);
  }
  return monotone_root(exponent_, Rational(v / coef_), lo, hi);
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.kind_ == Expr::Kind::Poly && b.kind_ == Expr::Kind::Poly) return Expr::polynomial(a.poly_ + b.poly_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.kind_ == Expr::Kind::Pow && b.kind_ == Expr::Kind::Pow && a.exponent_ == b.exponent_) {
    return Expr::power(a.coef_ + b.coef_, a.exponent_);
  }
  throw UnsupportedExpression("sum " + to_string(a) + " + " + to_string(b) + " leaves the grammar");
}

int compare_exprs_at(const Expr& a, const Expr& b, const Rational& x) {
  using K = Expr::Kind;
  if (a.kind() == K::Poly && b.kind() == K::Poly) return sgn(a.poly()(x) - b.poly()(x));
  if (a.kind() == K::Pow && b.kind() == K::Poly) return a.compare_at(x, b.poly()(x));
  if (a.kind() == K::Poly && b.kind() == K::Pow) return -b.compare_at(x, a.poly()(x));
  if (sgn(x) == 0) return 0;
  // c1 x^q1 vs c2 x^q2  <=>  x^(q1 - q2) vs c2 / c1
  return compare_pow(x, Rational(a.exponent() - b.exponent()), Rational(b.coef() / a.coef()));
}

std::optional<std::vector<Rational>> crossings(const Expr& a, const Expr& b, const Rational& lo,
                                               const Rational& hi) {
  using K = Expr::Kind;
  if (a == b) return std::nullopt;
  if (a.kind() == K::Poly && b.kind() == K::Poly) {
    const Polynomial diff = a.poly() - b.poly();
    return exact_roots_in(diff, lo, hi);
  }
  if (a.kind() == K::Pow && b.kind() == K::Pow) {
    if (a.exponent() == b.exponent()) return std::vector<Rational>{};
    return monotone_root(Rational(a.exponent() - b.exponent()), Rational(b.coef() / a.coef()), lo, hi);
  }
  const Expr& pw = a.kind() == K::Pow ? a : b;
  const Expr& pl = a.kind() == K::Pow ? b : a;
  if (auto k = pl.constant_value()) return pw.solve(*k, lo, hi);
  // A power against a nonconstant polynomial generally crosses at algebraic
  // points of unbounded degree.
  throw UnsupportedExpression("cannot locate crossings of " + to_string(a) + " and " + to_string(b));
}

std::string to_string(const Expr& e) {
  std::ostringstream os;
  if (e.kind() == Expr::Kind::Pow) {
    os << to_string(e.coef()) << "*x^(" << to_string(e.exponent()) << ")";
    return os.str();
  }
  if (e.poly().is_zero()) return "0";
  bool first = true;
  for (std::size_t i = 0; i < e.poly().coeffs().size(); ++i) {
    const Rational& c = e.poly().coeffs()[i];
    if (sgn(c) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
  }
  return os.str();
}

}  // namespace hint
