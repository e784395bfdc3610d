#include "hint/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "hint/errors.hpp"

namespace hint {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, unsigned n) {
  std::vector<Rational> v(n + 1, Rational(0));
  v[n] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return Polynomial(std::move(out));
}

Rational Polynomial::integrate(const Rational& lo, const Rational& hi) const {
  const Polynomial a = antiderivative();
  return a(hi) - a(lo);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

void Polynomial::divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = num.coeffs_;
  const int dd = den.degree();
  std::vector<Rational> q(std::max(0, num.degree() - dd + 1), Rational(0));
  for (int k = num.degree(); k >= dd; --k) {
    const Rational c = r[k] / den.leading();
    q[k - dd] = c;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= c * den.coeffs_[j];
  }
  quot = Polynomial(std::move(q));
  rem = Polynomial(std::move(r));
}

namespace {

constexpr unsigned long kTrialDivisionLimit = 1'000'000;

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long p = 2; n > 1; ++p) {
    if (p > kTrialDivisionLimit) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
        throw UnsupportedExpression("polynomial coefficient too large to factor: " + n.get_str());
      }
      factors.emplace_back(n, 1);
      break;
    }
    if (mpz_class(p) * p > n) {
      factors.emplace_back(n, 1);
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(mpz_class(p), e);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t n0 = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n0; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  // Remove the factor x^k.
  std::size_t low = 0;
  while (sgn(p.coeffs()[low]) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<Rational> rest(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
  if (rest.size() > 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : rest) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    const Polynomial q(rest);
    const mpz_class a0 = mpz_class(rest.front() * lcm_den);
    const mpz_class an = mpz_class(rest.back() * lcm_den);
    const auto ps = positive_divisors(a0);
    const auto qs = positive_divisors(an);
    for (const auto& num : ps) {
      for (const auto& den : qs) {
        for (int s : {1, -1}) {
          Rational cand(num * s, den);
          cand.canonicalize();
          if (sgn(q(cand)) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Polynomial strip_rational_roots(const Polynomial& p) {
  Polynomial cur = p;
  for (const auto& r : rational_roots(p)) {
    const Polynomial factor({Rational(-r), Rational(1)});
    for (;;) {
      Polynomial q, rem;
      Polynomial::divmod(cur, factor, q, rem);
      if (!rem.is_zero()) break;
      cur = q;
    }
  }
  return cur;
}

int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() <= 0) return 0;
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial q, rem;
    Polynomial::divmod(chain[chain.size() - 2], chain.back(), q, rem);
    if (rem.is_zero()) break;
    chain.push_back(Rational(-1) * rem);
  }
  auto variations = [&](const Rational& x) {
    int count = 0, last = 0;
    for (const auto& poly : chain) {
      const int s = sgn(poly(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(lo) - variations(hi);
}

std::vector<Rational> exact_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  for (const auto& r : rational_roots(p)) {
    if (r > lo && r < hi) out.push_back(r);
  }
  const Polynomial rest = strip_rational_roots(p);
  if (rest.degree() > 0 && sturm_count(rest, lo, hi) > 0) {
    throw UnsupportedExpression("polynomial has an irrational root in (" + to_string(lo) + ", " +
                                to_string(hi) + ")");
  }
  return out;
}

}  // namespace hint
