#include "prodspec/series.hpp"

#include <cstddef>

namespace prodspec {

namespace {

mpz_class parse_integer(const std::string& s) {
  return mpz_class(s, 10);
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_integer(text), mpz_class(1));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("Rational: malformed literal '" + text + "'");
  mpz_class num = parse_integer(digits);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  return Rational(num, den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && is_zero()) throw std::domain_error("Rational: negative power of zero");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), k);
  return invert ? Rational(den, num) : Rational(num, den);
}

Rational binomial_general(const Rational& top, unsigned long k) {
  Rational acc = 1;
  for (unsigned long i = 0; i < k; ++i) acc *= top - Rational(static_cast<long>(i));
  return acc / factorial(k);
}

Rational pochhammer(const Rational& x, unsigned long k) {
  Rational acc = 1;
  for (unsigned long i = 0; i < k; ++i) acc *= x + Rational(static_cast<long>(i));
  return acc;
}

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f, mpz_class(1));
}

Rational binomial_uint(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b, mpz_class(1));
}

Series Series::constant(const Rational& c, std::size_t order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::identity(std::size_t order) {
  Series s(order);
  if (order < 2) throw std::invalid_argument("Series: identity needs order >= 2");
  s.c_[1] = 1;
  return s;
}

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order()) throw std::invalid_argument("Series: order mismatch");
}

}  // namespace

Series operator+(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

Series operator-(const Series& a) {
  Series r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) r[i] = -a[i];
  return r;
}

Series operator*(const Rational& c, const Series& a) {
  Series r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) r[i] = c * a[i];
  return r;
}

Series series_mul(const Series& a, const Series& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  Series r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series series_compose(const Series& outer, const Series& inner) {
  require_same_order(outer, inner);
  if (!inner[0].is_zero())
    throw std::invalid_argument("series_compose: inner constant term must vanish");
  const std::size_t n = outer.order();
  // Horner evaluation in the truncated algebra.
  Series acc = Series::constant(outer[n - 1], n);
  for (std::size_t k = n - 1; k-- > 0;) {
    acc = series_mul(acc, inner);
    acc[0] += outer[k];
  }
  return acc;
}

Series series_reverse(const Series& f) {
  const std::size_t n = f.order();
  if (!f[0].is_zero())
    throw std::invalid_argument("series_reverse: constant term must vanish");
  if (n < 2 || f[1].is_zero())
    throw std::invalid_argument("series_reverse: linear coefficient must be nonzero");
  // Lagrange inversion: [z^m] g = (1/m) [w^{m-1}] (w / f(w))^m.
  Series base(n);  // w / f(w), a unit series
  for (std::size_t i = 0; i + 1 < n; ++i) base[i] = f[i + 1];
  base = series_recip(base);
  Series g(n);
  Series pw = Series::constant(Rational(1), n);
  for (std::size_t m = 1; m < n; ++m) {
    pw = series_mul(pw, base);
    g[m] = pw[m - 1] / Rational(static_cast<long>(m));
  }
  return g;
}

Series series_recip(const Series& f) {
  if (f[0].is_zero())
    throw std::invalid_argument("series_recip: constant term must be nonzero");
  const std::size_t n = f.order();
  Series r(n);
  r[0] = Rational(1) / f[0];
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= m; ++k) acc += f[k] * r[m - k];
    r[m] = -acc / f[0];
  }
  return r;
}

Series series_pow(const Series& f, long e) {
  if (e < 0) return series_recip(series_pow(f, -e));
  Series acc = Series::constant(Rational(1), f.order());
  Series base = f;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) acc = series_mul(acc, base);
    k >>= 1;
    if (k > 0) base = series_mul(base, base);
  }
  return acc;
}

Series series_shift_up(const Series& f) {
  Series r(f.order());
  for (std::size_t i = f.order() - 1; i >= 1; --i) r[i] = f[i - 1];
  return r;
}

Series series_shift_down(const Series& f) {
  if (!f[0].is_zero())
    throw std::invalid_argument("series_shift_down: constant term must vanish");
  Series r(f.order());
  for (std::size_t i = 0; i + 1 < f.order(); ++i) r[i] = f[i + 1];
  return r;
}

}  // namespace prodspec
