#include "prodspec/moments.hpp"

#include <stdexcept>

namespace prodspec {

void ModelParams::validate() const {
  if (r < 1) throw std::invalid_argument("ModelParams: r must be >= 1");
  if (s < 0 || s > r) throw std::invalid_argument("ModelParams: s must satisfy 0 <= s <= r");
  if (a.sign() <= 0) throw std::invalid_argument("ModelParams: a must be positive");
}

void ModelParams::validate_spectral() const {
  validate();
  if (s >= r)
    throw std::invalid_argument("ModelParams: support and density need s < r");
}

VaryingJacobiIndex varying_jacobi_index(const ModelParams& p, int n) {
  const long r = p.r, s = p.s, m = n;
  return VaryingJacobiIndex{n, r * m + r + 1, -(r + 1 - s) * m - (r + 2 - s)};
}

Rational jacobi_eval(int n, const Rational& alpha, const Rational& beta, const Rational& x) {
  if (n < 0) throw std::invalid_argument("jacobi_eval: n must be >= 0");
  const Rational half_xm1 = (x - Rational(1)) / Rational(2);
  const Rational abn1 = alpha + beta + Rational(n + 1);
  Rational sum = 0;
  Rational pw = 1;  // ((x-1)/2)^k
  for (int k = 0; k <= n; ++k) {
    Rational term = binomial_uint(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    term *= pochhammer(abn1, static_cast<unsigned long>(k));
    term *= pochhammer(alpha + Rational(k + 1), static_cast<unsigned long>(n - k));
    term *= pw;
    sum += term;
    pw *= half_xm1;
  }
  return sum / factorial(static_cast<unsigned long>(n));
}

Rational moment_jacobi(const ModelParams& p, int n) {
  p.validate();
  if (n < 0) throw std::invalid_argument("moment_jacobi: n must be >= 0");
  if (n == 0) return p.a;
  const auto idx = varying_jacobi_index(p, n - 1);
  const Rational arg = (Rational(1) - p.a) / (Rational(1) + p.a);
  const Rational scale = (p.a.pow(p.r) / (Rational(1) + p.a).pow(p.s)).pow(n);
  const Rational pol = jacobi_eval(n - 1, Rational(idx.alpha), Rational(idx.beta), arg);
  return p.a / Rational(n) * scale * pol;
}

Rational moment_derivative(const ModelParams& p, int n) {
  p.validate();
  if (n < 1) throw std::invalid_argument("moment_derivative: n must be >= 1");
  const long nr = static_cast<long>(n) * p.r;
  const long ns = static_cast<long>(n) * p.s;
  const Rational one_plus_a = Rational(1) + p.a;
  // (1/n!) sum_k C(n-1,k) (nr+k+2)_{n-1-k} a^{nr+k+1} (-ns-k+1)_k (1+a)^{-ns-k}
  Rational a_pow = p.a.pow(nr + 1);
  Rational b_pow = one_plus_a.pow(-ns);
  Rational sum = 0;
  for (int k = 0; k <= n - 1; ++k) {
    Rational term = binomial_uint(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k));
    term *= pochhammer(Rational(nr + k + 2), static_cast<unsigned long>(n - 1 - k));
    term *= a_pow;
    term *= pochhammer(Rational(-ns - k + 1), static_cast<unsigned long>(k));
    term *= b_pow;
    sum += term;
    a_pow *= p.a;
    b_pow /= one_plus_a;
  }
  return sum / factorial(static_cast<unsigned long>(n));
}

MomentSequence moment_series(const ModelParams& p, int n_max) {
  p.validate();
  if (n_max < 1) throw std::invalid_argument("moment_series: n_max must be >= 1");
  const std::size_t order = static_cast<std::size_t>(n_max) + 1;
  Series w = Series::constant(p.a, order);
  const Series one = Series::constant(Rational(1), order);
  for (int iter = 0; iter <= n_max; ++iter) {
    Series frac = series_pow(w, p.r + 1);
    if (p.s > 0) frac = series_mul(frac, series_pow(one + w, -static_cast<long>(p.s)));
    w = series_shift_up(frac);
    w[0] += p.a;
  }
  MomentSequence seq;
  seq.label = "series";
  seq.values.reserve(order);
  for (std::size_t i = 0; i < order; ++i) seq.values.push_back(w[i]);
  return seq;
}

Rational fuss_catalan(int r, int n) {
  if (r < 1) throw std::invalid_argument("fuss_catalan: r must be >= 1");
  if (n < 0) throw std::invalid_argument("fuss_catalan: n must be >= 0");
  const unsigned long rn = static_cast<unsigned long>(r) * static_cast<unsigned long>(n);
  return binomial_uint(rn + static_cast<unsigned long>(n), static_cast<unsigned long>(n)) /
         Rational(static_cast<long>(rn) + 1);
}

Rational raney(const Rational& alpha, const Rational& beta, int n) {
  if (n < 0) throw std::invalid_argument("raney: n must be >= 0");
  const Rational top = Rational(n) * alpha + beta;
  if (top.is_zero()) throw std::invalid_argument("raney: n alpha + beta must be nonzero");
  return beta / top * binomial_general(top, static_cast<unsigned long>(n));
}

MomentSequence jacobi_moment_sequence(const ModelParams& p, int n_max) {
  MomentSequence seq;
  seq.label = "jacobi";
  seq.values.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) seq.values.push_back(moment_jacobi(p, n));
  return seq;
}

MomentSequence fuss_catalan_sequence(int r, int n_max) {
  MomentSequence seq;
  seq.label = "fc:" + std::to_string(r);
  for (int n = 0; n <= n_max; ++n) seq.values.push_back(fuss_catalan(r, n));
  return seq;
}

MomentSequence raney_sequence(const Rational& alpha, const Rational& beta, int n_max) {
  MomentSequence seq;
  seq.label = "raney:" + alpha.str() + ":" + beta.str();
  for (int n = 0; n <= n_max; ++n) seq.values.push_back(raney(alpha, beta, n));
  return seq;
}

}  // namespace prodspec
