#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace prodspec {

// Exact rational scalar. Wraps GMP's mpq_class so that every value is kept
// reduced with a positive denominator; all arithmetic is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(int n) : q_(static_cast<long>(n)) {}   // NOLINT
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "p", "p/q", or a terminating decimal such as "-1.25".
  static Rational from_string(const std::string& text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  double to_double() const { return q_.get_d(); }
  // "p" when the denominator is 1, else "p/q".
  std::string str() const;

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }

  Rational pow(long e) const;  // integer exponent; negative needs a nonzero base

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (sgn(b.q_) == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

 private:
  mpq_class q_;
};

// Generalized binomial coefficient C(top, k) = top (top-1) ... (top-k+1) / k!
// for rational top and nonnegative integer k.
Rational binomial_general(const Rational& top, unsigned long k);

// Rising factorial (x)_k = x (x+1) ... (x+k-1); empty product for k = 0.
Rational pochhammer(const Rational& x, unsigned long k);

Rational factorial(unsigned long n);

// C(n, k) for nonnegative integers, exact.
Rational binomial_uint(unsigned long n, unsigned long k);

}  // namespace prodspec
