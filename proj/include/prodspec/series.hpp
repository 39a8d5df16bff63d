#pragma once

#include <cstddef>
#include <vector>

#include "prodspec/rational.hpp"

namespace prodspec {

// Truncated formal power series with exact rational coefficients.
// A series of order N stores coefficients of z^0 .. z^{N-1}; every operation
// truncates to the common order and never reads beyond it.
class Series {
 public:
  explicit Series(std::size_t order) : c_(order) {
    if (order == 0) throw std::invalid_argument("Series: order must be >= 1");
  }
  static Series constant(const Rational& c, std::size_t order);
  static Series identity(std::size_t order);  // the series z

  std::size_t order() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Rational& c, const Series& a);

// Cauchy product truncated to the common order.
Series series_mul(const Series& a, const Series& b);

// outer(inner(z)) truncated; inner must have zero constant term.
Series series_compose(const Series& outer, const Series& inner);

// Compositional inverse g of f, f(g(z)) = z up to truncation.
// Requires f(0) = 0 and f'(0) != 0 (a vanishing linear coefficient means the
// inversion, and hence the S-transform built on it, is undefined).
Series series_reverse(const Series& f);

// Multiplicative inverse 1/f; requires f(0) != 0.
Series series_recip(const Series& f);

// f^e for integer e; negative exponents go through series_recip.
Series series_pow(const Series& f, long e);

// Multiply by z (drops the top coefficient).
Series series_shift_up(const Series& f);

// Divide by z; requires f(0) = 0. The top coefficient becomes zero.
Series series_shift_down(const Series& f);

}  // namespace prodspec
