#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "prodspec/spectral.hpp"

using prodspec::Complex;
using prodspec::ModelParams;
using prodspec::Rational;

namespace {

constexpr double kPi = std::numbers::pi;

// residual of the endpoint quadratic w((s+1)w - (as-1)) - (r+1)(w-a)(w+1)
double endpoint_quadratic(const ModelParams& p, double w) {
  const double a = p.a.to_double();
  return w * ((p.s + 1) * w - (a * p.s - 1)) - (p.r + 1) * (w - a) * (w + 1);
}

double curve_x_of_w(const ModelParams& p, double w) {
  const double a = p.a.to_double();
  return std::pow(w, p.r + 1) / ((w - a) * std::pow(w + 1.0, p.s));
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("endpoints closed forms") {
  const auto mp = prodspec::endpoints(ModelParams{1, 0, Rational(1)});
  CHECK(mp.w_star == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mp.x_star == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(!mp.x_tilde.has_value());  // degenerate for s = 0

  const auto fc2 = prodspec::endpoints(ModelParams{2, 0, Rational(1)});
  CHECK(fc2.x_star == doctest::Approx(27.0 / 4.0).epsilon(1e-14));

  const auto e211 = prodspec::endpoints(ModelParams{2, 1, Rational(1)});
  CHECK(e211.w_star == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(e211.x_star == doctest::Approx(1.5 * std::sqrt(3.0)).epsilon(1e-14));
  CHECK(e211.w_tilde == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-14));
  REQUIRE(e211.x_tilde.has_value());
  CHECK(*e211.x_tilde == doctest::Approx(-1.5 * std::sqrt(3.0)).epsilon(1e-12));

  CHECK_THROWS_AS(prodspec::endpoints(ModelParams{2, 2, Rational(1)}), std::invalid_argument);
}

TEST_CASE("endpoint invariants across parameters") {
  for (int r = 1; r <= 5; ++r) {
    for (int s = 0; s < r; ++s) {
      for (const Rational& a : {Rational(1, 2), Rational(1), Rational(2)}) {
        const ModelParams p{r, s, a};
        const auto d = prodspec::endpoints(p);
        CAPTURE(r);
        CAPTURE(s);
        CHECK(d.x_star > 0.0);
        CHECK(d.w_star > a.to_double());
        CHECK(d.w_tilde < 0.0);
        // both critical points solve the quadratic
        CHECK(std::abs(endpoint_quadratic(p, d.w_star)) <= 1e-12 * (1.0 + d.w_star * d.w_star));
        CHECK(std::abs(endpoint_quadratic(p, d.w_tilde)) <= 1e-12 * (1.0 + d.w_tilde * d.w_tilde));
        // x_star is consistent with the curve itself
        CHECK(std::abs(curve_x_of_w(p, d.w_star) - d.x_star) <= 1e-10 * d.x_star);
        // The secondary critical point stays off [0, x_star] for masses up to
        // 1; larger masses can pull it inside (see the dedicated case below).
        if (d.x_tilde.has_value() && a <= Rational(1))
          CHECK((*d.x_tilde < 0.0 || *d.x_tilde > d.x_star));
      }
    }
  }
}

TEST_CASE("secondary critical point can sit inside the support interval") {
  // At (r, s, a) = (3, 1, 2) the lower sheets collide at x_tilde inside
  // (0, x_star); the physical branch keeps positive real part there and the
  // density machinery is unaffected.
  const ModelParams p{3, 1, Rational(2)};
  const auto d = prodspec::endpoints(p);
  REQUIRE(d.x_tilde.has_value());
  CHECK(*d.x_tilde > 0.0);
  CHECK(*d.x_tilde < d.x_star);
  CHECK(std::abs(curve_x_of_w(p, d.w_tilde) - *d.x_tilde) <= 1e-10 * std::abs(*d.x_tilde));
  const prodspec::SpectralModel model(p);
  const auto sample = model.density(*d.x_tilde);
  CHECK(sample.rho > 0.0);
  CHECK(sample.w_plus.real() > 0.0);
}

TEST_CASE("polynomial roots") {
  using prodspec::poly_roots;
  const auto r1 = poly_roots({Complex(-1), Complex(0), Complex(1)});  // w^2 - 1
  REQUIRE(r1.size() == 2);
  CHECK(std::abs(std::abs(r1[0].real()) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(r1[1].real()) - 1.0) < 1e-12);
  CHECK(r1[0].real() * r1[1].real() < 0.0);

  const auto r2 = poly_roots({Complex(2), Complex(-2), Complex(1)});  // w^2 - 2w + 2
  REQUIRE(r2.size() == 2);
  for (const auto& z : r2) {
    CHECK(z.real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(z.imag()) == doctest::Approx(1.0).epsilon(1e-10));
  }

  const auto r3 = poly_roots({Complex(0), Complex(0), Complex(0), Complex(1)});  // w^3
  REQUIRE(r3.size() == 3);
  for (const auto& z : r3) CHECK(std::abs(z) == 0.0);

  // residual bound on a generic quintic
  const std::vector<Complex> c{{3, 1}, {-2, 0}, {0, 4}, {1, -1}, {5, 0}, {1, 0}};
  const auto roots = poly_roots(c);
  REQUIRE(roots.size() == 5);
  for (const auto& z : roots) {
    Complex p = 0;
    double scale = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
      p = p * z + c[k];
      scale = scale * std::abs(z) + std::abs(c[k]);
    }
    CHECK(std::abs(p) <= 1e-12 * scale);
  }

  CHECK_THROWS_AS(poly_roots({Complex(1)}), std::invalid_argument);
  CHECK_THROWS_AS(poly_roots({Complex(1), Complex(0)}), std::invalid_argument);
}

TEST_CASE("branch values") {
  const prodspec::SpectralModel mp(ModelParams{1, 0, Rational(1)});

  // w -> a at infinity with first correction a^{r+1}/((1+a)^s x)
  const auto far = mp.branch_at(Complex(1e8, 0));
  CHECK(std::abs(far.w - Complex(1.0, 0)) < 2e-8);
  CHECK(std::abs(far.w - Complex(1.0, 0)) > 1e-9);
  CHECK(far.residual < 1e-12 * 1e8);  // scale carries the factor |x|

  // explicit quadratic at x = 2 + i0+ : w^2 - x(w-1) = 0, w = 1 -+ i
  const auto cut = mp.branch_at(Complex(2.0, 1e-9));
  CHECK(cut.w.real() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(cut.w.imag()) == doctest::Approx(1.0).epsilon(1e-6));

  // Schwarz reflection
  const Complex z(0.7, 0.3);
  const auto up = mp.branch_at(z);
  const auto dn = mp.branch_at(std::conj(z));
  CHECK(std::abs(dn.w - std::conj(up.w)) < 1e-12);

  // on-cut queries must carry a side
  CHECK_THROWS_AS(mp.branch_at(Complex(2.0, 0.0)), std::invalid_argument);
}

TEST_CASE("branch stays real off the support") {
  std::mt19937_64 rng(11);
  for (const auto& pr : {ModelParams{2, 1, Rational(1)}, ModelParams{3, 1, Rational(1, 2)},
                         ModelParams{4, 2, Rational(2)}}) {
    const prodspec::SpectralModel model(pr);
    const auto sup = model.support();
    std::uniform_real_distribution<double> right(1.05, 10.0);
    for (int i = 0; i < 10; ++i) {
      const double x = right(rng) * sup.x_star;
      const auto bv = model.branch_at(Complex(x, 0));
      CAPTURE(x);
      CHECK(std::abs(bv.w.imag()) < 1e-9);
      CHECK(bv.w.real() > pr.a.to_double());
      CHECK(bv.w.real() < sup.w_star);
    }
    for (const double x : {-0.3, -2.0, -13.0}) {
      const auto bv = model.branch_at(Complex(x * sup.x_star, 0));
      CHECK(std::abs(bv.w.imag()) < 1e-9);
      CHECK(bv.w.real() > 0.0);
    }
  }
}

TEST_CASE("density against the closed-form single-factor law") {
  const prodspec::SpectralModel mp(ModelParams{1, 0, Rational(1)});
  // density sqrt((4-x)/x)/(2 pi) on (0, 4)
  for (const double x : {0.5, 1.0, 2.0, 3.0, 3.9}) {
    const auto sample = mp.density(x);
    const double expected = std::sqrt((4.0 - x) / x) / (2.0 * kPi);
    CHECK(sample.rho == doctest::Approx(expected).epsilon(1e-9));
  }
  const auto near_edge = mp.density(4.0 - 1e-6);
  CHECK(near_edge.rho < 6e-4);
  CHECK(near_edge.rho > 0.0);
  CHECK_THROWS_AS(mp.density(4.5), std::invalid_argument);
  CHECK_THROWS_AS(mp.density(0.0), std::invalid_argument);
}

TEST_CASE("density positive on interior grids") {
  for (const auto& pr : {ModelParams{2, 1, Rational(1)}, ModelParams{3, 2, Rational(2)},
                         ModelParams{4, 1, Rational(1, 2)}}) {
    const prodspec::SpectralModel model(pr);
    const auto grid = model.density_grid(100);
    REQUIRE(grid.size() == 100);
    for (const auto& sample : grid) {
      CAPTURE(sample.x);
      CHECK(sample.rho > 0.0);
    }
  }
}

TEST_CASE("quadrature reproduces exact moments") {
  const prodspec::SpectralModel m211(ModelParams{2, 1, Rational(1)});
  const auto moments = m211.quadrature_moments(2);
  CHECK(moments[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(moments[2] == doctest::Approx(0.625).epsilon(1e-8));

  const prodspec::SpectralModel mp(ModelParams{1, 0, Rational(1)});
  CHECK(mp.quadrature_moment(1) == doctest::Approx(1.0).epsilon(1e-8));

  // a fractional-mass law integrates to its mass
  const prodspec::SpectralModel half(ModelParams{2, 1, Rational(1, 2)});
  CHECK(half.quadrature_moment(0) == doctest::Approx(0.5).epsilon(1e-8));
}

}  // TEST_SUITE
