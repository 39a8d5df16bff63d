#include "prodspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace prodspec {

namespace {

constexpr double kPi = std::numbers::pi;

double ipow(double base, int e) {
  if (e < 0) return 1.0 / ipow(base, -e);
  double acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

double binom_double(int n, int k) {
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

}  // namespace

SupportData endpoints(const ModelParams& p) {
  p.validate_spectral();
  const double a = p.a.to_double();
  const double r = p.r;
  const double s = p.s;
  const double b = a * (r + 1 - s) - r;
  const double sq = std::sqrt(b * b + 4 * a * (r + 1) * (r - s));
  SupportData d;
  d.w_star = (b + sq) / (2 * (r - s));
  d.w_tilde = (b - sq) / (2 * (r - s));
  auto x_of_w = [&](double w) {
    return (r + 1) * ipow(w, p.r) / (ipow(w + 1.0, p.s - 1) * ((s + 1) * w - a * s + 1));
  };
  d.x_star = x_of_w(d.w_star);
  // For s = 0 the second critical point sits at w = -1 where the expression
  // for x degenerates. For s >= 1 it is regular (w_tilde is never 0 or -1),
  // but at a = 1/s with even symmetry both critical points can map to the
  // same abscissa; x_tilde is only reported as a location distinct from
  // x_star.
  if (p.s > 0) {
    const double xt = x_of_w(d.w_tilde);
    if (std::isfinite(xt) && std::abs(xt - d.x_star) > 1e-12 * std::max(1.0, d.x_star))
      d.x_tilde = xt;
  }
  return d;
}

std::vector<Complex> poly_roots(const std::vector<Complex>& coeff, int max_iter) {
  std::size_t count = coeff.size();
  while (count > 0 && std::abs(coeff[count - 1]) == 0.0) --count;
  if (count < 2)
    throw std::invalid_argument("poly_roots: need degree >= 1 with nonzero leading coefficient");

  // exact zeros at the origin come off first
  std::size_t zeros = 0;
  while (zeros + 1 < count && std::abs(coeff[zeros]) == 0.0) ++zeros;
  const std::vector<Complex> c(coeff.begin() + zeros, coeff.begin() + count);
  const std::size_t n = c.size() - 1;

  std::vector<Complex> z(n);
  double r0 = std::pow(std::abs(c[0] / c[n]), 1.0 / static_cast<double>(n));
  if (!(r0 > 0.0) || !std::isfinite(r0)) r0 = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double th = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n) + 0.4;
    z[i] = r0 * Complex(std::cos(th), std::sin(th));
  }

  auto eval = [&](Complex w, Complex& dp, double& scale) {
    Complex p = c[n];
    dp = 0.0;
    scale = std::abs(c[n]);
    const double aw = std::abs(w);
    for (std::size_t k = n; k-- > 0;) {
      dp = dp * w + p;
      p = p * w + c[k];
      scale = scale * aw + std::abs(c[k]);
    }
    return p;
  };

  const double tol = 1e-13;
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      Complex dp;
      double scale;
      const Complex pv = eval(z[i], dp, scale);
      if (std::abs(pv) <= tol * scale + std::numeric_limits<double>::min()) {
        done[i] = true;
        continue;
      }
      all_done = false;
      Complex newton = (std::abs(dp) > 0.0) ? pv / dp : Complex(std::abs(z[i]) + 1.0, 0.0);
      Complex rsum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Complex d = z[i] - z[j];
        if (std::abs(d) > 0.0) rsum += 1.0 / d;
      }
      const Complex denom = 1.0 - newton * rsum;
      const Complex step = (std::abs(denom) > 1e-290) ? newton / denom : newton;
      z[i] -= step;
    }
    if (all_done) break;
  }

  for (std::size_t i = 0; i < n; ++i) {
    Complex dp;
    double scale;
    const Complex pv = eval(z[i], dp, scale);
    if (std::abs(pv) > 1e-12 * scale)
      throw std::runtime_error("poly_roots: iteration did not converge");
  }

  std::vector<Complex> roots(zeros, Complex(0.0, 0.0));
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

SpectralModel::SpectralModel(const ModelParams& p) : params_(p) {
  p.validate_spectral();
  support_ = endpoints(p);
  a_ = p.a.to_double();
  refine_long_double_ = (p.r >= 6);

  // q(w) = (w - a)(w + 1)^s, ascending coefficients
  q_.assign(static_cast<std::size_t>(p.s) + 2, 0.0);
  for (int j = 0; j <= p.s; ++j) {
    const double bj = binom_double(p.s, j);
    q_[static_cast<std::size_t>(j) + 1] += bj;
    q_[static_cast<std::size_t>(j)] -= a_ * bj;
  }

  // Anchor the branch at x0 = 2 x_star: the unique real root in (a, w_star).
  const Complex x0(2.0 * support_.x_star, 0.0);
  const auto roots = roots_at(x0);
  const Complex* pick = nullptr;
  for (const auto& root : roots) {
    if (std::abs(root.imag()) > 1e-8 * (1.0 + std::abs(root.real()))) continue;
    const double wr = root.real();
    if (wr > a_ && wr < support_.w_star) {
      if (pick != nullptr)
        throw std::runtime_error("spectral: anchor root is not unique");
      pick = &root;
    }
  }
  if (pick == nullptr) throw std::runtime_error("spectral: anchor root not found");
  anchor_ = Tracked{x0, Complex(pick->real(), 0.0)};

  // Fix the orientation of the boundary value once, at an interior point,
  // by requiring a positive density there.
  const double x_ref = 0.5 * support_.x_star;
  Tracked state;
  const Complex w_ref = boundary_w(x_ref, nullptr, &state);
  if (-std::imag(w_ref) / (kPi * x_ref) < 0.0) sign_ = -1.0;
}

Complex SpectralModel::poly_eval(Complex w, Complex x) const {
  Complex q = 0.0;
  for (std::size_t k = q_.size(); k-- > 0;) q = q * w + q_[k];
  Complex wp = 1.0;
  for (int i = 0; i <= params_.r; ++i) wp *= w;
  return wp - x * q;
}

Complex SpectralModel::poly_dw(Complex w, Complex x) const {
  Complex dq = 0.0;
  for (std::size_t k = q_.size(); k-- > 1;) dq = dq * w + static_cast<double>(k) * q_[k];
  Complex wp = 1.0;
  for (int i = 0; i < params_.r; ++i) wp *= w;
  return static_cast<double>(params_.r + 1) * wp - x * dq;
}

Complex SpectralModel::refine(Complex w, Complex x) const {
  using LComplex = std::complex<long double>;
  LComplex lw(w.real(), w.imag());
  const LComplex lx(x.real(), x.imag());
  for (int iter = 0; iter < 3; ++iter) {
    LComplex q = 0.0L;
    for (std::size_t k = q_.size(); k-- > 0;) q = q * lw + static_cast<long double>(q_[k]);
    LComplex dq = 0.0L;
    for (std::size_t k = q_.size(); k-- > 1;)
      dq = dq * lw + static_cast<long double>(k) * static_cast<long double>(q_[k]);
    LComplex wp = 1.0L, wpd = 1.0L;
    for (int i = 0; i < params_.r; ++i) wpd *= lw;
    wp = wpd * lw;
    const LComplex pv = wp - lx * q;
    const LComplex dv = static_cast<long double>(params_.r + 1) * wpd - lx * dq;
    if (std::abs(dv) == 0.0L) break;
    lw -= pv / dv;
  }
  return Complex(static_cast<double>(lw.real()), static_cast<double>(lw.imag()));
}

std::vector<Complex> SpectralModel::roots_at(Complex x) const {
  std::vector<Complex> c(static_cast<std::size_t>(params_.r) + 2, Complex(0.0, 0.0));
  for (std::size_t k = 0; k < q_.size(); ++k) c[k] = -x * q_[k];
  c[static_cast<std::size_t>(params_.r) + 1] += 1.0;
  return poly_roots(c);
}

namespace {

// Scale of the polynomial value used for residual tests.
double poly_scale(const std::vector<double>& q, int r, Complex w, Complex x) {
  const double aw = std::abs(w);
  double qs = 0.0;
  for (std::size_t k = q.size(); k-- > 0;) qs = qs * aw + std::abs(q[k]);
  double wp = 1.0;
  for (int i = 0; i <= r; ++i) wp *= aw;
  return wp + std::abs(x) * qs + std::numeric_limits<double>::min();
}

}  // namespace

SpectralModel::Tracked SpectralModel::track_segment(Tracked cur, Complex x_to) const {
  const Complex x_from = cur.x;
  if (std::abs(x_to - x_from) == 0.0) return cur;

  auto newton = [&](Complex& w, Complex x) -> bool {
    for (int iter = 0; iter < 48; ++iter) {
      const Complex pv = poly_eval(w, x);
      const Complex dv = poly_dw(w, x);
      if (std::abs(dv) == 0.0) return false;
      const Complex delta = pv / dv;
      w -= delta;
      if (std::abs(delta) <= 5e-16 * (1.0 + std::abs(w))) return true;
    }
    return std::abs(poly_eval(w, x)) <= 1e-9 * poly_scale(q_, params_.r, w, x);
  };

  // Distance to the nearest other root from the local quadratic model.
  auto separation = [&](Complex w, Complex x) -> double {
    Complex d2q = 0.0;
    for (std::size_t k = q_.size(); k-- > 2;)
      d2q = d2q * w + static_cast<double>(k) * static_cast<double>(k - 1) * q_[k];
    Complex wp = 1.0;
    for (int i = 0; i + 1 < params_.r; ++i) wp *= w;
    const Complex p2 = static_cast<double>(params_.r + 1) * static_cast<double>(params_.r) * wp - x * d2q;
    const double denom = std::abs(p2);
    if (denom == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::abs(poly_dw(w, x)) / denom;
  };

  double t = 0.0;
  double dt = 0.25;
  const double dt_min = 1e-12;
  while (t < 1.0) {
    const double t_next = std::min(1.0, t + dt);
    const Complex x_next = x_from + (x_to - x_from) * t_next;
    const Complex dx = x_next - cur.x;

    Complex w_pred = cur.w;
    const Complex pw = poly_dw(cur.w, cur.x);
    if (std::abs(pw) > 0.0) {
      Complex qv = 0.0;
      for (std::size_t k = q_.size(); k-- > 0;) qv = qv * cur.w + q_[k];
      w_pred += qv / pw * dx;
    }

    Complex w_new = w_pred;
    bool ok = newton(w_new, x_next);
    if (ok) {
      const double moved = std::abs(w_new - w_pred);
      if (moved > 0.0) {
        const double sep = separation(w_new, x_next);
        if (moved > 0.25 * sep) {
          // corrector travelled far: confirm it stayed with the nearest root
          const auto roots = roots_at(x_next);
          const Complex* nearest = nullptr;
          double best = std::numeric_limits<double>::infinity();
          for (const auto& root : roots) {
            const double d = std::abs(root - w_pred);
            if (d < best) {
              best = d;
              nearest = &root;
            }
          }
          ok = nearest != nullptr &&
               std::abs(*nearest - w_new) <= 1e-6 * (1.0 + std::abs(w_new));
        }
      }
    }
    if (!ok) {
      dt *= 0.5;
      if (dt < dt_min)
        throw std::runtime_error("spectral: branch tracking stalled near a branch point");
      continue;
    }
    if (refine_long_double_) w_new = refine(w_new, x_next);
    cur = Tracked{x_next, w_new};
    t = t_next;
    dt = std::min(0.25, dt * 1.6);
  }
  return cur;
}

SpectralModel::Tracked SpectralModel::track_path(Complex x_to) const {
  const double xs = support_.x_star;
  if (x_to.imag() == 0.0 && x_to.real() >= 0.0 && x_to.real() <= xs)
    throw std::invalid_argument(
        "spectral: point on the cut; approach it with a nonzero imaginary part");

  Tracked cur = anchor_;
  if (x_to.imag() == 0.0 && x_to.real() > xs) return track_segment(cur, x_to);

  const double sigma = (x_to.imag() >= 0.0) ? 1.0 : -1.0;
  const double big = 1.5 * xs + std::abs(x_to.imag());
  cur = track_segment(cur, anchor_.x + Complex(0.0, sigma * big));
  cur = track_segment(cur, Complex(x_to.real(), sigma * big));

  // Descend geometrically: near the origin all sheets meet and the root
  // geometry lives on the scale of |x|, so fixed-length steps cannot resolve
  // it; shrinking the height by a constant factor per hop can.
  const double target_h = std::abs(x_to.imag());
  const double floor_h =
      std::max(4.0 * target_h, 1e-12 * std::max(std::abs(x_to.real()), 1e-290));
  double h = big;
  while (h > floor_h) {
    h = std::max(h / 4.0, floor_h);
    cur = track_segment(cur, Complex(x_to.real(), sigma * h));
  }
  return track_segment(cur, x_to);
}

SpectralModel::Tracked SpectralModel::continue_to(const Tracked& from, Complex x_to) const {
  return track_segment(from, x_to);
}

BranchValue SpectralModel::branch_at(Complex x) const {
  Tracked t = track_path(x);
  // final sanity: the tracked value must coincide with an actual root
  const auto roots = roots_at(x);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& root : roots) best = std::min(best, std::abs(root - t.w));
  if (best > 1e-6 * (1.0 + std::abs(t.w)))
    throw std::runtime_error("spectral: tracked value failed root verification");
  return BranchValue{x, t.w, std::abs(poly_eval(t.w, x))};
}

double SpectralModel::density_eps(double x) const {
  const double xs = support_.x_star;
  const double eps = 1e-8 * x * (xs - x) / xs;
  return std::max(eps, 1e-290);
}

Complex SpectralModel::boundary_w(double x, const Tracked* hint, Tracked* out_state) const {
  const double eps = density_eps(x);
  const Complex x1(x, eps);
  Tracked t1 = (hint != nullptr) ? continue_to(*hint, x1) : track_path(x1);
  Tracked t2 = continue_to(t1, Complex(x, 0.5 * eps));
  if (out_state != nullptr) *out_state = t1;
  return 2.0 * t2.w - t1.w;  // one Richardson step, eps -> 0
}

DensitySample SpectralModel::density_impl(double x, const Tracked* hint, Tracked* out_state) const {
  if (!(x > 0.0) || !(x < support_.x_star))
    throw std::invalid_argument("density: x outside the open support");
  const Complex w = boundary_w(x, hint, out_state);
  const double raw = -std::imag(w) / (kPi * x);
  double rho = sign_ * raw;
  // Values of Im w below the cancellation floor carry no sign information
  // (conjugate roots merging at the edges); a genuine branch mix-up shows up
  // as a macroscopic negative density instead.
  const double noise_floor = 1e-6 * (1.0 + std::abs(w));
  if (rho < -1e-10 && std::abs(std::imag(w)) > noise_floor)
    throw std::runtime_error("density: branch mis-tracking detected (negative density)");
  if (rho < 0.0) rho = 0.0;
  return DensitySample{x, rho, w};
}

DensitySample SpectralModel::density(double x) const { return density_impl(x, nullptr, nullptr); }

std::vector<DensitySample> SpectralModel::density_grid(int points) const {
  if (points < 1) throw std::invalid_argument("density_grid: points must be >= 1");
  std::vector<DensitySample> out;
  out.reserve(static_cast<std::size_t>(points));
  Tracked state;
  bool have_state = false;
  double x_prev = 0.0;
  for (int i = 1; i <= points; ++i) {
    const double x = support_.x_star * static_cast<double>(i) / (points + 1);
    const bool chain = have_state && x_prev > 0.0 && x / x_prev < 2.5;
    out.push_back(density_impl(x, chain ? &state : nullptr, &state));
    have_state = true;
    x_prev = x;
  }
  return out;
}

std::vector<double> SpectralModel::quadrature_moments(int n_max) const {
  if (n_max < 0) throw std::invalid_argument("quadrature_moments: n_max must be >= 0");
  const double xs = support_.x_star;
  const double t_max = 5.2;
  const int max_level = 9;
  const double delta_left = 1e-80;
  const double delta_right = 1e-15;

  // x = xs * g(t) with g = 1/(1 + exp(-pi sinh t)). Both g and 1-g are
  // computed in sigmoid form: the naive (1 + tanh)/2 rounds to 0 once
  // pi sinh t < -37 and would silently drop the left tail, whose mass decays
  // only like x^{1/(r+1)}.
  auto transform = [&](double t, double& g, double& one_minus_g, double& weight) {
    const double v = kPi * std::sinh(t);
    const double e = std::exp(-std::abs(v));
    const double denom = 1.0 + e;
    weight = kPi * std::cosh(t) * e / (denom * denom);
    if (v <= 0.0) {
      g = e / denom;
      one_minus_g = 1.0 / denom;
    } else {
      g = 1.0 / denom;
      one_minus_g = e / denom;
    }
  };

  std::vector<double> acc(static_cast<std::size_t>(n_max) + 1, 0.0);
  std::vector<double> prev(static_cast<std::size_t>(n_max) + 1, 0.0);

  Tracked state;
  bool have_state = false;
  double x_prev = 0.0, d_prev = 0.0;

  auto add_point = [&](double t) {
    double g, one_minus_g, gp;
    transform(t, g, one_minus_g, gp);
    if (g < delta_left || one_minus_g < delta_right) return;
    const double x = xs * g;
    const double d = xs * one_minus_g;
    const bool chain = have_state && x_prev > 0.0 && d_prev > 0.0 &&
                       x / x_prev < 2.5 && x_prev / x < 2.5 &&
                       d / d_prev < 2.5 && d_prev / d < 2.5;
    const DensitySample sample = density_impl(x, chain ? &state : nullptr, &state);
    have_state = true;
    x_prev = x;
    d_prev = d;
    const double base = sample.rho * xs * gp;
    double xp = 1.0;
    for (int n = 0; n <= n_max; ++n) {
      acc[static_cast<std::size_t>(n)] += base * xp;
      xp *= x;
    }
  };

  double h = 0.5;
  for (int level = 0; level <= max_level; ++level) {
    have_state = false;
    if (level == 0) {
      const int kmax = static_cast<int>(t_max / h);
      for (int k = -kmax; k <= kmax; ++k) add_point(k * h);
    } else {
      h *= 0.5;
      const int kmax = static_cast<int>(t_max / h);
      int k = -kmax;
      if (k % 2 == 0) ++k;  // only odd multiples are new at this level
      for (; k <= kmax; k += 2) add_point(k * h);
    }

    std::vector<double> integral(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) integral[static_cast<std::size_t>(n)] = h * acc[static_cast<std::size_t>(n)];

    if (level >= 2) {
      bool converged = true;
      for (int n = 0; n <= n_max; ++n) {
        const double cur = integral[static_cast<std::size_t>(n)];
        const double err = std::abs(cur - prev[static_cast<std::size_t>(n)]);
        if (err > std::max(1e-11, 1e-9 * std::abs(cur))) {
          converged = false;
          break;
        }
      }
      if (converged) return integral;
    }
    prev = integral;
  }
  throw std::runtime_error("quadrature_moments: tanh-sinh levels exhausted without convergence");
}

double SpectralModel::quadrature_moment(int n) const {
  if (n < 0) throw std::invalid_argument("quadrature_moment: n must be >= 0");
  return quadrature_moments(n).back();
}

BranchValue branch_at(const ModelParams& p, Complex x) { return SpectralModel(p).branch_at(x); }

DensitySample density(const ModelParams& p, double x) { return SpectralModel(p).density(x); }

double quadrature_moment(const ModelParams& p, int n) {
  return SpectralModel(p).quadrature_moment(n);
}

}  // namespace prodspec
