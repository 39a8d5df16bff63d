#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "prodspec/moments.hpp"

namespace prodspec {

using Complex = std::complex<double>;

// Support endpoints of the limit density. w_star and w_tilde are the two
// finite critical points of w^{r+1} = x (w-a)(w+1)^s; x_star = x(w_star) is
// the right edge of the support. x_tilde is reported only when its defining
// expression is regular (it degenerates for s = 0 and is left out for a = 1/s).
struct SupportData {
  double w_star = 0;
  double x_star = 0;
  double w_tilde = 0;
  std::optional<double> x_tilde;
};

// Value of the physical branch at a point x off the cut (or shifted off it).
struct BranchValue {
  Complex x;
  Complex w;
  double residual = 0;  // |w^{r+1} - x (w-a)(w+1)^s|
};

struct DensitySample {
  double x = 0;
  double rho = 0;
  Complex w_plus;  // boundary value of the branch from the upper half plane
};

SupportData endpoints(const ModelParams& p);

// All roots (with multiplicity) of sum_k coeff[k] w^k, ascending coefficients.
// Simultaneous (Aberth-Ehrlich) iteration; each returned root has residual
// at most 1e-12 relative to the coefficient magnitudes at the root.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeff, int max_iter = 200);

// Per-parameter solver for the algebraic curve. The physical branch is the
// solution that is analytic at infinity with limit a; it is pinned down at
// the real anchor x0 = 2 x_star (unique real root in (a, w_star)) and every
// query is answered by predictor-corrector continuation from that anchor
// along a path that avoids the cut [0, x_star].
class SpectralModel {
 public:
  explicit SpectralModel(const ModelParams& p);

  const ModelParams& params() const { return params_; }
  const SupportData& support() const { return support_; }

  BranchValue branch_at(Complex x) const;

  // Density on the open support (0, x_star). The boundary value w_+ is taken
  // at x + i eps with one Richardson step eps -> eps/2 to land on the cut.
  DensitySample density(double x) const;

  // Interior grid x_i = x_star * i / (points+1), i = 1..points.
  std::vector<DensitySample> density_grid(int points) const;

  // Moments 0..n_max of the density by tanh-sinh quadrature over (0, x_star),
  // all orders integrated from one set of density evaluations.
  std::vector<double> quadrature_moments(int n_max) const;
  double quadrature_moment(int n) const;

 private:
  struct Tracked {
    Complex x;
    Complex w;
  };

  Complex poly_eval(Complex w, Complex x) const;
  Complex poly_dw(Complex w, Complex x) const;
  Complex refine(Complex w, Complex x) const;  // extra Newton polish in long double
  std::vector<Complex> roots_at(Complex x) const;
  Tracked track_segment(Tracked from, Complex x_to) const;
  Tracked track_path(Complex x_to) const;                 // from the anchor
  Tracked continue_to(const Tracked& from, Complex x_to) const;
  Complex boundary_w(double x, const Tracked* hint, Tracked* out_state) const;
  double density_eps(double x) const;
  DensitySample density_impl(double x, const Tracked* hint, Tracked* out_state) const;

  ModelParams params_;
  SupportData support_;
  double a_ = 0;
  std::vector<double> q_;  // coefficients of (w-a)(w+1)^s
  Tracked anchor_;
  double sign_ = 1;   // orientation making the density positive
  bool refine_long_double_ = false;
};

// One-shot conveniences (each builds a model internally).
BranchValue branch_at(const ModelParams& p, Complex x);
DensitySample density(const ModelParams& p, double x);
double quadrature_moment(const ModelParams& p, int n);

}  // namespace prodspec
