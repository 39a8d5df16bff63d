#pragma once

#include <string>
#include <vector>

#include "prodspec/series.hpp"

namespace prodspec {

// Parameters of the limit law for a product of r-s complex Gaussian factors
// and s truncated-unitary factors, with total mass a.
struct ModelParams {
  int r = 1;
  int s = 0;
  Rational a = Rational(1);

  // Moments exist for 0 <= s <= r; density and support endpoints need s < r.
  void validate() const;
  void validate_spectral() const;
};

// Jacobi parameter pair attached to index n: alpha = r n + r + 1,
// beta = -(r+1-s) n - (r+2-s).
struct VaryingJacobiIndex {
  int n;
  long alpha;
  long beta;
};

VaryingJacobiIndex varying_jacobi_index(const ModelParams& p, int n);

struct MomentSequence {
  std::string label;
  std::vector<Rational> values;  // values[n] = n-th moment
};

// Jacobi polynomial P_n^(alpha,beta)(x) via the hypergeometric sum
// P_n = (1/n!) sum_k C(n,k) (n+alpha+beta+1)_k (alpha+k+1)_{n-k} ((x-1)/2)^k.
Rational jacobi_eval(int n, const Rational& alpha, const Rational& beta, const Rational& x);

// n-th moment from the Jacobi-polynomial closed form; moment 0 equals a.
Rational moment_jacobi(const ModelParams& p, int n);

// n-th moment as (1/n!) d^{n-1}/dz^{n-1} [ z^{n(r+1)} / (1+z)^{ns} ] at z = a,
// evaluated through the closed Leibniz expansion. Defined for n >= 1.
Rational moment_derivative(const ModelParams& p, int n);

// Moments 0..n_max as the coefficients of the solution w of
// w = a + u w^{r+1} / (1+w)^s in the formal variable u = 1/x.
MomentSequence moment_series(const ModelParams& p, int n_max);

// FC_r(n) = C(rn+n, n) / (rn+1).
Rational fuss_catalan(int r, int n);

// R_{alpha,beta}(n) = beta / (n alpha + beta) * C(n alpha + beta, n);
// requires n alpha + beta != 0.
Rational raney(const Rational& alpha, const Rational& beta, int n);

MomentSequence jacobi_moment_sequence(const ModelParams& p, int n_max);
MomentSequence fuss_catalan_sequence(int r, int n_max);
MomentSequence raney_sequence(const Rational& alpha, const Rational& beta, int n_max);

}  // namespace prodspec
