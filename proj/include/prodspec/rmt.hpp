#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

#include "prodspec/moments.hpp"

namespace prodspec {

// Deterministic source of Gaussians. Uniforms come from mt19937_64 and the
// normal pairs from an explicit Box-Muller transform, so streams are portable
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform();                       // [0, 1)
  std::complex<double> complex_gaussian();  // E g = 0, E |g|^2 = 1

 private:
  std::mt19937_64 eng_;
};

// splitmix64 of (master, index); documented so runs are reproducible under
// any execution order of the replicates.
std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t index);

// Product ensemble configuration: s truncated-unitary factors T_j of size
// (n+nu_j) x (n+nu_{j-1}) cut from l_j x l_j Haar unitaries with
// l_j = 2n + kappa_j, followed by r-s Gaussian factors of the same sizes.
struct EnsembleConfig {
  int n = 0;
  int r = 1;
  int s = 0;
  std::vector<int> nu;         // nu_0..nu_r, nu_0 == 0
  std::vector<int> l_offsets;  // kappa_1..kappa_s
  int trials = 0;
  std::uint64_t seed = 0;
  int k_max = 4;

  // nu defaults to zeros and kappa_j to nu_j + nu_{j-1}, the smallest offsets
  // with l_j >= (n+nu_j) + (n+nu_{j-1}) for every n.
  static EnsembleConfig with_defaults(int n, int r, int s, std::vector<int> nu,
                                      int trials, std::uint64_t seed);
  void validate() const;
  int l_of(int j) const { return 2 * n + l_offsets[static_cast<std::size_t>(j) - 1]; }
};

struct EmpiricalSpectrum {
  std::vector<double> eigenvalues;  // squared singular values over n^{r-s}
  int n = 0;
  std::uint64_t replicate_seed = 0;
};

struct MomentStat {
  int k = 0;
  double mean = 0;
  double std_error = 0;
};

struct MomentVerdict {
  int k = 0;
  double z = 0;
  bool pass = false;
};

struct ComparisonReport {
  EnsembleConfig config;
  std::vector<MomentStat> empirical_moments;
  std::vector<Rational> theoretical_exact;   // mass-1 law, k = 1..k_max
  std::vector<double> theoretical_moments;
  double max_eigenvalue = 0;
  double x_star = 0;
  std::vector<MomentVerdict> verdicts;  // pass at the 3 standard error level
  bool all_pass = false;
  std::vector<double> pooled_eigenvalues;  // replicate order, for histograms
};

Eigen::MatrixXcd sample_ginibre(int rows, int cols, Rng& rng);

// Haar unitary via QR of a Gaussian matrix with the column phases fixed by
// the diagonal of the triangular factor.
Eigen::MatrixXcd sample_haar_unitary(int l, Rng& rng);

// Upper-left m x n block of a fresh Haar unitary of size l, l >= m + n.
Eigen::MatrixXcd sample_truncation(int l, int m_rows, int n_cols, Rng& rng);

EmpiricalSpectrum sample_spectrum(const EnsembleConfig& config, int replicate_index);

ComparisonReport run_experiment(const EnsembleConfig& config);

}  // namespace prodspec
