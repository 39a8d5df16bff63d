#include "prodspec/rmt.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "prodspec/spectral.hpp"

namespace prodspec {

double Rng::uniform() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

std::complex<double> Rng::complex_gaussian() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double mag = std::sqrt(-std::log(u1));  // already includes the 1/sqrt(2) split
  const double ph = 2.0 * std::numbers::pi * u2;
  return {mag * std::cos(ph), mag * std::sin(ph)};
}

std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

EnsembleConfig EnsembleConfig::with_defaults(int n, int r, int s, std::vector<int> nu,
                                             int trials, std::uint64_t seed) {
  EnsembleConfig c;
  c.n = n;
  c.r = r;
  c.s = s;
  c.nu = nu.empty() ? std::vector<int>(static_cast<std::size_t>(r) + 1, 0) : std::move(nu);
  c.l_offsets.resize(static_cast<std::size_t>(s));
  for (int j = 1; j <= s; ++j)
    c.l_offsets[static_cast<std::size_t>(j) - 1] =
        c.nu[static_cast<std::size_t>(j)] + c.nu[static_cast<std::size_t>(j) - 1];
  c.trials = trials;
  c.seed = seed;
  return c;
}

void EnsembleConfig::validate() const {
  if (n < 1) throw std::invalid_argument("EnsembleConfig: n must be >= 1");
  if (r < 1 || s < 0 || s >= r)
    throw std::invalid_argument("EnsembleConfig: need 0 <= s < r");
  if (nu.size() != static_cast<std::size_t>(r) + 1)
    throw std::invalid_argument("EnsembleConfig: nu must list nu_0..nu_r");
  if (nu[0] != 0) throw std::invalid_argument("EnsembleConfig: nu_0 must be 0");
  for (int v : nu)
    if (v < 0) throw std::invalid_argument("EnsembleConfig: nu_j must be >= 0");
  if (l_offsets.size() != static_cast<std::size_t>(s))
    throw std::invalid_argument("EnsembleConfig: l_offsets must list kappa_1..kappa_s");
  for (int j = 1; j <= s; ++j) {
    const int kappa = l_offsets[static_cast<std::size_t>(j) - 1];
    const int need = nu[static_cast<std::size_t>(j)] + nu[static_cast<std::size_t>(j) - 1];
    // l_j >= (n+nu_j) + (n+nu_{j-1}) must hold with kappa fixed as n grows
    if (kappa < need)
      throw std::invalid_argument("EnsembleConfig: kappa_j must be >= nu_j + nu_{j-1}");
  }
  if (trials < 1) throw std::invalid_argument("EnsembleConfig: trials must be >= 1");
  if (k_max < 1) throw std::invalid_argument("EnsembleConfig: k_max must be >= 1");
}

Eigen::MatrixXcd sample_ginibre(int rows, int cols, Rng& rng) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("sample_ginibre: empty shape");
  Eigen::MatrixXcd g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = rng.complex_gaussian();
  return g;
}

Eigen::MatrixXcd sample_haar_unitary(int l, Rng& rng) {
  if (l < 1) throw std::invalid_argument("sample_haar_unitary: l must be >= 1");
  for (int attempt = 0; attempt < 4; ++attempt) {
    const Eigen::MatrixXcd g = sample_ginibre(l, l, rng);
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd u = qr.householderQ();
    const auto diag = qr.matrixQR().diagonal();
    bool singular = false;
    for (int j = 0; j < l; ++j) {
      const double m = std::abs(diag(j));
      if (m == 0.0) {
        singular = true;
        break;
      }
      u.col(j) *= diag(j) / m;
    }
    if (!singular) return u;
  }
  throw std::runtime_error("sample_haar_unitary: repeated singular samples");
}

Eigen::MatrixXcd sample_truncation(int l, int m_rows, int n_cols, Rng& rng) {
  if (m_rows < 1 || n_cols < 1) throw std::invalid_argument("sample_truncation: empty shape");
  if (l < m_rows + n_cols)
    throw std::invalid_argument("sample_truncation: need l >= m + n");
  return sample_haar_unitary(l, rng).topLeftCorner(m_rows, n_cols);
}

EmpiricalSpectrum sample_spectrum(const EnsembleConfig& config, int replicate_index) {
  config.validate();
  const std::uint64_t seed = replicate_seed(config.seed, static_cast<std::uint64_t>(replicate_index));
  Rng rng(seed);

  const auto dim = [&](int j) { return config.n + config.nu[static_cast<std::size_t>(j)]; };

  // Factors are drawn in index order, truncations first, and applied from the
  // right so the product reads G_r ... G_{s+1} T_s ... T_1.
  Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(dim(0), dim(0));
  for (int j = 1; j <= config.s; ++j) {
    const Eigen::MatrixXcd t = sample_truncation(config.l_of(j), dim(j), dim(j - 1), rng);
    prod = (t * prod).eval();
  }
  for (int j = config.s + 1; j <= config.r; ++j) {
    const Eigen::MatrixXcd g = sample_ginibre(dim(j), dim(j - 1), rng);
    prod = (g * prod).eval();
  }

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(prod);
  const auto& sv = svd.singularValues();

  const double scale = std::pow(static_cast<double>(config.n), config.r - config.s);
  EmpiricalSpectrum spec;
  spec.n = config.n;
  spec.replicate_seed = seed;
  spec.eigenvalues.resize(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    spec.eigenvalues[static_cast<std::size_t>(i)] = sv(i) * sv(i) / scale;
  return spec;
}

ComparisonReport run_experiment(const EnsembleConfig& config) {
  config.validate();
  if (config.trials < 2)
    throw std::invalid_argument("run_experiment: trials must be >= 2 for standard errors");

  ComparisonReport report;
  report.config = config;

  const ModelParams law{config.r, config.s, Rational(1)};
  for (int k = 1; k <= config.k_max; ++k) {
    const Rational exact = moment_jacobi(law, k);
    report.theoretical_exact.push_back(exact);
    report.theoretical_moments.push_back(exact.to_double());
  }
  report.x_star = endpoints(law).x_star;

  std::vector<std::vector<double>> per_trial(static_cast<std::size_t>(config.k_max));
  double max_eig = 0.0;
  report.pooled_eigenvalues.reserve(static_cast<std::size_t>(config.trials) *
                                    static_cast<std::size_t>(config.n));
  for (int t = 0; t < config.trials; ++t) {
    const EmpiricalSpectrum spec = sample_spectrum(config, t);
    report.pooled_eigenvalues.insert(report.pooled_eigenvalues.end(),
                                     spec.eigenvalues.begin(), spec.eigenvalues.end());
    for (double ev : spec.eigenvalues) max_eig = std::max(max_eig, ev);
    for (int k = 1; k <= config.k_max; ++k) {
      double acc = 0.0;
      for (double ev : spec.eigenvalues) acc += std::pow(ev, k);
      per_trial[static_cast<std::size_t>(k) - 1].push_back(acc / config.n);
    }
  }
  report.max_eigenvalue = max_eig;

  report.all_pass = true;
  for (int k = 1; k <= config.k_max; ++k) {
    const auto& vals = per_trial[static_cast<std::size_t>(k) - 1];
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(vals.size());
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    var /= static_cast<double>(vals.size() - 1);
    const double se = std::sqrt(var / static_cast<double>(vals.size()));
    report.empirical_moments.push_back(MomentStat{k, mean, se});

    const double ref = report.theoretical_moments[static_cast<std::size_t>(k) - 1];
    const double z = (se > 0.0) ? (mean - ref) / se : std::numeric_limits<double>::infinity();
    const bool pass = std::abs(z) <= 3.0;
    report.verdicts.push_back(MomentVerdict{k, z, pass});
    report.all_pass = report.all_pass && pass;
  }
  return report;
}

}  // namespace prodspec
