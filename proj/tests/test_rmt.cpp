#include "doctest.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "prodspec/rmt.hpp"

using prodspec::EnsembleConfig;
using prodspec::Rational;
using prodspec::Rng;

TEST_SUITE("rmt") {

TEST_CASE("replicate seeds differ and are stable") {
  CHECK(prodspec::replicate_seed(42, 0) != prodspec::replicate_seed(42, 1));
  CHECK(prodspec::replicate_seed(42, 0) == prodspec::replicate_seed(42, 0));
  CHECK(prodspec::replicate_seed(42, 0) != prodspec::replicate_seed(43, 0));
}

TEST_CASE("complex gaussian normalization") {
  Rng rng(123);
  const int n = 20000;
  std::complex<double> mean = 0;
  double second = 0;
  for (int i = 0; i < n; ++i) {
    const auto g = rng.complex_gaussian();
    mean += g;
    second += std::norm(g);
  }
  mean /= static_cast<double>(n);
  second /= static_cast<double>(n);
  CHECK(std::abs(mean) < 0.05);
  CHECK(std::abs(second - 1.0) < 0.05);
}

TEST_CASE("ginibre shape and determinism") {
  Rng rng(7);
  const auto g = prodspec::sample_ginibre(3, 2, rng);
  CHECK(g.rows() == 3);
  CHECK(g.cols() == 2);
  Rng rng2(7);
  const auto g2 = prodspec::sample_ginibre(3, 2, rng2);
  CHECK((g - g2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("haar unitarity") {
  Rng rng(99);
  for (const int l : {1, 5, 16}) {
    const auto u = prodspec::sample_haar_unitary(l, rng);
    const Eigen::MatrixXcd gram = u.adjoint() * u - Eigen::MatrixXcd::Identity(l, l);
    CHECK(gram.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("haar phases look uniform") {
  // 1x1 case: phases average out
  Rng rng(5);
  std::complex<double> mean = 0;
  for (int i = 0; i < 10000; ++i) mean += prodspec::sample_haar_unitary(1, rng)(0, 0);
  CHECK(std::abs(mean) / 10000.0 < 0.05);

  // eigenvalue angles of modest samples spread over 8 arcs
  Rng rng2(17);
  const int samples = 400, l = 16;
  std::vector<int> arc(8, 0);
  for (int i = 0; i < samples; ++i) {
    const auto u = prodspec::sample_haar_unitary(l, rng2);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(u, false);
    for (int j = 0; j < l; ++j) {
      double th = std::arg(eig.eigenvalues()(j));
      if (th < 0) th += 2 * M_PI;
      ++arc[std::min<std::size_t>(7, static_cast<std::size_t>(th / (M_PI / 4)))];
    }
  }
  const double expected = samples * l / 8.0;
  double chi2 = 0;
  for (int count : arc) chi2 += (count - expected) * (count - expected) / expected;
  CHECK(chi2 < 18.48);  // chi-square, 7 dof, 1% level
}

TEST_CASE("truncation preconditions and spectra") {
  Rng rng(3);
  const auto t = prodspec::sample_truncation(12, 4, 5, rng);
  CHECK(t.rows() == 4);
  CHECK(t.cols() == 5);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(t);
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    CHECK(svd.singularValues()(i) <= 1.0 + 1e-12);
    CHECK(svd.singularValues()(i) >= 0.0);
  }
  CHECK_THROWS_AS(prodspec::sample_truncation(8, 4, 5, rng), std::invalid_argument);
}

TEST_CASE("spectrum shape, scale, determinism") {
  auto config = EnsembleConfig::with_defaults(24, 2, 1, {}, 4, 77);
  config.validate();
  const auto spec = prodspec::sample_spectrum(config, 0);
  CHECK(spec.eigenvalues.size() == 24);
  for (double ev : spec.eigenvalues) CHECK(ev >= 0.0);
  const auto again = prodspec::sample_spectrum(config, 0);
  CHECK(spec.eigenvalues == again.eigenvalues);
  const auto other = prodspec::sample_spectrum(config, 1);
  CHECK(spec.eigenvalues != other.eigenvalues);
}

TEST_CASE("wishart forms share nonzero spectra") {
  // product with offsets: Y*Y and YY* keep the same nonzero eigenvalues
  EnsembleConfig config;
  config.n = 6;
  config.r = 2;
  config.s = 1;
  config.nu = {0, 1, 2};
  config.l_offsets = {1};
  config.trials = 1;
  config.seed = 2024;
  config.validate();

  Rng rng(prodspec::replicate_seed(config.seed, 0));
  const auto t1 = prodspec::sample_truncation(config.l_of(1), 7, 6, rng);
  const auto g2 = prodspec::sample_ginibre(8, 7, rng);
  const Eigen::MatrixXcd y = g2 * t1;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> small(y.adjoint() * y);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> large(y * y.adjoint());
  std::vector<double> ev_small(small.eigenvalues().data(),
                               small.eigenvalues().data() + small.eigenvalues().size());
  std::vector<double> ev_large(large.eigenvalues().data(),
                               large.eigenvalues().data() + large.eigenvalues().size());
  std::sort(ev_small.rbegin(), ev_small.rend());
  std::sort(ev_large.rbegin(), ev_large.rend());
  // large form has 2 extra zeros
  CHECK(ev_large.size() == ev_small.size() + 2);
  for (std::size_t i = 0; i < ev_small.size(); ++i)
    CHECK(std::abs(ev_large[i] - ev_small[i]) <= 1e-8 * std::max(1.0, std::abs(ev_small[i])));
  for (std::size_t i = ev_small.size(); i < ev_large.size(); ++i)
    CHECK(std::abs(ev_large[i]) <= 1e-8);
}

TEST_CASE("single-factor empirical mean near 1") {
  auto config = EnsembleConfig::with_defaults(50, 1, 0, {}, 100, 31);
  const auto report = prodspec::run_experiment(config);
  REQUIRE(!report.empirical_moments.empty());
  const auto& m1 = report.empirical_moments[0];
  CHECK(std::abs(m1.mean - 1.0) <= 3.0 * m1.std_error + 1e-9);
  CHECK(report.verdicts[0].pass);
}

TEST_CASE("small product experiment matches exact moments") {
  auto config = EnsembleConfig::with_defaults(40, 2, 1, {}, 60, 4242);
  const auto report = prodspec::run_experiment(config);
  CHECK(report.theoretical_exact[0] == Rational(1, 2));
  CHECK(report.theoretical_exact[1] == Rational(5, 8));
  CHECK(report.all_pass);
  CHECK(report.max_eigenvalue < 1.5 * report.x_star);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(EnsembleConfig::with_defaults(10, 2, 2, {}, 5, 1).validate(),
                  std::invalid_argument);
  auto bad_nu = EnsembleConfig::with_defaults(10, 2, 1, {1, 0, 0}, 5, 1);
  CHECK_THROWS_AS(bad_nu.validate(), std::invalid_argument);
  auto bad_kappa = EnsembleConfig::with_defaults(10, 2, 1, {0, 1, 1}, 5, 1);
  bad_kappa.l_offsets = {0};  // below nu_1 + nu_0
  CHECK_THROWS_AS(bad_kappa.validate(), std::invalid_argument);
  auto one_trial = EnsembleConfig::with_defaults(10, 2, 1, {}, 1, 1);
  CHECK_THROWS_AS(prodspec::run_experiment(one_trial), std::invalid_argument);
}

}  // TEST_SUITE
