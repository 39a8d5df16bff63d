#include "prodspec/verify.hpp"

#include <cmath>

#include "prodspec/freeconv.hpp"
#include "prodspec/moments.hpp"
#include "prodspec/spectral.hpp"

namespace prodspec {

namespace {

const std::vector<Rational>& mass_values() {
  static const std::vector<Rational> a{Rational(1, 2), Rational(1), Rational(2)};
  return a;
}

std::string tag(int r, int s, const Rational& a) {
  return "r=" + std::to_string(r) + " s=" + std::to_string(s) + " a=" + a.str();
}

void finish(SuiteResult& res) {
  res.all_pass = true;
  for (const auto& c : res.checks) res.all_pass = res.all_pass && c.pass;
}

}  // namespace

SuiteResult verify_oracles() {
  SuiteResult res;
  res.suite = "oracles";
  const int n_max = 20;
  for (int r = 1; r <= 6; ++r) {
    for (int s = 0; s <= r; ++s) {
      for (const Rational& a : mass_values()) {
        const ModelParams p{r, s, a};
        const MomentSequence series = moment_series(p, n_max);
        CheckResult check{"triple-equality " + tag(r, s, a), true, ""};
        for (int n = 1; n <= n_max; ++n) {
          const Rational jac = moment_jacobi(p, n);
          const Rational der = moment_derivative(p, n);
          const Rational ser = series.values[static_cast<std::size_t>(n)];
          if (jac != der || jac != ser) {
            check.pass = false;
            check.detail = "first mismatch at n=" + std::to_string(n);
            break;
          }
        }
        res.checks.push_back(std::move(check));
      }
    }
  }
  for (int r = 1; r <= 6; ++r) {
    CheckResult check{"special-cases r=" + std::to_string(r), true, ""};
    const ModelParams p0{r, 0, Rational(1)};
    const ModelParams p1{r, 1, Rational(1)};
    for (int n = 0; n <= n_max; ++n) {
      if (moment_jacobi(p0, n) != fuss_catalan(r, n)) {
        check.pass = false;
        check.detail = "s=0 mismatch at n=" + std::to_string(n);
        break;
      }
      if (moment_jacobi(p1, n) != raney(Rational(r + 1, 2), Rational(1, 2), n)) {
        check.pass = false;
        check.detail = "s=1 mismatch at n=" + std::to_string(n);
        break;
      }
    }
    res.checks.push_back(std::move(check));
  }
  finish(res);
  return res;
}

SuiteResult verify_positivity() {
  SuiteResult res;
  res.suite = "positivity";
  for (int r = 1; r <= 6; ++r) {
    for (int s = 0; s <= r; ++s) {
      for (const Rational& a : mass_values()) {
        const ModelParams p{r, s, a};
        CheckResult check{"positivity " + tag(r, s, a), true, ""};
        for (int n = 0; n <= 20; ++n) {
          if (moment_jacobi(p, n).sign() <= 0) {
            check.pass = false;
            check.detail = "nonpositive moment at n=" + std::to_string(n);
            break;
          }
        }
        res.checks.push_back(std::move(check));
      }
    }
  }
  finish(res);
  return res;
}

SuiteResult verify_quadrature() {
  SuiteResult res;
  res.suite = "quadrature";
  const int n_max = 10;
  for (int r = 1; r <= 4; ++r) {
    for (int s = 0; s < r; ++s) {
      for (const Rational& a : mass_values()) {
        const ModelParams p{r, s, a};
        CheckResult check{"quadrature " + tag(r, s, a), true, ""};
        try {
          const SpectralModel model(p);
          const auto numeric = model.quadrature_moments(n_max);
          for (int n = 0; n <= n_max; ++n) {
            const double exact = moment_jacobi(p, n).to_double();
            const double rel = std::abs(numeric[static_cast<std::size_t>(n)] - exact) / exact;
            if (!(rel <= 1e-7)) {
              check.pass = false;
              check.detail = "n=" + std::to_string(n) + " rel=" + std::to_string(rel);
              break;
            }
          }
        } catch (const std::exception& e) {
          check.pass = false;
          check.detail = e.what();
        }
        res.checks.push_back(std::move(check));
      }
    }
  }
  finish(res);
  return res;
}

SuiteResult verify_factorization_suite() {
  SuiteResult res;
  res.suite = "factorization";
  for (int r = 1; r <= 6; ++r) {
    for (int s = 0; s < r; ++s) {
      CheckResult check{"factorization r=" + std::to_string(r) + " s=" + std::to_string(s), true, ""};
      const FactorizationReport report = verify_factorization(r, s, 16);
      if (!report.all_ok) {
        check.pass = false;
        for (std::size_t n = 0; n < report.coefficient_ok.size(); ++n) {
          if (!report.coefficient_ok[n]) {
            check.detail = "first mismatch at n=" + std::to_string(n);
            break;
          }
        }
      }
      res.checks.push_back(std::move(check));
    }
  }
  finish(res);
  return res;
}

SuiteResult verify_suite(const std::string& name) {
  if (name == "oracles") return verify_oracles();
  if (name == "positivity") return verify_positivity();
  if (name == "quadrature") return verify_quadrature();
  if (name == "factorization") return verify_factorization_suite();
  if (name == "all") {
    SuiteResult all;
    all.suite = "all";
    for (const char* part : {"oracles", "positivity", "quadrature", "factorization"}) {
      SuiteResult sub = verify_suite(part);
      for (auto& c : sub.checks) all.checks.push_back(std::move(c));
    }
    finish(all);
    return all;
  }
  throw std::invalid_argument("verify: unknown suite '" + name + "'");
}

}  // namespace prodspec
