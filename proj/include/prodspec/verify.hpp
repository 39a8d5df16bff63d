#pragma once

#include <string>
#include <vector>

namespace prodspec {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when passing, first failure otherwise
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

// Exact agreement of the three moment routes (closed Jacobi form, Leibniz
// derivative form, series coefficients) plus the Fuss-Catalan and arcsine
// special cases, over r <= 6, s <= r, a in {1/2, 1, 2}, n <= 20.
SuiteResult verify_oracles();

// Strict positivity of every moment on the same lattice.
SuiteResult verify_positivity();

// Quadrature moments against the exact ones, r <= 4, s < r, a in {1/2, 1, 2},
// n <= 10, relative error at most 1e-7.
SuiteResult verify_quadrature();

// Moment-level factorization into FC_{r-s} and s arcsine factors, r <= 6,
// s < r, 16 coefficients, exact.
SuiteResult verify_factorization_suite();

// One of "oracles", "positivity", "quadrature", "factorization", "all".
SuiteResult verify_suite(const std::string& name);

}  // namespace prodspec
