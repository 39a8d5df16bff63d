#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prodspec/moments.hpp"

namespace prodspec {

enum class TransformKind { psi, chi, s_transform };

// One of the transform series of a probability measure:
//   psi(z)  = sum_{n>=1} m_n z^n        (moment generating series)
//   chi     = compositional inverse of psi
//   S(z)    = (z+1)/z * chi(z)          (multiplicative transform)
// The Stieltjes transform G is carried implicitly through
// psi(z) = (1/z) G(1/z) - 1 and needs no separate representation.
struct TransformSeries {
  TransformKind kind;
  Series series;
};

// Requires a probability sequence (m_0 = 1) with at least `order` moments.
TransformSeries psi_from_moments(const MomentSequence& m, std::size_t order);

// S-transform of a mass-1 sequence with nonzero first moment.
TransformSeries s_from_moments(const MomentSequence& m, std::size_t order);

// Inverts the pipeline: chi = z/(z+1) S, psi = chi^{-1}, moments off psi.
MomentSequence moments_from_s(const TransformSeries& s, std::size_t order);

// Free multiplicative convolution at the moment level: the S-transform of the
// product is the product of the S-transforms.
MomentSequence free_multiply(const MomentSequence& a, const MomentSequence& b, std::size_t order);

struct FactorizationReport {
  int r = 0;
  int s = 0;
  std::size_t order = 0;
  std::vector<bool> coefficient_ok;  // index n < order
  bool all_ok = false;
};

// Checks, coefficient by coefficient and exactly, that the mass-1 product law
// with parameters (r, s) equals FC_{r-s} convolved with s arcsine factors.
FactorizationReport verify_factorization(int r, int s, std::size_t order);

// Parses a comma list of factor tokens fc:<r> | raney:<alpha>:<beta> |
// jacobi:<r>:<s> (mass 1 implied) and returns the factor sequences with
// n_max = order - 1 moments each.
std::vector<MomentSequence> parse_factor_spec(const std::string& spec, std::size_t order);

}  // namespace prodspec
