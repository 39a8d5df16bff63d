#include "prodspec/freeconv.hpp"

#include <sstream>
#include <stdexcept>

namespace prodspec {

namespace {

void require_probability(const MomentSequence& m, std::size_t order) {
  if (m.values.empty() || m.values[0] != Rational(1))
    throw std::invalid_argument("transform: sequence must have mass 1");
  if (m.values.size() < order)
    throw std::invalid_argument("transform: fewer moments than requested order");
}

}  // namespace

TransformSeries psi_from_moments(const MomentSequence& m, std::size_t order) {
  require_probability(m, order);
  Series psi(order);
  for (std::size_t n = 1; n < order; ++n) psi[n] = m.values[n];
  return TransformSeries{TransformKind::psi, psi};
}

TransformSeries s_from_moments(const MomentSequence& m, std::size_t order) {
  TransformSeries psi = psi_from_moments(m, order);
  if (order < 2 || psi.series[1].is_zero())
    throw std::invalid_argument("s_from_moments: first moment must be nonzero");
  Series chi = series_reverse(psi.series);
  // S = (z+1)/z * chi
  Series t = series_shift_down(chi);
  Series s = t + series_shift_up(t);
  return TransformSeries{TransformKind::s_transform, s};
}

MomentSequence moments_from_s(const TransformSeries& s, std::size_t order) {
  if (s.series[0].is_zero())
    throw std::invalid_argument("moments_from_s: constant term must be nonzero");
  if (s.series.order() < order)
    throw std::invalid_argument("moments_from_s: series order too small");
  Series one_plus_z = Series::identity(s.series.order());
  one_plus_z[0] = 1;
  Series chi = series_shift_up(series_mul(s.series, series_recip(one_plus_z)));
  Series psi = series_reverse(chi);
  MomentSequence m;
  m.label = "from-s";
  m.values.resize(order);
  m.values[0] = 1;
  for (std::size_t n = 1; n < order; ++n) m.values[n] = psi[n];
  return m;
}

MomentSequence free_multiply(const MomentSequence& a, const MomentSequence& b, std::size_t order) {
  TransformSeries sa = s_from_moments(a, order);
  TransformSeries sb = s_from_moments(b, order);
  TransformSeries prod{TransformKind::s_transform, series_mul(sa.series, sb.series)};
  MomentSequence m = moments_from_s(prod, order);
  m.label = a.label + " x " + b.label;
  return m;
}

FactorizationReport verify_factorization(int r, int s, std::size_t order) {
  if (r < 1 || s < 0 || s >= r)
    throw std::invalid_argument("verify_factorization: need 0 <= s < r");
  if (order < 2) throw std::invalid_argument("verify_factorization: order must be >= 2");

  const int n_max = static_cast<int>(order) - 1;
  MomentSequence kappa = fuss_catalan_sequence(r - s, n_max);
  const MomentSequence arcsine = raney_sequence(Rational(1), Rational(1, 2), n_max);
  for (int j = 0; j < s; ++j) kappa = free_multiply(kappa, arcsine, order);

  ModelParams params{r, s, Rational(1)};
  FactorizationReport report;
  report.r = r;
  report.s = s;
  report.order = order;
  report.coefficient_ok.resize(order);
  report.all_ok = true;
  for (std::size_t n = 0; n < order; ++n) {
    const bool ok = kappa.values[n] == moment_jacobi(params, static_cast<int>(n));
    report.coefficient_ok[n] = ok;
    report.all_ok = report.all_ok && ok;
  }
  return report;
}

std::vector<MomentSequence> parse_factor_spec(const std::string& spec, std::size_t order) {
  if (order < 2) throw std::invalid_argument("factor spec: order must be >= 2");
  std::vector<MomentSequence> factors;
  std::stringstream ss(spec);
  std::string token;
  const int n_max = static_cast<int>(order) - 1;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    std::vector<std::string> parts;
    std::stringstream ts(token);
    std::string piece;
    while (std::getline(ts, piece, ':')) parts.push_back(piece);
    if (parts[0] == "fc" && parts.size() == 2) {
      factors.push_back(fuss_catalan_sequence(std::stoi(parts[1]), n_max));
    } else if (parts[0] == "raney" && parts.size() == 3) {
      factors.push_back(raney_sequence(Rational::from_string(parts[1]),
                                       Rational::from_string(parts[2]), n_max));
    } else if (parts[0] == "jacobi" && parts.size() == 3) {
      ModelParams p{std::stoi(parts[1]), std::stoi(parts[2]), Rational(1)};
      MomentSequence m = jacobi_moment_sequence(p, n_max);
      m.label = "jacobi:" + parts[1] + ":" + parts[2];
      factors.push_back(std::move(m));
    } else {
      throw std::invalid_argument("factor spec: malformed token '" + token + "'");
    }
  }
  if (factors.empty()) throw std::invalid_argument("factor spec: no factors given");
  return factors;
}

}  // namespace prodspec
