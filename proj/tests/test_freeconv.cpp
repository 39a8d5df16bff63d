#include "doctest.h"

#include "prodspec/freeconv.hpp"

using prodspec::MomentSequence;
using prodspec::Rational;
using prodspec::TransformKind;

namespace {

MomentSequence point_mass_one(int n_max) {
  MomentSequence m;
  m.label = "delta_1";
  m.values.assign(static_cast<std::size_t>(n_max) + 1, Rational(1));
  return m;
}

}  // namespace

TEST_SUITE("freeconv") {

TEST_CASE("psi from moments") {
  const auto psi = prodspec::psi_from_moments(point_mass_one(7), 8);
  CHECK(psi.kind == TransformKind::psi);
  CHECK(psi.series[0] == Rational(0));
  for (std::size_t i = 1; i < 8; ++i) CHECK(psi.series[i] == Rational(1));

  const auto mp = prodspec::fuss_catalan_sequence(1, 7);
  const auto psi_mp = prodspec::psi_from_moments(mp, 8);
  CHECK(psi_mp.series[1] == Rational(1));
  CHECK(psi_mp.series[2] == Rational(2));
  CHECK(psi_mp.series[3] == Rational(5));
  CHECK(psi_mp.series[4] == Rational(14));

  MomentSequence not_prob;
  not_prob.values = {Rational(2), Rational(1)};
  CHECK_THROWS_AS(prodspec::psi_from_moments(not_prob, 2), std::invalid_argument);
}

TEST_CASE("s transform of the catalog laws") {
  // point mass at 1 has S = 1
  const auto s_one = prodspec::s_from_moments(point_mass_one(9), 10);
  CHECK(s_one.series[0] == Rational(1));
  for (std::size_t i = 1; i < 9; ++i) CHECK(s_one.series[i] == Rational(0));

  // squared-singular-value law of one Gaussian factor: S = 1/(1+z)
  const auto s_mp = prodspec::s_from_moments(prodspec::fuss_catalan_sequence(1, 9), 10);
  for (std::size_t i = 0; i < 9; ++i)
    CHECK(s_mp.series[i] == Rational((i % 2 == 0) ? 1 : -1));

  // arcsine law: S = (z+2)/(z+1) = 2 - z + z^2 - ...
  const auto s_arc = prodspec::s_from_moments(
      prodspec::raney_sequence(Rational(1), Rational(1, 2), 9), 10);
  CHECK(s_arc.series[0] == Rational(2));
  for (std::size_t i = 1; i < 9; ++i)
    CHECK(s_arc.series[i] == Rational((i % 2 == 0) ? 1 : -1));

  // first moment zero leaves the transform undefined
  MomentSequence centered;
  centered.values = {Rational(1), Rational(0), Rational(1)};
  CHECK_THROWS_AS(prodspec::s_from_moments(centered, 3), std::invalid_argument);
}

TEST_CASE("moments from s") {
  prodspec::TransformSeries s{TransformKind::s_transform, prodspec::Series(10)};
  s.series[0] = 1;
  const auto delta = prodspec::moments_from_s(s, 10);
  for (const auto& v : delta.values) CHECK(v == Rational(1));

  // S = (z+2)/(z+1) with one Gaussian S-factor gives the (2,1) mass-1 law
  prodspec::Series num(12), den(12);
  num[0] = 2;
  num[1] = 1;
  den[0] = 1;
  den[1] = 1;
  prodspec::Series s21 = series_mul(num, series_recip(series_mul(den, den)));
  const auto m21 = prodspec::moments_from_s({TransformKind::s_transform, s21}, 12);
  CHECK(m21.values[0] == Rational(1));
  CHECK(m21.values[1] == Rational(1, 2));
  CHECK(m21.values[2] == Rational(5, 8));
  CHECK(m21.values[3] == Rational(1));
}

TEST_CASE("round trip s -> moments -> s") {
  for (int r = 1; r <= 3; ++r) {
    const auto m = prodspec::fuss_catalan_sequence(r, 11);
    const auto s = prodspec::s_from_moments(m, 12);
    const auto back = prodspec::moments_from_s(s, 12);
    for (std::size_t n = 0; n < 12; ++n) CHECK(back.values[n] == m.values[n]);
  }
}

TEST_CASE("free multiplication") {
  const auto fc1 = prodspec::fuss_catalan_sequence(1, 11);
  const auto fc2 = prodspec::free_multiply(fc1, fc1, 12);
  for (std::size_t n = 0; n < 12; ++n)
    CHECK(fc2.values[n] == prodspec::fuss_catalan(2, static_cast<int>(n)));

  // identity element
  const auto same = prodspec::free_multiply(fc1, point_mass_one(11), 12);
  for (std::size_t n = 0; n < 12; ++n) CHECK(same.values[n] == fc1.values[n]);

  // commutativity
  const auto arc = prodspec::raney_sequence(Rational(1), Rational(1, 2), 11);
  const auto ab = prodspec::free_multiply(fc1, arc, 12);
  const auto ba = prodspec::free_multiply(arc, fc1, 12);
  for (std::size_t n = 0; n < 12; ++n) CHECK(ab.values[n] == ba.values[n]);

  // one Gaussian and one truncation factor give the (2,1) law
  const prodspec::ModelParams p211{2, 1, Rational(1)};
  for (std::size_t n = 0; n < 12; ++n)
    CHECK(ab.values[n] == prodspec::moment_jacobi(p211, static_cast<int>(n)));
}

TEST_CASE("factorization report") {
  const auto rep21 = prodspec::verify_factorization(2, 1, 10);
  CHECK(rep21.all_ok);
  const auto rep30 = prodspec::verify_factorization(3, 0, 10);
  CHECK(rep30.all_ok);
  const auto rep42 = prodspec::verify_factorization(4, 2, 12);
  CHECK(rep42.all_ok);
  CHECK(rep42.coefficient_ok.size() == 12);
  CHECK_THROWS_AS(prodspec::verify_factorization(2, 2, 10), std::invalid_argument);
}

TEST_CASE("factor spec parsing") {
  const auto factors = prodspec::parse_factor_spec("fc:1,raney:1:1/2", 5);
  CHECK(factors.size() == 2);
  CHECK(factors[0].values[2] == Rational(2));
  CHECK(factors[1].values[2] == Rational(3, 8));
  const auto jac = prodspec::parse_factor_spec("jacobi:2:1", 4);
  CHECK(jac[0].values[2] == Rational(5, 8));
  CHECK_THROWS_AS(prodspec::parse_factor_spec("nope:3", 5), std::invalid_argument);
  CHECK_THROWS_AS(prodspec::parse_factor_spec("", 5), std::invalid_argument);
}

}  // TEST_SUITE
