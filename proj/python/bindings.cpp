#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "prodspec/freeconv.hpp"
#include "prodspec/report.hpp"
#include "prodspec/rmt.hpp"
#include "prodspec/spectral.hpp"
#include "prodspec/verify.hpp"

namespace py = pybind11;

using prodspec::ModelParams;
using prodspec::Rational;

namespace {

ModelParams make_params(int r, int s, const std::string& a) {
  return ModelParams{r, s, Rational::from_string(a)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact moments, spectral densities and Monte Carlo spectra for products of "
            "Gaussian and truncated-unitary random matrices";
  m.attr("__version__") = prodspec::version();

  m.def(
      "moments",
      [](int r, int s, const std::string& a, int n_max) {
        const auto seq = prodspec::jacobi_moment_sequence(make_params(r, s, a), n_max);
        std::vector<std::pair<std::string, double>> out;
        out.reserve(seq.values.size());
        for (const auto& v : seq.values) out.emplace_back(v.str(), v.to_double());
        return out;
      },
      py::arg("r"), py::arg("s"), py::arg("a") = "1", py::arg("n_max") = 10,
      "Moments 0..n_max of the product law as (exact 'p/q', float) pairs");

  m.def(
      "moment_routes",
      [](int r, int s, const std::string& a, int n) {
        const ModelParams p = make_params(r, s, a);
        const auto series = prodspec::moment_series(p, std::max(1, n));
        return py::make_tuple(prodspec::moment_jacobi(p, n).str(),
                              n >= 1 ? prodspec::moment_derivative(p, n).str()
                                     : prodspec::moment_jacobi(p, n).str(),
                              series.values[static_cast<std::size_t>(n)].str());
      },
      py::arg("r"), py::arg("s"), py::arg("a"), py::arg("n"),
      "The same moment from the three independent routes (closed form, "
      "derivative form, series coefficient)");

  m.def(
      "fuss_catalan",
      [](int r, int n) { return prodspec::fuss_catalan(r, n).str(); },
      py::arg("r"), py::arg("n"));

  m.def(
      "raney",
      [](const std::string& alpha, const std::string& beta, int n) {
        return prodspec::raney(Rational::from_string(alpha), Rational::from_string(beta), n)
            .str();
      },
      py::arg("alpha"), py::arg("beta"), py::arg("n"));

  m.def(
      "endpoints",
      [](int r, int s, const std::string& a) {
        const auto d = prodspec::endpoints(make_params(r, s, a));
        py::dict out;
        out["w_star"] = d.w_star;
        out["x_star"] = d.x_star;
        out["w_tilde"] = d.w_tilde;
        out["x_tilde"] = d.x_tilde ? py::object(py::float_(*d.x_tilde)) : py::none();
        return out;
      },
      py::arg("r"), py::arg("s"), py::arg("a") = "1");

  m.def(
      "branch_value",
      [](int r, int s, const std::string& a, std::complex<double> x) {
        return prodspec::branch_at(make_params(r, s, a), x).w;
      },
      py::arg("r"), py::arg("s"), py::arg("a"), py::arg("x"),
      "Physical branch of the algebraic equation, continued from infinity");

  m.def(
      "density",
      [](int r, int s, const std::string& a, double x) {
        return prodspec::density(make_params(r, s, a), x).rho;
      },
      py::arg("r"), py::arg("s"), py::arg("a"), py::arg("x"));

  m.def(
      "density_grid",
      [](int r, int s, const std::string& a, int points) {
        const prodspec::SpectralModel model(make_params(r, s, a));
        std::vector<std::pair<double, double>> out;
        for (const auto& smp : model.density_grid(points)) out.emplace_back(smp.x, smp.rho);
        return out;
      },
      py::arg("r"), py::arg("s"), py::arg("a") = "1", py::arg("points") = 100);

  m.def(
      "quadrature_moments",
      [](int r, int s, const std::string& a, int n_max) {
        return prodspec::SpectralModel(make_params(r, s, a)).quadrature_moments(n_max);
      },
      py::arg("r"), py::arg("s"), py::arg("a"), py::arg("n_max"),
      "Moments 0..n_max of the density by tanh-sinh quadrature");

  m.def(
      "convolve",
      [](const std::string& factors, int order) {
        const auto parsed =
            prodspec::parse_factor_spec(factors, static_cast<std::size_t>(order));
        prodspec::MomentSequence acc = parsed[0];
        for (std::size_t i = 1; i < parsed.size(); ++i)
          acc = prodspec::free_multiply(acc, parsed[i], static_cast<std::size_t>(order));
        std::vector<std::string> out;
        for (const auto& v : acc.values) out.push_back(v.str());
        return out;
      },
      py::arg("factors"), py::arg("order") = 16,
      "Moments of the free multiplicative convolution of catalog laws, exact");

  m.def(
      "verify_factorization",
      [](int r, int s, int order) {
        return prodspec::verify_factorization(r, s, static_cast<std::size_t>(order)).all_ok;
      },
      py::arg("r"), py::arg("s"), py::arg("order") = 16);

  m.def(
      "simulate_json",
      [](int n, int r, int s, std::vector<int> nu, int trials, std::uint64_t seed, int k_max) {
        auto config = prodspec::EnsembleConfig::with_defaults(n, r, s, std::move(nu), trials,
                                                              seed);
        config.k_max = k_max;
        const auto report = prodspec::run_experiment(config);
        return prodspec::comparison_report_json(report, 0).dump();
      },
      py::arg("n"), py::arg("r"), py::arg("s"), py::arg("nu") = std::vector<int>{},
      py::arg("trials") = 20, py::arg("seed") = 0, py::arg("k_max") = 4,
      "Monte Carlo comparison report as a JSON string");

  m.def(
      "sample_eigenvalues",
      [](int n, int r, int s, std::vector<int> nu, std::uint64_t seed, int replicate) {
        auto config =
            prodspec::EnsembleConfig::with_defaults(n, r, s, std::move(nu), 1, seed);
        return prodspec::sample_spectrum(config, replicate).eigenvalues;
      },
      py::arg("n"), py::arg("r"), py::arg("s"), py::arg("nu") = std::vector<int>{},
      py::arg("seed") = 0, py::arg("replicate") = 0,
      "Squared singular values of one sampled product, rescaled by n^{r-s}");

  m.def(
      "verify",
      [](const std::string& suite) {
        const auto res = prodspec::verify_suite(suite);
        std::vector<std::tuple<std::string, bool, std::string>> checks;
        for (const auto& c : res.checks) checks.emplace_back(c.name, c.pass, c.detail);
        return py::make_tuple(res.all_pass, checks);
      },
      py::arg("suite") = "all");
}
