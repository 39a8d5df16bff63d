#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "prodspec/freeconv.hpp"
#include "prodspec/report.hpp"
#include "prodspec/rmt.hpp"
#include "prodspec/spectral.hpp"
#include "prodspec/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using prodspec::ModelParams;
using prodspec::Rational;

struct CommonOpts {
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "Write output to a file instead of stdout");
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + opts.out + "'");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json moment_rows(const std::vector<Rational>& values) {
  json rows = json::array();
  for (std::size_t n = 0; n < values.size(); ++n)
    rows.push_back({{"n", n}, {"exact", values[n].str()}, {"value", values[n].to_double()}});
  return rows;
}

std::string moments_csv(const std::vector<Rational>& values) {
  std::string csv = "n,exact,float\n";
  for (std::size_t n = 0; n < values.size(); ++n)
    csv += std::to_string(n) + "," + values[n].str() + "," +
           prodspec::format_double(values[n].to_double()) + "\n";
  return csv;
}

int run_moments(int r, int s, const std::string& a, int n_max, const CommonOpts& opts) {
  const ModelParams params{r, s, Rational::from_string(a)};
  const auto seq = prodspec::jacobi_moment_sequence(params, n_max);
  if (opts.format == "csv") {
    emit(opts, moments_csv(seq.values));
  } else {
    json p{{"r", r}, {"s", s}, {"a", params.a.str()}, {"n_max", n_max}};
    emit(opts, dump(prodspec::make_envelope("moments", std::move(p),
                                            json{{"moments", moment_rows(seq.values)}})));
  }
  return 0;
}

int run_endpoints(int r, int s, const std::string& a, const CommonOpts& opts) {
  const ModelParams params{r, s, Rational::from_string(a)};
  const auto d = prodspec::endpoints(params);
  if (opts.format == "csv") {
    std::string csv = "quantity,value\n";
    csv += "w_star," + prodspec::format_double(d.w_star) + "\n";
    csv += "x_star," + prodspec::format_double(d.x_star) + "\n";
    csv += "w_tilde," + prodspec::format_double(d.w_tilde) + "\n";
    csv += "x_tilde," + (d.x_tilde ? prodspec::format_double(*d.x_tilde) : std::string("none")) +
           "\n";
    emit(opts, csv);
  } else {
    json results{{"w_star", d.w_star},
                 {"x_star", d.x_star},
                 {"w_tilde", d.w_tilde},
                 {"x_tilde", d.x_tilde ? json(*d.x_tilde) : json(nullptr)}};
    json p{{"r", r}, {"s", s}, {"a", params.a.str()}};
    emit(opts, dump(prodspec::make_envelope("endpoints", std::move(p), std::move(results))));
  }
  return 0;
}

int run_density(int r, int s, const std::string& a, int points, const CommonOpts& opts) {
  if (points < 2) throw std::invalid_argument("density: points must be >= 2");
  const ModelParams params{r, s, Rational::from_string(a)};
  const prodspec::SpectralModel model(params);
  const auto grid = model.density_grid(points);
  if (opts.format == "csv") {
    std::string csv = "x,rho\n";
    for (const auto& smp : grid)
      csv += prodspec::format_double(smp.x) + "," + prodspec::format_double(smp.rho) + "\n";
    emit(opts, csv);
  } else {
    json samples = json::array();
    for (const auto& smp : grid) samples.push_back({{"x", smp.x}, {"rho", smp.rho}});
    json results{{"x_star", model.support().x_star}, {"samples", std::move(samples)}};
    json p{{"r", r}, {"s", s}, {"a", params.a.str()}, {"points", points}};
    emit(opts, dump(prodspec::make_envelope("density", std::move(p), std::move(results))));
  }
  return 0;
}

int run_convolve(const std::string& factors, int order, const CommonOpts& opts) {
  if (order < 2) throw std::invalid_argument("convolve: order must be >= 2");
  const auto parsed = prodspec::parse_factor_spec(factors, static_cast<std::size_t>(order));
  prodspec::MomentSequence acc = parsed[0];
  for (std::size_t i = 1; i < parsed.size(); ++i)
    acc = prodspec::free_multiply(acc, parsed[i], static_cast<std::size_t>(order));
  if (opts.format == "csv") {
    emit(opts, moments_csv(acc.values));
  } else {
    json labels = json::array();
    for (const auto& f : parsed) labels.push_back(f.label);
    json p{{"factors", factors}, {"order", order}};
    json results{{"factor_labels", std::move(labels)}, {"moments", moment_rows(acc.values)}};
    emit(opts, dump(prodspec::make_envelope("convolve", std::move(p), std::move(results))));
  }
  return 0;
}

int run_simulate(int n, int r, int s, const std::vector<int>& nu, int trials,
                 std::uint64_t seed, int bins, int k_max, const std::string& svg_path,
                 const CommonOpts& opts) {
  if (opts.format == "csv") throw std::invalid_argument("simulate: report is json only");
  if (bins < 1) throw std::invalid_argument("simulate: bins must be >= 1");
  auto config = prodspec::EnsembleConfig::with_defaults(n, r, s, nu, trials, seed);
  config.k_max = k_max;
  const auto report = prodspec::run_experiment(config);
  emit(opts, dump(prodspec::comparison_report_json(report, bins)));
  if (!svg_path.empty()) {
    const prodspec::SpectralModel model(ModelParams{r, s, Rational(1)});
    const std::string svg = prodspec::svg_spectrum_overlay(
        report.pooled_eigenvalues, bins, 1.1 * report.x_star, model.density_grid(160));
    std::ofstream f(svg_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open svg file '" + svg_path + "'");
    f << svg;
  }
  return 0;
}

int run_verify(const std::string& suite, const CommonOpts& opts) {
  const auto res = prodspec::verify_suite(suite);
  if (opts.format == "csv") {
    std::string csv = "name,pass,detail\n";
    for (const auto& c : res.checks)
      csv += c.name + "," + (c.pass ? "true" : "false") + "," + c.detail + "\n";
    emit(opts, csv);
  } else {
    json checks = json::array();
    for (const auto& c : res.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json results{{"all_pass", res.all_pass}, {"checks", std::move(checks)}};
    emit(opts,
         dump(prodspec::make_envelope("verify", json{{"suite", suite}}, std::move(results))));
  }
  std::size_t failed = 0;
  for (const auto& c : res.checks)
    if (!c.pass) ++failed;
  std::cerr << "verify " << suite << ": " << (res.checks.size() - failed) << "/"
            << res.checks.size() << " checks passed\n";
  return res.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectral toolkit for products of Gaussian and truncated-unitary random matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", prodspec::version());

  int r = 1, s = 0;
  std::string a = "1";
  int n_max = 10;
  int points = 100;
  std::string factors;
  int order = 16;
  int n = 100, trials = 20, bins = 60, k_max = 4;
  std::uint64_t seed = 0;
  std::vector<int> nu;
  std::string svg_path;
  std::string suite = "all";
  CommonOpts mo, eo, deo, co, so, vo;

  auto* cm = app.add_subcommand("moments", "Exact moments of the product law");
  cm->add_option("-r", r, "Total number of factors")->required();
  cm->add_option("-s", s, "Number of truncated-unitary factors")->required();
  cm->add_option("-a", a, "Total mass, rational 'p/q' or terminating decimal")
      ->capture_default_str();
  cm->add_option("-n,--n-max", n_max, "Largest moment order")->capture_default_str();
  add_common(cm, mo);

  auto* ce = app.add_subcommand("endpoints", "Support endpoints and critical points");
  ce->add_option("-r", r)->required();
  ce->add_option("-s", s)->required();
  ce->add_option("-a", a)->capture_default_str();
  add_common(ce, eo);

  auto* cd = app.add_subcommand("density", "Density on an interior grid");
  cd->add_option("-r", r)->required();
  cd->add_option("-s", s)->required();
  cd->add_option("-a", a)->capture_default_str();
  cd->add_option("--points", points, "Interior grid size")->capture_default_str();
  add_common(cd, deo);

  auto* cc = app.add_subcommand("convolve", "Free multiplicative convolution of catalog laws");
  cc->add_option("--factors", factors,
                 "Comma list of fc:<r> | raney:<alpha>:<beta> | jacobi:<r>:<s>")
      ->required();
  cc->add_option("--order", order, "Number of moments")->capture_default_str();
  add_common(cc, co);

  auto* cs = app.add_subcommand("simulate", "Monte Carlo spectra of the matrix product");
  cs->add_option("-n", n, "Base matrix dimension")->required();
  cs->add_option("-r", r)->required();
  cs->add_option("-s", s)->required();
  cs->add_option("--nu", nu, "Dimension offsets nu_0..nu_r (default all zero)")->delimiter(',');
  cs->add_option("--trials", trials, "Number of replicates")->capture_default_str();
  cs->add_option("--seed", seed, "Master seed")->capture_default_str();
  cs->add_option("--bins", bins, "Histogram bins for the SVG")->capture_default_str();
  cs->add_option("--kmax", k_max, "Compare empirical moments up to this order")
      ->capture_default_str();
  cs->add_option("--svg", svg_path, "Also write a histogram/density overlay SVG");
  add_common(cs, so);

  auto* cv = app.add_subcommand("verify", "Run the built-in verification suites");
  cv->add_option("suite", suite, "oracles | positivity | quadrature | factorization | all")
      ->check(CLI::IsMember({"oracles", "positivity", "quadrature", "factorization", "all"}));
  add_common(cv, vo);

  try {
    app.parse(argc, argv);
    if (cm->parsed()) return run_moments(r, s, a, n_max, mo);
    if (ce->parsed()) return run_endpoints(r, s, a, eo);
    if (cd->parsed()) return run_density(r, s, a, points, deo);
    if (cc->parsed()) return run_convolve(factors, order, co);
    if (cs->parsed()) return run_simulate(n, r, s, nu, trials, seed, bins, k_max, svg_path, so);
    if (cv->parsed()) return run_verify(suite, vo);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
