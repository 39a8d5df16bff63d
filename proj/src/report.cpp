#include "prodspec/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace prodspec {

using json = nlohmann::ordered_json;

json make_envelope(const std::string& command, json params, json results) {
  json env;
  env["command"] = command;
  env["version"] = version();
  env["params"] = std::move(params);
  env["results"] = std::move(results);
  return env;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json comparison_report_json(const ComparisonReport& report, int bins) {
  const auto& c = report.config;
  json params;
  params["n"] = c.n;
  params["r"] = c.r;
  params["s"] = c.s;
  params["nu"] = c.nu;
  json lvals = json::array();
  for (int j = 1; j <= c.s; ++j) lvals.push_back(c.l_of(j));
  params["l"] = lvals;
  params["trials"] = c.trials;
  params["seed"] = c.seed;
  params["k_max"] = c.k_max;
  if (bins > 0) params["bins"] = bins;

  json results;
  json emp = json::array();
  for (const auto& m : report.empirical_moments)
    emp.push_back({{"k", m.k}, {"mean", m.mean}, {"std_error", m.std_error}});
  results["empirical_moments"] = std::move(emp);

  json theo = json::array();
  for (std::size_t i = 0; i < report.theoretical_exact.size(); ++i)
    theo.push_back({{"k", static_cast<int>(i) + 1},
                    {"exact", report.theoretical_exact[i].str()},
                    {"value", report.theoretical_moments[i]}});
  results["theoretical_moments"] = std::move(theo);

  json verdicts = json::array();
  for (const auto& v : report.verdicts)
    verdicts.push_back({{"k", v.k}, {"z", v.z}, {"pass", v.pass}});
  results["verdicts"] = std::move(verdicts);

  results["max_eigenvalue"] = report.max_eigenvalue;
  results["x_star"] = report.x_star;
  results["edge_ratio"] = report.max_eigenvalue / report.x_star;
  results["all_pass"] = report.all_pass;

  return make_envelope("simulate", std::move(params), std::move(results));
}

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string svg_spectrum_overlay(const std::vector<double>& eigenvalues, int bins,
                                 double x_max, const std::vector<DensitySample>& curve) {
  const double width = 800, height = 500;
  const double left = 60, right = 780, top = 20, bottom = 460;

  std::vector<double> hist(static_cast<std::size_t>(bins), 0.0);
  const double bin_width = x_max / bins;
  std::size_t total = 0;
  for (double ev : eigenvalues) {
    if (ev < 0.0 || ev >= x_max) continue;
    hist[static_cast<std::size_t>(ev / bin_width)] += 1.0;
    ++total;
  }
  const double norm = (total > 0) ? 1.0 / (static_cast<double>(eigenvalues.size()) * bin_width) : 0.0;
  for (double& h : hist) h *= norm;

  double y_max = 0.0;
  for (double h : hist) y_max = std::max(y_max, h);
  if (y_max <= 0.0) y_max = 1.0;
  y_max *= 1.15;

  const auto sx = [&](double x) { return left + (right - left) * x / x_max; };
  const auto sy = [&](double y) { return bottom - (bottom - top) * std::min(y, y_max) / y_max; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + px(width) + " " +
         px(height) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + px(width) + "\" height=\"" + px(height) +
         "\" fill=\"white\"/>\n";

  for (int b = 0; b < bins; ++b) {
    const double h = hist[static_cast<std::size_t>(b)];
    if (h <= 0.0) continue;
    const double x0 = sx(b * bin_width);
    const double x1 = sx((b + 1) * bin_width);
    const double y0 = sy(h);
    svg += "<rect x=\"" + px(x0) + "\" y=\"" + px(y0) + "\" width=\"" + px(x1 - x0) +
           "\" height=\"" + px(bottom - y0) + "\" fill=\"#9ecae1\" stroke=\"#6baed6\"/>\n";
  }

  if (!curve.empty()) {
    std::string pts;
    for (const auto& sample : curve) {
      if (!pts.empty()) pts += " ";
      pts += px(sx(sample.x)) + "," + px(sy(sample.rho));
    }
    svg += "<polyline points=\"" + pts +
           "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
  }

  svg += "<line x1=\"" + px(left) + "\" y1=\"" + px(bottom) + "\" x2=\"" + px(right) +
         "\" y2=\"" + px(bottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + px(left) + "\" y1=\"" + px(top) + "\" x2=\"" + px(left) +
         "\" y2=\"" + px(bottom) + "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x_max * i / 4.0;
    const double xp = sx(xv);
    svg += "<line x1=\"" + px(xp) + "\" y1=\"" + px(bottom) + "\" x2=\"" + px(xp) +
           "\" y2=\"" + px(bottom + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + px(xp) + "\" y=\"" + px(bottom + 20) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + tick_label(xv) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace prodspec
