#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

#include "prodspec/rmt.hpp"
#include "prodspec/spectral.hpp"

namespace prodspec {

inline const char* version() { return "0.1.0"; }

// All command outputs share one envelope: command name, echoed parameters,
// command-specific results, toolkit version. Exact rationals travel as "p/q"
// strings so the payload round-trips losslessly.
nlohmann::ordered_json make_envelope(const std::string& command,
                                     nlohmann::ordered_json params,
                                     nlohmann::ordered_json results);

std::string format_double(double v);  // %.17g

nlohmann::ordered_json comparison_report_json(const ComparisonReport& report, int bins);

// Deterministic SVG: 800x500 view box, histogram rectangles of the pooled
// eigenvalues over [0, x_max], then the theoretical density polyline.
std::string svg_spectrum_overlay(const std::vector<double>& eigenvalues, int bins,
                                 double x_max,
                                 const std::vector<DensitySample>& curve);

}  // namespace prodspec
