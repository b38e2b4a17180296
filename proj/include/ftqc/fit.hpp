#pragma once

#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftqc/numeric.hpp"

namespace ftqc {

enum class FitKind { linear, exponential };

struct ScalingFit {
    FitKind kind = FitKind::linear;
    double slope_or_rate = 0.0;          // per-orbital
    double intercept_or_prefactor = 0.0; // days
    double r_squared = 1.0;
    std::vector<std::pair<double, double>> points;

    double evaluate(double x) const;
    nlohmann::json to_json() const;
};

// Ordinary least squares on (x, y).
ScalingFit fit_linear(const std::vector<std::pair<double, double>>& points);

// Least squares on (x, ln y): returns rate = slope and
// prefactor = exp(intercept). Requires y > 0.
ScalingFit fit_exponential(const std::vector<std::pair<double, double>>& points);

namespace detail {
struct Ols {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};
Ols ols(const std::vector<double>& xs, const std::vector<double>& ys);
}  // namespace detail

}  // namespace ftqc
