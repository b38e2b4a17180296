#include "ftqc/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace ftqc {

namespace detail {

Ols ols(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("least squares needs at least 2 points");
    }
    const auto n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0) throw std::invalid_argument("least squares: degenerate abscissae");
    Ols fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0) {
        fit.r_squared = 1.0;  // constant series fit exactly by slope 0
    } else {
        double ss_res = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
            ss_res += r * r;
        }
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

}  // namespace detail

double ScalingFit::evaluate(double x) const {
    if (kind == FitKind::linear) return slope_or_rate * x + intercept_or_prefactor;
    return intercept_or_prefactor * std::exp(slope_or_rate * x);
}

nlohmann::json ScalingFit::to_json() const {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& [x, y] : points) pts.push_back({x, y});
    return {{"kind", kind == FitKind::linear ? "linear" : "exponential"},
            {kind == FitKind::linear ? "slope" : "rate", slope_or_rate},
            {kind == FitKind::linear ? "intercept" : "prefactor", intercept_or_prefactor},
            {"r_squared", r_squared},
            {"points", pts}};
}

ScalingFit fit_linear(const std::vector<std::pair<double, double>>& points) {
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [x, y] : points) {
        xs.push_back(x);
        ys.push_back(y);
    }
    const auto f = detail::ols(xs, ys);
    ScalingFit fit;
    fit.kind = FitKind::linear;
    fit.slope_or_rate = f.slope;
    fit.intercept_or_prefactor = f.intercept;
    fit.r_squared = f.r_squared;
    fit.points = points;
    return fit;
}

ScalingFit fit_exponential(const std::vector<std::pair<double, double>>& points) {
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (!(y > 0)) {
            throw std::invalid_argument("fit_exponential: all values must be positive");
        }
        xs.push_back(x);
        ys.push_back(std::log(y));
    }
    const auto f = detail::ols(xs, ys);
    ScalingFit fit;
    fit.kind = FitKind::exponential;
    fit.slope_or_rate = f.slope;
    fit.intercept_or_prefactor = std::exp(f.intercept);
    fit.r_squared = f.r_squared;
    fit.points = points;
    return fit;
}

}  // namespace ftqc
