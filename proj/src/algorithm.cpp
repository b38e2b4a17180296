#include "ftqc/algorithm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ftqc {

AlgorithmVariant algorithm_variant_from_name(const std::string& name) {
    if (name == "dfthc" || name == "DFTHC_BLISS_SA" || name == "dfthc_bliss_sa") {
        return AlgorithmVariant::DFTHC_BLISS_SA;
    }
    if (name == "df" || name == "DF") return AlgorithmVariant::DF;
    throw std::invalid_argument("unknown algorithm variant '" + name + "'");
}

const char* algorithm_variant_name(AlgorithmVariant v) {
    return v == AlgorithmVariant::DFTHC_BLISS_SA ? "dfthc_bliss_sa" : "df";
}

void AlgorithmSpec::validate() const {
    if (!(epsilon_target > 0)) throw std::invalid_argument("epsilon_target must be > 0");
    if (!(overlap_gamma > 0) || overlap_gamma > 1) {
        throw std::invalid_argument("overlap_gamma must lie in (0,1]");
    }
    if (lambda_1norm && !(*lambda_1norm > 0)) {
        throw std::invalid_argument("lambda_1norm must be > 0 when present");
    }
}

AlgorithmSpec algorithm_spec_from_json(const nlohmann::json& doc) {
    AlgorithmSpec spec;
    if (doc.contains("n_orbitals")) spec.n_orbitals = doc.at("n_orbitals").get<count_t>();
    if (doc.contains("variant")) {
        spec.variant = algorithm_variant_from_name(doc.at("variant").get<std::string>());
    }
    if (doc.contains("lambda_1norm")) spec.lambda_1norm = doc.at("lambda_1norm").get<double>();
    if (doc.contains("epsilon_target")) spec.epsilon_target = doc.at("epsilon_target").get<double>();
    if (doc.contains("overlap_gamma")) spec.overlap_gamma = doc.at("overlap_gamma").get<double>();
    if (doc.contains("rotation_t_cost")) {
        spec.rotation_t_cost = doc.at("rotation_t_cost").get<count_t>();
    }
    spec.validate();
    return spec;
}

count_t repetitions(double lambda_1norm, double epsilon) {
    if (!(lambda_1norm > 0)) throw std::domain_error("repetitions: lambda must be > 0");
    if (!(epsilon > 0)) throw std::domain_error("repetitions: epsilon must be > 0");
    return ceil_count(std::numbers::pi * lambda_1norm / (2.0 * epsilon));
}

count_t total_t(const LogicalCircuitProfile& profile, const AlgorithmSpec& spec) {
    profile.validate();
    count_t blocks = profile.block_encodings;
    if (spec.lambda_1norm) {
        blocks = repetitions(*spec.lambda_1norm, spec.epsilon_target);
    }
    if (blocks == 0) {
        throw std::invalid_argument(
            "total_t: block_encodings unset and no lambda_1norm to derive repetitions");
    }
    const count_t per_block = checked_add(
        profile.t_per_block_encoding,
        checked_mul(profile.rotation_count_per_block, spec.rotation_t_cost));
    return checked_mul(per_block, blocks);
}

double apply_overlap(double runtime_days, double gamma) {
    if (!(gamma > 0) || gamma > 1) throw std::domain_error("apply_overlap: gamma must lie in (0,1]");
    return runtime_days / gamma;
}

double fit_power_exponent(const std::vector<std::pair<double, double>>& series) {
    if (series.size() < 2) {
        throw std::invalid_argument("fit_power_exponent: need at least 2 points");
    }
    double sx = 0, sy = 0;
    for (const auto& [n, t] : series) {
        if (!(n > 0) || !(t > 0)) {
            throw std::invalid_argument("fit_power_exponent: points must be positive");
        }
        sx += std::log(n);
        sy += std::log(t);
    }
    const double mx = sx / static_cast<double>(series.size());
    const double my = sy / static_cast<double>(series.size());
    double sxx = 0, sxy = 0;
    for (const auto& [n, t] : series) {
        const double dx = std::log(n) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(t) - my);
    }
    if (sxx == 0) throw std::invalid_argument("fit_power_exponent: degenerate abscissae");
    return sxy / sxx;
}

}  // namespace ftqc
