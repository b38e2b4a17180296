#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftqc/numeric.hpp"
#include "ftqc/profile.hpp"

namespace ftqc {

enum class AlgorithmVariant { DFTHC_BLISS_SA, DF };

AlgorithmVariant algorithm_variant_from_name(const std::string& name);
const char* algorithm_variant_name(AlgorithmVariant v);

// Algorithm-layer inputs. Energies are in Hartree throughout.
struct AlgorithmSpec {
    count_t n_orbitals = 0;
    AlgorithmVariant variant = AlgorithmVariant::DFTHC_BLISS_SA;
    std::optional<double> lambda_1norm;  // Hamiltonian coefficient 1-norm, Ha
    double epsilon_target = 1e-3;        // target energy error, Ha
    double overlap_gamma = 1.0;          // squared initial-state overlap, (0,1]
    count_t rotation_t_cost = 30;        // T gates per arbitrary rotation

    void validate() const;
};

AlgorithmSpec algorithm_spec_from_json(const nlohmann::json& doc);

// Phase-estimation repetition count ceil(pi*lambda/(2*epsilon)). Repetitions
// are discrete circuit executions; the ceiling keeps the accuracy contract.
count_t repetitions(double lambda_1norm, double epsilon);

// Rotation-aware total T count:
//   (t_per_block + rotations_per_block * rotation_t_cost) * block_encodings
// Block encodings come from the profile, or from repetitions(lambda, eps)
// when the spec carries a 1-norm.
count_t total_t(const LogicalCircuitProfile& profile, const AlgorithmSpec& spec);

// Ground-state-preparation overhead: runtime scales by 1/gamma.
double apply_overlap(double runtime_days, double gamma);

// Least-squares slope of ln(t) vs ln(n); diagnostic for empirical scaling.
double fit_power_exponent(const std::vector<std::pair<double, double>>& series);

}  // namespace ftqc
