#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "ftqc/numeric.hpp"
#include "ftqc/profile.hpp"

namespace ftqc {

// Default expansion from algorithmic to compiled logical qubits: 4232 ELUs
// hosting 994 algorithmic qubits.
inline constexpr double kDefaultExpansionRatio = 4232.0 / 994.0;

// Graph-state-compilation hyperparameters. Carried for provenance and
// reporting; the scalar cost model below does not consume them.
struct GSCHyperparameters {
    count_t teleportation_threshold = 4;
    count_t min_neighbor_degree = 4;
    count_t max_neighbors_to_search = 1000000;
    bool use_fully_optimized_dag = true;
    count_t teleportation_distance = 2;

    void validate() const;
    static GSCHyperparameters from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;
};

struct CompiledLayout {
    count_t compiled_logical_qubits = 0;
    count_t data_elus = 0;     // one compiled logical qubit per data ELU
    count_t factory_elus = 0;  // set by the estimator from the preset
    double expansion_ratio = 1.0;
};

// Scalar cost model for the compiled schedule. Per-T and per-magic-state
// cycle costs admit non-integer values: measured calibrations imply
// parallel consumption (e.g. 1.97e7 cycles for 8.35e7 T gates).
struct CycleModelParameters {
    double cycles_per_t_meas = 1.0;
    double cycles_per_magic_state = 1.0;
    count_t factory_count = 1;
    double prep_cycles_per_compiled_qubit = 1.0;
    double combined_fraction = 0.0;
};

struct CycleAllocation {
    count_t t_measurement_cycles = 0;
    count_t distillation_cycles = 0;
    count_t graph_prep_cycles = 0;
    count_t combined_prep_distill_cycles = 0;
    count_t total_cycles = 0;  // exact sum of the four components
};

CompiledLayout compile_expansion(const LogicalCircuitProfile& profile,
                                 const GSCHyperparameters& params,
                                 std::optional<double> expansion_ratio = std::nullopt);

CycleAllocation allocate_cycles(count_t t_total, const CompiledLayout& layout,
                                count_t code_distance, const CycleModelParameters& model);

// Calibration-replay mode: measured component cycles are taken as-is and
// summed exactly.
CycleAllocation replay_cycles(count_t t_measurement, count_t distillation, count_t graph_prep,
                              count_t combined_prep_distill);

}  // namespace ftqc
