#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftqc/fit.hpp"
#include "ftqc/gsc.hpp"
#include "ftqc/presets.hpp"

namespace ftqc {

struct ResourceEstimate {
    double runtime_seconds = 0.0;
    double runtime_days = 0.0;
    count_t physical_qubits_basic = 0;
    std::optional<count_t> physical_qubits_detailed;
    count_t code_distance = 0;
    CycleAllocation cycles;
    FeatureFlags flags;
    // Per-layer presets and intermediates, embedded verbatim in reports so
    // results are reproducible from the report alone.
    nlohmann::json provenance;
};

nlohmann::json estimate_to_json(const ResourceEstimate& e);

// Fixed pipeline: profile variant (dfthc) -> reduction (zx) -> GSC
// expansion/cycles -> QEC distance + factory (msc) -> layout multiplier
// (a2a) -> hardware counting -> runtime.
ResourceEstimate estimate(const Scenario& scenario, const PresetDirectory& presets);

struct AblationRow {
    std::string scenario;
    ResourceEstimate estimate;
};

// Rows sorted by runtime descending; ties break by fewer enabled flags
// first, then lexical flag order.
std::vector<AblationRow> ablation_table(const std::vector<Scenario>& scenarios,
                                        const PresetDirectory& presets);

// Predictive grid: one shared scenario evaluated under each flag set.
std::vector<AblationRow> ablation_grid(const Scenario& base,
                                       const std::vector<FeatureFlags>& flag_sets,
                                       const PresetDirectory& presets);

struct FlagRatio {
    std::string from;  // scenario with the flag disabled
    std::string to;    // same scenario with the flag enabled
    std::string flag;
    double runtime_ratio = 1.0;
};

// Ratios for every pair of rows whose flag sets differ in exactly one
// enabled flag.
std::vector<FlagRatio> single_flag_ratios(const std::vector<AblationRow>& rows);

}  // namespace ftqc
