#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "ftqc/algorithm.hpp"
#include "ftqc/gsc.hpp"
#include "ftqc/hardware.hpp"
#include "ftqc/profile.hpp"
#include "ftqc/transform.hpp"

namespace ftqc {

// Environment variable consulted when no --preset-dir flag is given.
inline constexpr const char* kPresetDirEnv = "FTQC_PRESET_DIR";

struct HardwarePreset {
    HardwareModel model;
    // Fitted communication-ion demand (raw_per_refined is a purification
    // ratio the source work leaves unquantified).
    double refined_pairs_per_scc = 0.0;
    double raw_per_refined = 1.0;
    double confidence = 0.99;
    nlohmann::json provenance;
};

struct CalibrationPreset {
    std::string name;
    double expansion_ratio = kDefaultExpansionRatio;
    count_t factory_count_cultivation = 1;
    count_t factory_count_distillation = 1;

    // Scalar cycle model (used when replay is false).
    double cycles_per_t_meas = 1.0;
    double cycles_per_magic_state_cultivation = 1.0;
    double cycles_per_magic_state_distillation = 1.0;
    double prep_cycles_per_compiled_qubit = 1.0;
    double combined_fraction = 0.0;

    // Calibration-replay mode: measured component cycles taken verbatim.
    bool replay = false;
    count_t replay_t_measurement = 0;
    count_t replay_distillation = 0;
    count_t replay_graph_prep = 0;
    count_t replay_combined = 0;

    // QEC inputs. logical_volume == 0 derives the volume as
    // algorithm_logical_qubits * t_total.
    double logical_volume = 0.0;
    double failure_budget = 1e-2;
    double prefactor_A = 0.1;
    FactoryDefaults factory_defaults;

    // Un-tuned graph-state preparation settings cost a flat runtime factor;
    // 1.0 for the optimized hyperparameters.
    double naive_gsc_multiplier = 1.0;

    GSCHyperparameters gsc;
    nlohmann::json provenance;
};

HardwarePreset hardware_preset_from_json(const nlohmann::json& doc);
CalibrationPreset calibration_preset_from_json(const nlohmann::json& doc);

struct FeatureFlags {
    bool dfthc = true;
    bool zx = true;
    bool a2a = true;
    bool msc = true;

    bool operator==(const FeatureFlags&) const = default;
    int enabled_count() const;
    std::string to_string() const;  // e.g. "dfthc=1,zx=0,a2a=1,msc=1"
    static FeatureFlags from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;
};

struct Scenario {
    std::string name;
    AlgorithmSpec algorithm;
    LogicalCircuitProfile profile;                   // DFTHC variant
    std::optional<LogicalCircuitProfile> profile_df; // explicit-circuit variant
    FeatureFlags flags;
    std::string hardware_preset;
    std::string calibration_preset;
    bool overlap_enabled = false;
    ReductionFactors reduction;
};

// Resolves presets by name under a root directory:
//   <root>/hardware/<name>.json
//   <root>/calibration/<name>.json
//   <root>/profiles/<ref>.json
class PresetDirectory {
  public:
    explicit PresetDirectory(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }
    HardwarePreset hardware(const std::string& name) const;
    CalibrationPreset calibration(const std::string& name) const;
    LogicalCircuitProfile profile(const std::string& ref) const;
    Scenario scenario(const std::filesystem::path& file) const;

    // CLI flag wins, then FTQC_PRESET_DIR, then ./fixtures/presets.
    static std::filesystem::path resolve_root(
        const std::optional<std::filesystem::path>& cli_flag);

  private:
    nlohmann::json load(const std::filesystem::path& file) const;
    std::filesystem::path root_;
};

}  // namespace ftqc
