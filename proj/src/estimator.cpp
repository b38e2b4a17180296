#include "ftqc/estimator.hpp"

#include <algorithm>
#include <stdexcept>

#include "ftqc/algorithm.hpp"
#include "ftqc/errors.hpp"
#include "ftqc/hardware.hpp"
#include "ftqc/qec.hpp"
#include "ftqc/transform.hpp"

namespace ftqc {

namespace {

constexpr double kSecondsPerDay = 86400.0;

// Wraps layer failures with the layer tag so pipeline errors are
// attributable from the CLI.
template <typename F>
auto layer(const char* tag, F&& f) {
    try {
        return f();
    } catch (const std::logic_error& e) {
        throw std::invalid_argument(std::string("[") + tag + "] " + e.what());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(std::string("[") + tag + "] " + e.what());
    }
}

}  // namespace

nlohmann::json estimate_to_json(const ResourceEstimate& e) {
    nlohmann::json doc = {
        {"runtime_seconds", e.runtime_seconds},
        {"runtime_days", e.runtime_days},
        {"physical_qubits_basic", e.physical_qubits_basic},
        {"code_distance", e.code_distance},
        {"cycles",
         {{"t_measurement", e.cycles.t_measurement_cycles},
          {"distillation", e.cycles.distillation_cycles},
          {"graph_prep", e.cycles.graph_prep_cycles},
          {"combined_prep_distill", e.cycles.combined_prep_distill_cycles},
          {"total", e.cycles.total_cycles}}},
        {"flags", e.flags.to_json()},
        {"provenance", e.provenance},
    };
    if (e.physical_qubits_detailed) {
        doc["physical_qubits_detailed"] = *e.physical_qubits_detailed;
    }
    return doc;
}

ResourceEstimate estimate(const Scenario& scenario, const PresetDirectory& presets) {
    const HardwarePreset hw = presets.hardware(scenario.hardware_preset);
    const CalibrationPreset calib = presets.calibration(scenario.calibration_preset);
    scenario.algorithm.validate();

    ResourceEstimate out;
    out.flags = scenario.flags;
    nlohmann::json& prov = out.provenance;
    prov["scenario"] = scenario.name;
    prov["hardware_preset"] = scenario.hardware_preset;
    prov["calibration_preset"] = calib.name;
    prov["platform"] = platform_name(hw.model.platform);
    prov["orbitals"] = scenario.algorithm.n_orbitals;
    prov["flags"] = scenario.flags.to_json();
    prov["gsc_hyperparameters"] = calib.gsc.to_json();

    // Algorithmic layer: profile variant selection.
    LogicalCircuitProfile profile = scenario.profile;
    if (!scenario.flags.dfthc) {
        if (!scenario.profile_df) {
            throw config_error("scenario '" + scenario.name +
                               "': dfthc disabled but no profile_df supplied");
        }
        profile = *scenario.profile_df;
    }
    prov["profile"] = profile_to_json(profile);

    // Transform layer.
    if (scenario.flags.zx) {
        profile = layer("transform", [&] { return apply_reduction(profile, scenario.reduction); });
        prov["reduction"] = scenario.reduction.to_json();
        prov["profile_after_zx"] = profile_to_json(profile);
    }

    const count_t t_total = layer("algorithm", [&] { return total_t(profile, scenario.algorithm); });
    prov["t_total"] = t_total;

    // GSC expansion.
    CompiledLayout layout = layer("gsc", [&] {
        return compile_expansion(profile, calib.gsc, calib.expansion_ratio);
    });
    layout.factory_elus = scenario.flags.msc ? calib.factory_count_cultivation
                                             : calib.factory_count_distillation;
    prov["compiled_logical_qubits"] = layout.compiled_logical_qubits;
    prov["expansion_ratio"] = layout.expansion_ratio;
    prov["factory_elus"] = layout.factory_elus;

    // QEC layer: code distance and factory selection.
    CodeParameters code = platform_code(hw.model.platform);
    code.prefactor_A = calib.prefactor_A;
    const double volume =
        calib.logical_volume > 0
            ? calib.logical_volume
            : static_cast<double>(profile.algorithm_logical_qubits) * static_cast<double>(t_total);
    const count_t d = layer("qec", [&] {
        return min_distance(code, volume, calib.failure_budget);
    });
    const FactorySpec fac = layer("qec", [&] {
        return factory(scenario.flags.msc ? FactoryKind::cultivation : FactoryKind::distillation,
                       code, d, calib.factory_defaults);
    });
    out.code_distance = d;
    prov["logical_volume"] = volume;
    prov["failure_budget"] = calib.failure_budget;
    prov["factory"] = {{"kind", factory_kind_name(fac.kind)},
                       {"physical_qubits_per_factory", fac.physical_qubits_per_factory},
                       {"output_error", fac.output_error},
                       {"parallel_attempts", fac.parallel_attempts}};
    if (!fac.warning.empty()) prov["factory"]["warning"] = fac.warning;

    // GSC cycle accounting.
    if (calib.replay) {
        out.cycles = replay_cycles(calib.replay_t_measurement, calib.replay_distillation,
                                   calib.replay_graph_prep, calib.replay_combined);
        prov["cycle_mode"] = "replay";
    } else {
        CycleModelParameters model;
        model.cycles_per_t_meas = calib.cycles_per_t_meas;
        model.cycles_per_magic_state = scenario.flags.msc
                                           ? calib.cycles_per_magic_state_cultivation
                                           : calib.cycles_per_magic_state_distillation;
        model.factory_count = layout.factory_elus;
        model.prep_cycles_per_compiled_qubit = calib.prep_cycles_per_compiled_qubit;
        model.combined_fraction = calib.combined_fraction;
        out.cycles = layer("gsc", [&] { return allocate_cycles(t_total, layout, d, model); });
        prov["cycle_mode"] = "model";
        prov["cycles_per_magic_state"] = model.cycles_per_magic_state;
    }

    // Physical layer.
    const LayoutPenalty penalty = layer("hardware", [&] {
        return layout_penalty(scenario.flags.a2a ? LayoutKind::effective_all_to_all
                                                 : LayoutKind::two_row_bus,
                              profile, hw.model.pair_budget_base, hw.model.two_row_multiplier);
    });
    prov["layout"] = {{"kind", layout_kind_name(scenario.flags.a2a
                                                    ? LayoutKind::effective_all_to_all
                                                    : LayoutKind::two_row_bus)},
                      {"multiplier", penalty.multiplier},
                      {"over_budget", penalty.over_budget}};

    out.physical_qubits_basic = layer("hardware", [&] {
        return physical_qubits_basic(layout, d, fac, hw.model.qubits_per_logical_multiplier);
    });
    if (hw.model.detail == DetailLevel::detailed_elu) {
        out.physical_qubits_detailed = layer("hardware", [&] {
            return physical_qubits_detailed(layout, hw.model.elu);
        });
        prov["elu"] = hw.model.elu.to_json();
        prov["entanglement_success_probability"] =
            entanglement_success_probability(hw.model.entanglement);
    }

    // Runtime assembly.
    double seconds = static_cast<double>(out.cycles.total_cycles) * hw.model.scc_time_s *
                     penalty.multiplier * calib.naive_gsc_multiplier;
    prov["scc_time_s"] = hw.model.scc_time_s;
    if (calib.naive_gsc_multiplier != 1.0) {
        prov["naive_gsc_multiplier"] = calib.naive_gsc_multiplier;
    }
    prov["overlap"] = {{"enabled", scenario.overlap_enabled},
                       {"gamma", scenario.algorithm.overlap_gamma}};
    if (scenario.overlap_enabled) {
        seconds = layer("algorithm", [&] {
            return apply_overlap(seconds, scenario.algorithm.overlap_gamma);
        });
    }
    out.runtime_seconds = seconds;
    out.runtime_days = seconds / kSecondsPerDay;
    return out;
}

namespace {

void sort_rows(std::vector<AblationRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const AblationRow& a, const AblationRow& b) {
        if (a.estimate.runtime_days != b.estimate.runtime_days) {
            return a.estimate.runtime_days > b.estimate.runtime_days;
        }
        const int na = a.estimate.flags.enabled_count();
        const int nb = b.estimate.flags.enabled_count();
        if (na != nb) return na < nb;
        return a.estimate.flags.to_string() < b.estimate.flags.to_string();
    });
}

}  // namespace

std::vector<AblationRow> ablation_table(const std::vector<Scenario>& scenarios,
                                        const PresetDirectory& presets) {
    std::vector<AblationRow> rows;
    rows.reserve(scenarios.size());
    for (const Scenario& s : scenarios) {
        rows.push_back({s.name, estimate(s, presets)});
    }
    sort_rows(rows);
    return rows;
}

std::vector<AblationRow> ablation_grid(const Scenario& base,
                                       const std::vector<FeatureFlags>& flag_sets,
                                       const PresetDirectory& presets) {
    std::vector<AblationRow> rows;
    rows.reserve(flag_sets.size());
    for (const FeatureFlags& flags : flag_sets) {
        Scenario s = base;
        s.flags = flags;
        s.name = base.name + "[" + flags.to_string() + "]";
        rows.push_back({s.name, estimate(s, presets)});
    }
    sort_rows(rows);
    return rows;
}

std::vector<FlagRatio> single_flag_ratios(const std::vector<AblationRow>& rows) {
    const auto differing_flag = [](const FeatureFlags& off, const FeatureFlags& on)
        -> std::optional<std::string> {
        int diffs = 0;
        std::string flag;
        const auto probe = [&](bool a, bool b, const char* name) {
            if (a != b) {
                ++diffs;
                if (!a && b) flag = name;  // enabled in `on`
                else flag.clear();
            }
        };
        probe(off.dfthc, on.dfthc, "dfthc");
        probe(off.zx, on.zx, "zx");
        probe(off.a2a, on.a2a, "a2a");
        probe(off.msc, on.msc, "msc");
        if (diffs == 1 && !flag.empty()) return flag;
        return std::nullopt;
    };

    std::vector<FlagRatio> ratios;
    for (const AblationRow& a : rows) {
        for (const AblationRow& b : rows) {
            if (auto flag = differing_flag(a.estimate.flags, b.estimate.flags)) {
                FlagRatio r;
                r.from = a.scenario;
                r.to = b.scenario;
                r.flag = *flag;
                if (b.estimate.runtime_days == 0) {
                    throw std::domain_error("single_flag_ratios: zero runtime");
                }
                r.runtime_ratio = a.estimate.runtime_days / b.estimate.runtime_days;
                ratios.push_back(r);
            }
        }
    }
    return ratios;
}

}  // namespace ftqc
