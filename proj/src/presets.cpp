#include "ftqc/presets.hpp"

#include <cstdlib>
#include <fstream>

#include "ftqc/errors.hpp"

namespace ftqc {

HardwarePreset hardware_preset_from_json(const nlohmann::json& doc) {
    HardwarePreset preset;
    HardwareModel& m = preset.model;
    m.name = doc.value("name", std::string{});
    m.platform = platform_from_name(doc.at("platform").get<std::string>());
    m.scc_time_s = doc.at("scc_time_s").get<double>();
    if (doc.contains("layout")) {
        m.layout = layout_kind_from_name(doc.at("layout").get<std::string>());
    }
    if (doc.contains("detail")) {
        const auto detail = doc.at("detail").get<std::string>();
        if (detail == "basic") {
            m.detail = DetailLevel::basic;
        } else if (detail == "detailed_elu") {
            m.detail = DetailLevel::detailed_elu;
        } else {
            throw config_error("hardware preset: unknown detail level '" + detail + "'");
        }
    }
    if (doc.contains("entanglement")) {
        m.entanglement = EntanglementParameters::from_json(doc.at("entanglement"));
    }
    if (doc.contains("elu")) m.elu = ELUSpec::from_json(doc.at("elu"));
    if (doc.contains("qubits_per_logical_multiplier")) {
        m.qubits_per_logical_multiplier = doc.at("qubits_per_logical_multiplier").get<double>();
    }
    if (doc.contains("two_row_multiplier")) {
        m.two_row_multiplier = doc.at("two_row_multiplier").get<double>();
    }
    if (doc.contains("pair_budget_base")) {
        m.pair_budget_base = doc.at("pair_budget_base").get<count_t>();
    }
    if (doc.contains("comm_demand")) {
        const auto& cd = doc.at("comm_demand");
        preset.refined_pairs_per_scc = cd.value("refined_pairs_per_scc", 0.0);
        preset.raw_per_refined = cd.value("raw_per_refined", 1.0);
        preset.confidence = cd.value("confidence", 0.99);
    }
    if (doc.contains("provenance")) preset.provenance = doc.at("provenance");
    m.validate();
    return preset;
}

CalibrationPreset calibration_preset_from_json(const nlohmann::json& doc) {
    CalibrationPreset p;
    p.name = doc.value("name", std::string{});
    if (doc.contains("expansion_ratio")) p.expansion_ratio = doc.at("expansion_ratio").get<double>();
    if (doc.contains("factory_count_cultivation")) {
        p.factory_count_cultivation = doc.at("factory_count_cultivation").get<count_t>();
    }
    if (doc.contains("factory_count_distillation")) {
        p.factory_count_distillation = doc.at("factory_count_distillation").get<count_t>();
    }
    if (doc.contains("cycles")) {
        const auto& c = doc.at("cycles");
        const auto mode = c.value("mode", std::string("model"));
        if (mode == "replay") {
            p.replay = true;
            p.replay_t_measurement = c.at("t_measurement").get<count_t>();
            p.replay_distillation = c.at("distillation").get<count_t>();
            p.replay_graph_prep = c.at("graph_prep").get<count_t>();
            p.replay_combined = c.at("combined_prep_distill").get<count_t>();
        } else if (mode == "model") {
            p.cycles_per_t_meas = c.at("cycles_per_t_meas").get<double>();
            p.cycles_per_magic_state_cultivation =
                c.value("cycles_per_magic_state_cultivation", 1.0);
            p.cycles_per_magic_state_distillation =
                c.value("cycles_per_magic_state_distillation", 1.0);
            p.prep_cycles_per_compiled_qubit = c.at("prep_cycles_per_compiled_qubit").get<double>();
            p.combined_fraction = c.at("combined_fraction").get<double>();
        } else {
            throw config_error("calibration preset: unknown cycle mode '" + mode + "'");
        }
    }
    if (doc.contains("qec")) {
        const auto& q = doc.at("qec");
        p.logical_volume = q.value("logical_volume", 0.0);
        p.failure_budget = q.value("failure_budget", 1e-2);
        p.prefactor_A = q.value("prefactor_A", 0.1);
        if (q.contains("distillation_qubit_multiplier")) {
            p.factory_defaults.distillation_qubit_multiplier =
                q.at("distillation_qubit_multiplier").get<count_t>();
        }
        if (q.contains("distillation_cycle_multiplier")) {
            p.factory_defaults.distillation_cycle_multiplier =
                q.at("distillation_cycle_multiplier").get<count_t>();
        }
        if (q.contains("cultivation_cycles_per_state")) {
            p.factory_defaults.cultivation_cycles_per_state =
                q.at("cultivation_cycles_per_state").get<count_t>();
        }
    }
    if (doc.contains("naive_gsc_multiplier")) {
        p.naive_gsc_multiplier = doc.at("naive_gsc_multiplier").get<double>();
        if (!(p.naive_gsc_multiplier >= 1.0)) {
            throw config_error("calibration preset: naive_gsc_multiplier must be >= 1");
        }
    }
    if (doc.contains("gsc_hyperparameters")) {
        p.gsc = GSCHyperparameters::from_json(doc.at("gsc_hyperparameters"));
    }
    if (doc.contains("provenance")) p.provenance = doc.at("provenance");
    return p;
}

int FeatureFlags::enabled_count() const {
    return static_cast<int>(dfthc) + static_cast<int>(zx) + static_cast<int>(a2a) +
           static_cast<int>(msc);
}

std::string FeatureFlags::to_string() const {
    std::string s = "dfthc=";
    s += dfthc ? '1' : '0';
    s += ",zx=";
    s += zx ? '1' : '0';
    s += ",a2a=";
    s += a2a ? '1' : '0';
    s += ",msc=";
    s += msc ? '1' : '0';
    return s;
}

FeatureFlags FeatureFlags::from_json(const nlohmann::json& doc) {
    FeatureFlags f;
    f.dfthc = doc.value("dfthc", true);
    f.zx = doc.value("zx", true);
    f.a2a = doc.value("a2a", true);
    f.msc = doc.value("msc", true);
    return f;
}

nlohmann::json FeatureFlags::to_json() const {
    return {{"dfthc", dfthc}, {"zx", zx}, {"a2a", a2a}, {"msc", msc}};
}

PresetDirectory::PresetDirectory(std::filesystem::path root) : root_(std::move(root)) {
    if (!std::filesystem::is_directory(root_)) {
        throw config_error("preset directory '" + root_.string() + "' does not exist");
    }
}

nlohmann::json PresetDirectory::load(const std::filesystem::path& file) const {
    std::ifstream in(file);
    if (!in) throw config_error("cannot read '" + file.string() + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw config_error("invalid JSON in '" + file.string() + "': " + e.what());
    }
    return doc;
}

HardwarePreset PresetDirectory::hardware(const std::string& name) const {
    return hardware_preset_from_json(load(root_ / "hardware" / (name + ".json")));
}

CalibrationPreset PresetDirectory::calibration(const std::string& name) const {
    auto preset = calibration_preset_from_json(load(root_ / "calibration" / (name + ".json")));
    if (preset.name.empty()) preset.name = name;
    return preset;
}

LogicalCircuitProfile PresetDirectory::profile(const std::string& ref) const {
    try {
        return load_proxy_profile(load(root_ / "profiles" / (ref + ".json")));
    } catch (const std::invalid_argument& e) {
        throw config_error("profile '" + ref + "': " + e.what());
    }
}

Scenario PresetDirectory::scenario(const std::filesystem::path& file) const {
    const auto path = file.is_absolute() || std::filesystem::exists(file)
                          ? file
                          : root_ / "scenarios" / file;
    const nlohmann::json doc = load(path);
    Scenario s;
    s.name = doc.value("name", path.stem().string());
    try {
        if (doc.contains("algorithm")) {
            s.algorithm = algorithm_spec_from_json(doc.at("algorithm"));
        }
        if (doc.contains("profile")) {
            s.profile = load_proxy_profile(doc.at("profile"));
        } else if (doc.contains("profile_ref")) {
            s.profile = profile(doc.at("profile_ref").get<std::string>());
        } else {
            throw config_error("scenario '" + s.name + "': missing profile|profile_ref");
        }
        if (doc.contains("profile_df")) {
            s.profile_df = load_proxy_profile(doc.at("profile_df"));
        } else if (doc.contains("profile_ref_df")) {
            s.profile_df = profile(doc.at("profile_ref_df").get<std::string>());
        }
        if (doc.contains("flags")) s.flags = FeatureFlags::from_json(doc.at("flags"));
        s.hardware_preset = doc.at("hardware_preset").get<std::string>();
        s.calibration_preset = doc.at("calibration_preset").get<std::string>();
        s.overlap_enabled = doc.value("overlap_enabled", false);
        if (doc.contains("reduction")) {
            s.reduction = ReductionFactors::from_json(doc.at("reduction"));
        }
    } catch (const nlohmann::json::exception& e) {
        throw config_error("scenario '" + path.string() + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw config_error("scenario '" + path.string() + "': " + e.what());
    }
    return s;
}

std::filesystem::path PresetDirectory::resolve_root(
    const std::optional<std::filesystem::path>& cli_flag) {
    if (cli_flag) return *cli_flag;
    if (const char* env = std::getenv(kPresetDirEnv); env && *env) {
        return std::filesystem::path(env);
    }
    return std::filesystem::path("fixtures") / "presets";
}

}  // namespace ftqc
