#include "ftqc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ftqc/errors.hpp"
#include "ftqc/estimator.hpp"
#include "ftqc/report.hpp"

namespace ftqc {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot read '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::ifstream open_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot read '" + path.string() + "'");
    return in;
}

void write_json(const RunConfiguration& config, const std::string& name,
                const nlohmann::json& doc) {
    if (config.format == OutputFormat::csv) return;
    atomic_write(config.output_dir / name, doc.dump(2) + "\n");
}

void write_csv(const RunConfiguration& config, const std::string& name, const std::string& body) {
    if (config.format == OutputFormat::json) return;
    atomic_write(config.output_dir / name, body);
}

std::vector<std::pair<double, double>> load_points_csv(const std::filesystem::path& path) {
    auto in = open_file(path);
    std::vector<std::pair<double, double>> points;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw config_error("points CSV: malformed row '" + line + "'");
        const std::string a = line.substr(0, comma);
        const std::string b = line.substr(comma + 1);
        if (first) {
            first = false;
            if (!a.empty() && !std::isdigit(static_cast<unsigned char>(a[0])) && a[0] != '-' &&
                a[0] != '.') {
                continue;  // header
            }
        }
        points.emplace_back(std::stod(a), std::stod(b));
    }
    return points;
}

int cmd_parse(const RunConfiguration& config) {
    const GateList gates = parse_qasm(read_file(config.qasm_input));
    const LogicalCircuitProfile profile = extract_profile(gates, config.remote_cutoff);
    nlohmann::json doc = profile_to_json(profile);
    doc["gate_count"] = gates.gates.size();
    write_json(config, config.qasm_input.stem().string() + "_profile.json", doc);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_estimate(const RunConfiguration& config) {
    if (config.scenario_files.size() != 1) {
        throw config_error("estimate expects exactly one --scenario file");
    }
    const PresetDirectory presets(PresetDirectory::resolve_root(config.preset_dir));
    const Scenario scenario = presets.scenario(config.scenario_files[0]);
    const ResourceEstimate result = estimate(scenario, presets);
    const nlohmann::json doc = estimate_to_json(result);
    write_json(config, scenario.name + "_estimate.json", doc);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_ablate(const RunConfiguration& config) {
    if (config.scenario_files.empty()) {
        throw config_error("ablate expects at least one --scenario file");
    }
    const PresetDirectory presets(PresetDirectory::resolve_root(config.preset_dir));
    std::vector<AblationRow> rows;
    if (config.full_grid) {
        if (config.scenario_files.size() != 1) {
            throw config_error("--full-grid takes exactly one base scenario");
        }
        const Scenario base = presets.scenario(config.scenario_files[0]);
        std::vector<FeatureFlags> sets;
        for (int mask = 0; mask < 16; ++mask) {
            FeatureFlags f;
            f.dfthc = mask & 1;
            f.zx = mask & 2;
            f.a2a = mask & 4;
            f.msc = mask & 8;
            sets.push_back(f);
        }
        rows = ablation_grid(base, sets, presets);
    } else {
        std::vector<Scenario> scenarios;
        scenarios.reserve(config.scenario_files.size());
        for (const auto& file : config.scenario_files) {
            scenarios.push_back(presets.scenario(file));
        }
        rows = ablation_table(scenarios, presets);
    }
    const auto ratios = single_flag_ratios(rows);

    write_csv(config, "ablation.csv", ablation_csv(rows));
    nlohmann::json summary;
    summary["rows"] = nlohmann::json::array();
    for (const AblationRow& row : rows) {
        summary["rows"].push_back({{"scenario", row.scenario},
                                   {"runtime_days", row.estimate.runtime_days},
                                   {"qubits_basic", row.estimate.physical_qubits_basic},
                                   {"flags", row.estimate.flags.to_json()},
                                   {"provenance", row.estimate.provenance}});
    }
    summary["single_flag_ratios"] = ratios_to_json(ratios);
    write_json(config, "ablation_ratios.json", summary);
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_fit(const RunConfiguration& config) {
    const auto points = load_points_csv(config.points_csv);
    nlohmann::json doc;
    if (config.fit_kind == "power") {
        doc = {{"kind", "power"}, {"exponent", fit_power_exponent(points)}};
    } else {
        ScalingFit fit;
        if (config.fit_kind == "linear") {
            fit = fit_linear(points);
        } else if (config.fit_kind == "exponential") {
            fit = fit_exponential(points);
        } else {
            throw config_error("unknown fit kind '" + config.fit_kind + "'");
        }
        doc = fit.to_json();
        if (!config.extrapolate_at.empty()) {
            doc["extrapolations"] = nlohmann::json::array();
            for (double x : config.extrapolate_at) {
                doc["extrapolations"].push_back({{"x", x}, {"value", fit.evaluate(x)}});
            }
        }
        if (config.reference_coefficients) {
            // Reference coefficients from an external source, reported next
            // to the fitted ones with a mismatch annotation.
            const auto [pref, rate] = *config.reference_coefficients;
            ScalingFit ref = fit;
            ref.intercept_or_prefactor = pref;
            ref.slope_or_rate = rate;
            double max_rel = 0.0;
            for (const auto& [x, y] : points) {
                max_rel = std::max(max_rel, std::abs(ref.evaluate(x) - y) / std::abs(y));
            }
            doc["reference"] = {
                {"prefactor_or_intercept", pref},
                {"rate_or_slope", rate},
                {"max_relative_residual", max_rel},
                {"matches_points", max_rel <= 0.05},
            };
            if (!config.extrapolate_at.empty()) {
                doc["reference"]["extrapolations"] = nlohmann::json::array();
                for (double x : config.extrapolate_at) {
                    doc["reference"]["extrapolations"].push_back(
                        {{"x", x}, {"value", ref.evaluate(x)}});
                }
            }
        }
    }
    write_json(config, "fit.json", doc);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_chem(const RunConfiguration& config) {
    nlohmann::json doc;
    if (!config.ledger_csv.empty()) {
        auto in = open_file(config.ledger_csv);
        const ChemLedger ledger = ChemLedger::from_csv(in);
        const auto one = [&](Method m) {
            return nlohmann::json{{"method", method_name(m)},
                                  {"reaction_energy_hartree", reaction_energy(ledger, m)}};
        };
        if (config.reaction_method && *config.reaction_method != "all") {
            doc["reaction_energies"] = {one(method_from_name(*config.reaction_method))};
        } else {
            doc["reaction_energies"] = nlohmann::json::array();
            for (Method m : {Method::DFT, Method::HF, Method::CASSCF, Method::DMRG, Method::SHCI}) {
                if (ledger.has(Species::XVIII, m) && ledger.has(Species::I, m)) {
                    doc["reaction_energies"].push_back(one(m));
                }
            }
        }
    }
    if (!config.runs_csv.empty()) {
        auto in = open_file(config.runs_csv);
        const auto records = load_run_records(in);
        doc["runs"] = nlohmann::json::array();
        for (const auto& r : records) {
            doc["runs"].push_back({{"label", r.system_label},
                                   {"orbitals", r.orbitals},
                                   {"cpu_hours", r.cpu_hours},
                                   {"cpu_days", r.cpu_hours / 24.0},
                                   {"uncertainty_mha", r.uncertainty_mha},
                                   {"case", std::string(1, r.extrapolation_case)}});
        }
        doc["uncertainty_series"] = nlohmann::json::array();
        for (const auto& [orbitals, mha] : uncertainty_series(records)) {
            doc["uncertainty_series"].push_back({{"orbitals", orbitals}, {"mha", mha}});
        }
    }
    if (!config.extrapolation_csv.empty()) {
        const auto points = load_points_csv(config.extrapolation_csv);
        const ScalingFit fit = fit_linear(points);
        doc["extrapolation"] = {{"intercept_hartree", fit.intercept_or_prefactor},
                                {"slope", fit.slope_or_rate},
                                {"r_squared", fit.r_squared}};
    }
    if (doc.empty()) {
        throw config_error("chem requires --ledger, --runs, or --extrapolate");
    }
    write_json(config, "chem.json", doc);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_compare(const RunConfiguration& config) {
    Comparison comparison;
    if (!config.quantum_series_csv.empty()) {
        auto qin = open_file(config.quantum_series_csv);
        const auto quantum = load_quantum_series_csv(qin);
        std::vector<std::pair<count_t, double>> classical;
        if (!config.classical_series_csv.empty()) {
            auto cin_ = open_file(config.classical_series_csv);
            classical = load_classical_series_csv(cin_);
        } else if (!config.runs_csv.empty()) {
            auto rin = open_file(config.runs_csv);
            for (const auto& r : load_run_records(rin)) {
                classical.emplace_back(r.orbitals, r.cpu_hours / 24.0);
            }
        } else {
            throw config_error("compare needs --classical or --runs");
        }
        comparison = emit_comparison_series(quantum, classical);
    } else if (!config.scenario_files.empty()) {
        if (config.runs_csv.empty()) throw config_error("compare needs --runs");
        const PresetDirectory presets(PresetDirectory::resolve_root(config.preset_dir));
        std::vector<ResourceEstimate> estimates;
        estimates.reserve(config.scenario_files.size());
        for (const auto& file : config.scenario_files) {
            estimates.push_back(estimate(presets.scenario(file), presets));
        }
        auto rin = open_file(config.runs_csv);
        comparison = emit_comparison(estimates, load_run_records(rin));
    } else {
        throw config_error("compare needs --quantum series or --scenario files");
    }
    write_csv(config, "comparison.csv", comparison_csv(comparison));
    write_json(config, "comparison_verdict.json", comparison.verdict);
    std::cout << comparison.verdict.dump(2) << "\n";
    return 0;
}

}  // namespace

int run(const RunConfiguration& config) {
    try {
        switch (config.command) {
            case RunConfiguration::Command::parse: return cmd_parse(config);
            case RunConfiguration::Command::estimate: return cmd_estimate(config);
            case RunConfiguration::Command::ablate: return cmd_ablate(config);
            case RunConfiguration::Command::fit: return cmd_fit(config);
            case RunConfiguration::Command::chem: return cmd_chem(config);
            case RunConfiguration::Command::compare: return cmd_compare(config);
        }
        return 2;
    } catch (const config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ftqc
