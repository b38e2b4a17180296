#include <CLI11.hpp>

#include "ftqc/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Full-stack fault-tolerant quantum computing resource estimator"};
    app.require_subcommand(1);

    ftqc::RunConfiguration config;

    std::string format = "both";
    std::string preset_dir;
    app.add_option("--output-dir", config.output_dir, "Directory for emitted artifacts");
    app.add_option("--format", format, "Artifact format: json, csv, or both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    app.add_option("--preset-dir", preset_dir,
                   "Preset root (falls back to $FTQC_PRESET_DIR, then fixtures/presets)");

    auto* parse = app.add_subcommand("parse", "Parse a QASM circuit and extract its profile");
    parse->add_option("--input", config.qasm_input, "QASM source file")->required();
    parse->add_option("--remote-cutoff", config.remote_cutoff,
                      "Index gap above which a CNOT counts as remote");

    auto* estimate = app.add_subcommand("estimate", "Run one scenario through the full stack");
    estimate->add_option("--scenario", config.scenario_files, "Scenario JSON file")->required();

    auto* ablate = app.add_subcommand("ablate", "Estimate a set of scenarios and report ratios");
    ablate->add_option("--scenario", config.scenario_files, "Scenario JSON files")->required();
    ablate->add_flag("--full-grid", config.full_grid,
                     "Evaluate all 16 flag combinations of one base scenario");

    auto* fit = app.add_subcommand("fit", "Least-squares scaling fits");
    fit->add_option("--kind", config.fit_kind, "linear | exponential | power")
        ->check(CLI::IsMember({"linear", "exponential", "power"}));
    fit->add_option("--points", config.points_csv, "CSV of x,y points")->required();
    fit->add_option("--at", config.extrapolate_at, "Abscissae to extrapolate at");
    std::vector<double> reference;
    fit->add_option("--reference", reference,
                    "Reference prefactor/intercept and rate/slope to report alongside the fit")
        ->expected(2);

    auto* chem = app.add_subcommand("chem", "Classical benchmark ledger queries");
    chem->add_option("--ledger", config.ledger_csv, "Energy ledger CSV");
    std::string method;
    chem->add_option("--method", method, "Reaction-energy method (or 'all')");
    chem->add_option("--runs", config.runs_csv, "Classical run records CSV");
    chem->add_option("--extrapolate", config.extrapolation_csv,
                     "Extrapolation points CSV (delta_e_pt,energy)");

    auto* compare = app.add_subcommand("compare", "Quantum vs classical runtime comparison");
    compare->add_option("--quantum", config.quantum_series_csv,
                        "Quantum day series CSV (orbitals,qpu_days_ion,qpu_days_na)");
    compare->add_option("--classical", config.classical_series_csv,
                        "Classical day series CSV (orbitals,cpu_days)");
    compare->add_option("--scenario", config.scenario_files,
                        "Scenario files to estimate instead of --quantum");
    compare->add_option("--runs", config.runs_csv, "Classical run records CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (format == "json") config.format = ftqc::OutputFormat::json;
    else if (format == "csv") config.format = ftqc::OutputFormat::csv;
    else config.format = ftqc::OutputFormat::both;
    if (!preset_dir.empty()) config.preset_dir = preset_dir;
    if (!method.empty()) config.reaction_method = method;
    if (!reference.empty()) config.reference_coefficients = {reference[0], reference[1]};

    using Command = ftqc::RunConfiguration::Command;
    if (parse->parsed()) config.command = Command::parse;
    else if (estimate->parsed()) config.command = Command::estimate;
    else if (ablate->parsed()) config.command = Command::ablate;
    else if (fit->parsed()) config.command = Command::fit;
    else if (chem->parsed()) config.command = Command::chem;
    else if (compare->parsed()) config.command = Command::compare;

    return ftqc::run(config);
}
