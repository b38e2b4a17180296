#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ftqc {

enum class OutputFormat { json, csv, both };

struct RunConfiguration {
    enum class Command { parse, estimate, ablate, fit, chem, compare };
    Command command = Command::estimate;

    std::filesystem::path output_dir = ".";
    OutputFormat format = OutputFormat::both;
    std::optional<std::filesystem::path> preset_dir;

    // parse
    std::filesystem::path qasm_input;
    unsigned remote_cutoff = 4;

    // estimate / ablate / compare
    std::vector<std::filesystem::path> scenario_files;
    bool full_grid = false;  // ablate: evaluate all 16 flag sets of one scenario

    // fit
    std::string fit_kind = "linear";  // linear | exponential | power
    std::filesystem::path points_csv;
    std::vector<double> extrapolate_at;
    std::optional<std::pair<double, double>> reference_coefficients;

    // chem
    std::filesystem::path ledger_csv;
    std::filesystem::path runs_csv;
    std::filesystem::path extrapolation_csv;
    std::optional<std::string> reaction_method;  // DFT|HF|CASSCF|DMRG|SHCI, or "all"

    // compare (series mode)
    std::filesystem::path quantum_series_csv;
    std::filesystem::path classical_series_csv;
};

// Dispatches one command; writes artifacts atomically under output_dir and a
// machine-readable summary to stdout. Returns 0 on success, 1 on domain
// errors, 2 on configuration errors.
int run(const RunConfiguration& config);

}  // namespace ftqc
