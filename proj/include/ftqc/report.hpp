#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftqc/chem.hpp"
#include "ftqc/estimator.hpp"

namespace ftqc {

// Writes via a temp file in the same directory plus rename, so readers never
// observe a partial artifact.
void atomic_write(const std::filesystem::path& path, std::string_view content);

// Ablation CSV with deterministic column ordering:
// scenario,runtime_days,qubits_basic,qubits_detailed,distance,dfthc,zx,a2a,msc
std::string ablation_csv(const std::vector<AblationRow>& rows);

nlohmann::json ratios_to_json(const std::vector<FlagRatio>& ratios);

struct ComparisonRow {
    count_t orbitals = 0;
    std::optional<double> qpu_days_ion;
    std::optional<double> qpu_days_na;
    double cpu_days = 0.0;
};

struct Comparison {
    std::vector<ComparisonRow> rows;
    nlohmann::json verdict;  // per-size speedups
};

// Joins quantum estimates (keyed by provenance orbitals/platform) against
// the classical run records (cpu_hours / 24). Throws on key mismatch or an
// empty classical series.
Comparison emit_comparison(const std::vector<ResourceEstimate>& quantum,
                           const std::vector<ClassicalRunRecord>& classical);

// Series variant: quantum rows {orbitals, qpu_days_ion[, qpu_days_na]} and
// classical rows {orbitals, cpu_days}.
Comparison emit_comparison_series(const std::vector<ComparisonRow>& quantum,
                                  const std::vector<std::pair<count_t, double>>& classical);

std::string comparison_csv(const Comparison& c);

// CSV loaders for the series schema above.
std::vector<ComparisonRow> load_quantum_series_csv(std::istream& in);
std::vector<std::pair<count_t, double>> load_classical_series_csv(std::istream& in);

}  // namespace ftqc
