#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ftqc/gsc.hpp"
#include "ftqc/numeric.hpp"
#include "ftqc/profile.hpp"
#include "ftqc/qec.hpp"

namespace ftqc {

// Heralded ion-ion entanglement parameters. p_click = 0.023 is the baseline
// photon detection efficiency; 0.1 is the state-of-the-art value used by
// the detailed ion-trap preset.
struct EntanglementParameters {
    double p_bell = 0.5;
    double p_down = 0.99;
    double p_excite = 0.97;
    double p_decay_s = 0.95;
    double p_click = 0.023;
    double attempt_rate_hz = 833e3;

    void validate() const;
    static EntanglementParameters from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;
};

struct ELUSpec {
    count_t communication_ions = 0;
    count_t computational_ions = 0;
    count_t memory_ions = 0;
    count_t total_ions = 0;  // must equal the sum of the three parts
    count_t max_ions_per_elu = 1200;

    void validate() const;
    static ELUSpec from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;
};

enum class LayoutKind { two_row_bus, effective_all_to_all };
LayoutKind layout_kind_from_name(std::string_view name);
const char* layout_kind_name(LayoutKind k);

enum class DetailLevel { basic, detailed_elu };

struct HardwareModel {
    std::string name;
    Platform platform = Platform::ion_trap;
    double scc_time_s = 1e-4;
    LayoutKind layout = LayoutKind::effective_all_to_all;
    DetailLevel detail = DetailLevel::basic;
    EntanglementParameters entanglement;  // detailed ion model only
    ELUSpec elu;                          // detailed ion model only
    double qubits_per_logical_multiplier = 2.0;  // physical qubits per logical = mult * d^2
    double two_row_multiplier = 1.4;             // runtime penalty of the bus layout
    count_t pair_budget_base = 150;              // distinct-pair budget per 994 qubits

    void validate() const;
};

// P = p_bell * (p_down * p_excite * p_decay_s * p_click)^2
double entanglement_success_probability(const EntanglementParameters& e);

// Smallest communication-ion count n such that a
// Binomial(n * floor(attempt_rate * scc_time), P) draw reaches the raw-pair
// demand refined_pairs_per_scc * raw_per_refined with the given confidence.
// Normal approximation above mean 30, exact tail below. Throws when even
// n = 10 * demand / (P * attempts) fails.
count_t comm_ions_required(double entanglement_probability, double attempt_rate_hz,
                           double scc_time_s, double refined_pairs_per_scc,
                           double raw_per_refined, double confidence);

count_t physical_qubits_basic(const CompiledLayout& layout, count_t d, const FactorySpec& factory,
                              double qubits_per_logical_multiplier = 2.0);

count_t physical_qubits_detailed(const CompiledLayout& layout, const ELUSpec& elu);

struct LayoutPenalty {
    double multiplier = 1.0;
    bool over_budget = false;
};

LayoutPenalty layout_penalty(LayoutKind kind, const LogicalCircuitProfile& profile,
                             count_t pair_budget_base = 150, double two_row_multiplier = 1.4);

// Lower-tail standard normal quantile (AS241), used by the binomial
// confidence bound.
double normal_quantile(double p);

}  // namespace ftqc
