#pragma once

#include <string>
#include <string_view>

#include "ftqc/numeric.hpp"

namespace ftqc {

// Phenomenological surface-code parameters: logical error per cycle is
// A * (p/p_th)^((d+1)/2).
struct CodeParameters {
    double physical_error_rate = 1e-4;
    double threshold = 1e-2;
    double prefactor_A = 0.1;

    void validate() const;  // requires 0 < p < p_th < 1
};

enum class FactoryKind { distillation, cultivation };
FactoryKind factory_kind_from_name(std::string_view name);
const char* factory_kind_name(FactoryKind k);

struct FactorySpec {
    FactoryKind kind = FactoryKind::distillation;
    count_t physical_qubits_per_factory = 0;
    count_t cycles_per_magic_state = 0;
    double output_error = 0.0;
    count_t parallel_attempts = 1;
    std::string warning;  // non-empty when the spec extrapolates beyond validated noise
};

// Distillation geometry and the cultivation latency are cited without
// numbers; these defaults are configurable and flagged non-paper.
struct FactoryDefaults {
    count_t distillation_qubit_multiplier = 12;  // qubits = k * d^2
    count_t distillation_cycle_multiplier = 11;  // cycles = 11 * d
    count_t cultivation_cycles_per_state = 30;
};

double logical_error_per_cycle(const CodeParameters& c, count_t d);

// Smallest odd d >= 3 with logical_error_per_cycle(c,d) * volume <= budget.
// Throws when no d <= d_max satisfies the budget (saturation).
count_t min_distance(const CodeParameters& c, double logical_qubit_cycles, double failure_budget,
                     count_t d_max = 99);

FactorySpec factory(FactoryKind kind, const CodeParameters& code, count_t d = 13,
                    const FactoryDefaults& defaults = {});

enum class Platform { ion_trap, neutral_atom_conventional, neutral_atom_erasure };
Platform platform_from_name(std::string_view name);
const char* platform_name(Platform p);

CodeParameters platform_code(Platform platform);

}  // namespace ftqc
