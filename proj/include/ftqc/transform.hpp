#pragma once

#include <nlohmann/json.hpp>

#include "ftqc/profile.hpp"
#include "ftqc/qasm.hpp"

namespace ftqc {

// Measured circuit-optimization factors: each count is divided by its factor.
// Factors are per-instance data (stored in scenario fixtures), not derived.
struct ReductionFactors {
    double f_t = 1.0;
    double f_two_qubit = 1.0;
    double f_remote = 1.0;
    double f_subroutines = 1.0;

    void validate() const;
    static ReductionFactors from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;
};

// Applies measured reduction factors to a profile. Counts never increase;
// identity factors return the profile unchanged apart from nothing at all.
// The label is annotated "+zx".
LogicalCircuitProfile apply_reduction(const LogicalCircuitProfile& profile,
                                      const ReductionFactors& f);

// Adjacency-local phase-gate canceller. Removes inverse pairs on the same
// wire (T*Tdg, S*Sdg, H*H, X*X, Z*Z, CNOT*CNOT on identical operands) and
// fuses T*T -> S, S*S -> Z. No commutation through gates sharing a wire.
// Idempotent; preserves the circuit unitary; never increases the T count.
GateList peephole_cancel(const GateList& g);

}  // namespace ftqc
