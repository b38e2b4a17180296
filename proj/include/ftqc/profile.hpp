#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftqc/numeric.hpp"
#include "ftqc/qasm.hpp"

namespace ftqc {

// Remote two-qubit gates are CNOTs whose flattened indices differ by more
// than this cutoff.
inline constexpr std::uint32_t kDefaultRemoteCutoff = 4;

// Logical circuit statistics for one algorithm instance. Counts are either
// per block encoding (block_encodings holding the repetition count) or
// pre-multiplied totals with block_encodings = 1. block_encodings = 0 marks
// "unset": the repetition count must then come from the algorithm layer.
struct LogicalCircuitProfile {
    count_t algorithm_logical_qubits = 0;
    count_t t_per_block_encoding = 0;
    count_t block_encodings = 1;
    count_t two_qubit_per_block = 0;
    count_t remote_cnot_per_block = 0;
    count_t distinct_pair_count = 0;
    count_t rotation_count_per_block = 0;
    std::string label;

    // Names of keys that were absent from a proxy document and defaulted.
    std::vector<std::string> defaulted_fields;

    void validate() const;
};

LogicalCircuitProfile extract_profile(const GateList& g,
                                      std::uint32_t remote_cutoff = kDefaultRemoteCutoff);

// Loads a declarative proxy profile:
//   {label, qubits, t_total | (t_per_block, block_encodings),
//    two_qubit_per_block, remote_cnot_per_block, distinct_pairs,
//    rotations_per_block}
// Missing per-block statistics default to zero and are recorded in
// defaulted_fields. Throws on missing mandatory keys and negative counts.
LogicalCircuitProfile load_proxy_profile(const nlohmann::json& doc);

nlohmann::json profile_to_json(const LogicalCircuitProfile& p);

}  // namespace ftqc
