#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ftqc/numeric.hpp"

namespace ftqc {

enum class GateKind { T, Tdg, S, Sdg, H, X, Z, CNOT, CZ, RZ };

bool is_two_qubit(GateKind k);
const char* gate_name(GateKind k);

struct Gate {
    GateKind kind = GateKind::T;
    std::uint32_t q0 = 0;
    std::uint32_t q1 = 0;  // target of CNOT / second operand of CZ
    double angle = 0.0;    // RZ only

    bool operator==(const Gate&) const = default;
};

struct GateList {
    std::uint32_t qubit_count = 0;
    std::vector<Gate> gates;

    bool operator==(const GateList&) const = default;
};

// Parses the Clifford+T QASM subset: qreg declarations, gate definitions
// (inlined at the call site), and the flat gate vocabulary of GateKind.
// Register offsets are flattened to a single global index space.
// Throws parse_error (with source line) on syntax errors, unsupported gate
// names, and out-of-range operands.
GateList parse_qasm(std::string_view text);

// Emits a program that parse_qasm reads back to an identical GateList.
std::string write_qasm(const GateList& g);

}  // namespace ftqc
