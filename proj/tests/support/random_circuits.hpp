#pragma once

#include <random>
#include <set>
#include <utility>

#include "ftqc/profile.hpp"
#include "ftqc/qasm.hpp"

// Emission tally kept by the generator, independent of extract_profile.
struct GeneratorTally {
    ftqc::count_t t_gates = 0;
    ftqc::count_t rotations = 0;
    ftqc::count_t two_qubit = 0;
    ftqc::count_t remote_cnots = 0;
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

inline ftqc::GateList random_gate_list(std::mt19937_64& rng, std::uint32_t qubits,
                                       std::size_t gate_count, GeneratorTally* tally = nullptr,
                                       std::uint32_t remote_cutoff = 4) {
    ftqc::GateList list;
    list.qubit_count = qubits;
    std::uniform_int_distribution<int> kind_dist(0, 9);
    std::uniform_int_distribution<std::uint32_t> qubit_dist(0, qubits - 1);
    std::uniform_real_distribution<double> angle_dist(-3.14159, 3.14159);
    for (std::size_t i = 0; i < gate_count; ++i) {
        ftqc::Gate g;
        g.kind = static_cast<ftqc::GateKind>(kind_dist(rng));
        g.q0 = qubit_dist(rng);
        if (ftqc::is_two_qubit(g.kind)) {
            do {
                g.q1 = qubit_dist(rng);
            } while (g.q1 == g.q0);
        }
        if (g.kind == ftqc::GateKind::RZ) g.angle = angle_dist(rng);
        list.gates.push_back(g);
        if (tally != nullptr) {
            switch (g.kind) {
                case ftqc::GateKind::T:
                case ftqc::GateKind::Tdg:
                    ++tally->t_gates;
                    break;
                case ftqc::GateKind::RZ:
                    ++tally->rotations;
                    break;
                case ftqc::GateKind::CNOT:
                case ftqc::GateKind::CZ: {
                    ++tally->two_qubit;
                    const auto lo = std::min(g.q0, g.q1);
                    const auto hi = std::max(g.q0, g.q1);
                    tally->pairs.insert({lo, hi});
                    if (g.kind == ftqc::GateKind::CNOT && hi - lo > remote_cutoff) {
                        ++tally->remote_cnots;
                    }
                    break;
                }
                default:
                    break;
            }
        }
    }
    return list;
}
