#include "ftqc/profile.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace ftqc {

void LogicalCircuitProfile::validate() const {
    if (remote_cnot_per_block > two_qubit_per_block) {
        throw std::invalid_argument("profile '" + label +
                                    "': remote_cnot_per_block exceeds two_qubit_per_block");
    }
    if (algorithm_logical_qubits > 0) {
        const double max_pairs =
            0.5 * static_cast<double>(algorithm_logical_qubits) *
            static_cast<double>(algorithm_logical_qubits - 1);
        if (static_cast<double>(distinct_pair_count) > max_pairs) {
            throw std::invalid_argument("profile '" + label +
                                        "': distinct_pair_count exceeds qubit pair capacity");
        }
    } else if (distinct_pair_count > 0) {
        throw std::invalid_argument("profile '" + label + "': pairs without qubits");
    }
}

LogicalCircuitProfile extract_profile(const GateList& g, std::uint32_t remote_cutoff) {
    LogicalCircuitProfile p;
    p.algorithm_logical_qubits = g.qubit_count;
    std::unordered_set<std::uint64_t> pairs;
    for (const Gate& gate : g.gates) {
        switch (gate.kind) {
            case GateKind::T:
            case GateKind::Tdg:
                ++p.t_per_block_encoding;
                break;
            case GateKind::RZ:
                ++p.rotation_count_per_block;
                break;
            case GateKind::CNOT:
            case GateKind::CZ: {
                ++p.two_qubit_per_block;
                const std::uint32_t lo = std::min(gate.q0, gate.q1);
                const std::uint32_t hi = std::max(gate.q0, gate.q1);
                pairs.insert((static_cast<std::uint64_t>(lo) << 32) | hi);
                if (gate.kind == GateKind::CNOT &&
                    hi - lo > remote_cutoff) {
                    ++p.remote_cnot_per_block;
                }
                break;
            }
            default:
                break;
        }
    }
    p.distinct_pair_count = pairs.size();
    p.block_encodings = 1;
    p.validate();
    return p;
}

namespace {

count_t json_count(const nlohmann::json& doc, const char* key) {
    const auto& v = doc.at(key);
    if (!v.is_number()) {
        throw std::invalid_argument(std::string("proxy profile: '") + key + "' is not a number");
    }
    const double d = v.get<double>();
    if (d < 0) {
        throw std::invalid_argument(std::string("proxy profile: negative count for '") + key + "'");
    }
    const double r = std::round(d);
    if (std::abs(d - r) > 1e-6 * std::max(1.0, std::abs(d)) || r >= 1.8e19) {
        throw std::invalid_argument(std::string("proxy profile: '") + key +
                                    "' is not a representable count");
    }
    return static_cast<count_t>(r);
}

}  // namespace

LogicalCircuitProfile load_proxy_profile(const nlohmann::json& doc) {
    LogicalCircuitProfile p;
    if (doc.contains("label")) p.label = doc.at("label").get<std::string>();
    if (!doc.contains("qubits")) {
        throw std::invalid_argument("proxy profile: missing mandatory key 'qubits'");
    }
    p.algorithm_logical_qubits = json_count(doc, "qubits");

    if (doc.contains("t_total")) {
        p.t_per_block_encoding = json_count(doc, "t_total");
        p.block_encodings = 1;
        if (doc.contains("t_per_block") || doc.contains("block_encodings")) {
            throw std::invalid_argument(
                "proxy profile: 't_total' conflicts with per-block T keys");
        }
    } else if (doc.contains("t_per_block")) {
        p.t_per_block_encoding = json_count(doc, "t_per_block");
        if (doc.contains("block_encodings")) {
            p.block_encodings = json_count(doc, "block_encodings");
        } else {
            p.block_encodings = 0;  // unset; algorithm layer must supply repetitions
            p.defaulted_fields.push_back("block_encodings");
        }
    } else {
        throw std::invalid_argument(
            "proxy profile: missing mandatory key 't_total' (or 't_per_block')");
    }

    const auto optional_count = [&](const char* key, count_t& field) {
        if (doc.contains(key)) {
            field = json_count(doc, key);
        } else {
            field = 0;
            p.defaulted_fields.push_back(key);
        }
    };
    optional_count("two_qubit_per_block", p.two_qubit_per_block);
    optional_count("remote_cnot_per_block", p.remote_cnot_per_block);
    optional_count("distinct_pairs", p.distinct_pair_count);
    optional_count("rotations_per_block", p.rotation_count_per_block);

    p.validate();
    return p;
}

nlohmann::json profile_to_json(const LogicalCircuitProfile& p) {
    nlohmann::json doc = {
        {"label", p.label},
        {"qubits", p.algorithm_logical_qubits},
        {"t_per_block", p.t_per_block_encoding},
        {"block_encodings", p.block_encodings},
        {"two_qubit_per_block", p.two_qubit_per_block},
        {"remote_cnot_per_block", p.remote_cnot_per_block},
        {"distinct_pairs", p.distinct_pair_count},
        {"rotations_per_block", p.rotation_count_per_block},
    };
    if (!p.defaulted_fields.empty()) doc["defaulted_fields"] = p.defaulted_fields;
    return doc;
}

}  // namespace ftqc
