#include "ftqc/transform.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace ftqc {

void ReductionFactors::validate() const {
    for (double f : {f_t, f_two_qubit, f_remote, f_subroutines}) {
        if (!(f >= 1.0)) throw std::invalid_argument("reduction factors must be >= 1");
    }
}

ReductionFactors ReductionFactors::from_json(const nlohmann::json& doc) {
    ReductionFactors f;
    if (doc.contains("f_t")) f.f_t = doc.at("f_t").get<double>();
    if (doc.contains("f_two_qubit")) f.f_two_qubit = doc.at("f_two_qubit").get<double>();
    if (doc.contains("f_remote")) f.f_remote = doc.at("f_remote").get<double>();
    if (doc.contains("f_subroutines")) f.f_subroutines = doc.at("f_subroutines").get<double>();
    f.validate();
    return f;
}

nlohmann::json ReductionFactors::to_json() const {
    return {{"f_t", f_t},
            {"f_two_qubit", f_two_qubit},
            {"f_remote", f_remote},
            {"f_subroutines", f_subroutines}};
}

LogicalCircuitProfile apply_reduction(const LogicalCircuitProfile& profile,
                                      const ReductionFactors& f) {
    profile.validate();
    f.validate();
    LogicalCircuitProfile out = profile;
    out.t_per_block_encoding =
        ceil_count(static_cast<double>(profile.t_per_block_encoding) / f.f_t);
    out.two_qubit_per_block =
        ceil_count(static_cast<double>(profile.two_qubit_per_block) / f.f_two_qubit);
    out.remote_cnot_per_block =
        std::min(ceil_count(static_cast<double>(profile.remote_cnot_per_block) / f.f_remote),
                 out.two_qubit_per_block);
    out.label = profile.label + "+zx";
    out.validate();
    return out;
}

namespace {

// One rewrite step: what does `prev` followed by `cur` on the same wire
// become? nullopt = no rule; empty Gate optional conveyed via `erased`.
struct RewriteResult {
    bool erased = false;       // both gates removed
    Gate fused;                // valid when fuse == true
    bool fuse = false;
};

std::optional<RewriteResult> rewrite_pair(const Gate& prev, const Gate& cur) {
    const auto inverse = [&](GateKind a, GateKind b) {
        return (prev.kind == a && cur.kind == b) || (prev.kind == b && cur.kind == a);
    };
    RewriteResult r;
    if (inverse(GateKind::T, GateKind::Tdg) || inverse(GateKind::S, GateKind::Sdg) ||
        (prev.kind == GateKind::H && cur.kind == GateKind::H) ||
        (prev.kind == GateKind::X && cur.kind == GateKind::X) ||
        (prev.kind == GateKind::Z && cur.kind == GateKind::Z)) {
        r.erased = true;
        return r;
    }
    if (prev.kind == GateKind::T && cur.kind == GateKind::T) {
        r.fuse = true;
        r.fused = Gate{GateKind::S, cur.q0, 0, 0.0};
        return r;
    }
    if (prev.kind == GateKind::S && cur.kind == GateKind::S) {
        r.fuse = true;
        r.fused = Gate{GateKind::Z, cur.q0, 0, 0.0};
        return r;
    }
    return std::nullopt;
}

GateList cancel_pass(const GateList& g) {
    struct Op {
        Gate gate;
        bool alive = true;
    };
    std::vector<Op> ops;
    ops.reserve(g.gates.size());
    // Per-wire stack of indices into ops; top is the latest alive gate on
    // that wire.
    std::vector<std::vector<std::size_t>> wire(g.qubit_count);

    const auto push = [&](const Gate& gate) {
        ops.push_back({gate, true});
        wire[gate.q0].push_back(ops.size() - 1);
        if (is_two_qubit(gate.kind)) wire[gate.q1].push_back(ops.size() - 1);
    };

    for (const Gate& gate : g.gates) {
        if (!is_two_qubit(gate.kind)) {
            if (gate.kind == GateKind::RZ) {
                push(gate);
                continue;
            }
            Gate cur = gate;
            for (;;) {
                auto& stack = wire[cur.q0];
                if (stack.empty()) {
                    push(cur);
                    break;
                }
                Op& prev = ops[stack.back()];
                if (is_two_qubit(prev.gate.kind)) {
                    push(cur);
                    break;
                }
                auto rw = rewrite_pair(prev.gate, cur);
                if (!rw) {
                    push(cur);
                    break;
                }
                prev.alive = false;
                stack.pop_back();
                if (rw->erased) break;
                cur = rw->fused;  // retry the fused gate against the new top
            }
        } else {
            auto& s0 = wire[gate.q0];
            auto& s1 = wire[gate.q1];
            bool cancelled = false;
            if (gate.kind == GateKind::CNOT && !s0.empty() && !s1.empty() &&
                s0.back() == s1.back()) {
                Op& prev = ops[s0.back()];
                if (prev.gate.kind == GateKind::CNOT && prev.gate.q0 == gate.q0 &&
                    prev.gate.q1 == gate.q1) {
                    prev.alive = false;
                    s0.pop_back();
                    s1.pop_back();
                    cancelled = true;
                }
            }
            if (!cancelled) push(gate);
        }
    }

    GateList out;
    out.qubit_count = g.qubit_count;
    for (const Op& op : ops) {
        if (op.alive) out.gates.push_back(op.gate);
    }
    return out;
}

}  // namespace

GateList peephole_cancel(const GateList& g) {
    GateList cur = g;
    for (std::size_t pass = 0; pass <= g.gates.size(); ++pass) {
        GateList next = cancel_pass(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    return cur;
}

}  // namespace ftqc
