#include "ftqc/gsc.hpp"

#include <stdexcept>

namespace ftqc {

void GSCHyperparameters::validate() const {
    if (teleportation_threshold == 0 || min_neighbor_degree == 0 ||
        max_neighbors_to_search == 0 || teleportation_distance == 0) {
        throw std::invalid_argument("GSC hyperparameters must be positive");
    }
}

GSCHyperparameters GSCHyperparameters::from_json(const nlohmann::json& doc) {
    GSCHyperparameters p;
    if (doc.contains("teleportation_threshold")) {
        p.teleportation_threshold = doc.at("teleportation_threshold").get<count_t>();
    }
    if (doc.contains("min_neighbor_degree")) {
        p.min_neighbor_degree = doc.at("min_neighbor_degree").get<count_t>();
    }
    if (doc.contains("max_neighbors_to_search")) {
        p.max_neighbors_to_search = doc.at("max_neighbors_to_search").get<count_t>();
    }
    if (doc.contains("use_fully_optimized_dag")) {
        p.use_fully_optimized_dag = doc.at("use_fully_optimized_dag").get<bool>();
    }
    if (doc.contains("teleportation_distance")) {
        p.teleportation_distance = doc.at("teleportation_distance").get<count_t>();
    }
    p.validate();
    return p;
}

nlohmann::json GSCHyperparameters::to_json() const {
    return {{"teleportation_threshold", teleportation_threshold},
            {"min_neighbor_degree", min_neighbor_degree},
            {"max_neighbors_to_search", max_neighbors_to_search},
            {"use_fully_optimized_dag", use_fully_optimized_dag},
            {"teleportation_distance", teleportation_distance}};
}

CompiledLayout compile_expansion(const LogicalCircuitProfile& profile,
                                 const GSCHyperparameters& params,
                                 std::optional<double> expansion_ratio) {
    params.validate();
    if (profile.algorithm_logical_qubits == 0) {
        throw std::invalid_argument("compile_expansion: profile has no logical qubits");
    }
    const double ratio = expansion_ratio.value_or(kDefaultExpansionRatio);
    if (!(ratio >= 1.0)) {
        throw std::invalid_argument("compile_expansion: expansion ratio must be >= 1");
    }
    CompiledLayout layout;
    layout.expansion_ratio = ratio;
    layout.compiled_logical_qubits =
        ceil_count(ratio * static_cast<double>(profile.algorithm_logical_qubits));
    layout.data_elus = layout.compiled_logical_qubits;
    return layout;
}

CycleAllocation allocate_cycles(count_t t_total, const CompiledLayout& layout,
                                count_t code_distance, const CycleModelParameters& model) {
    if (t_total == 0) throw std::invalid_argument("allocate_cycles: t_total must be positive");
    if (model.factory_count == 0) throw std::invalid_argument("allocate_cycles: zero factories");
    if (!(model.cycles_per_t_meas > 0) || !(model.cycles_per_magic_state > 0) ||
        !(model.prep_cycles_per_compiled_qubit > 0) || !(model.combined_fraction >= 0)) {
        throw std::invalid_argument("allocate_cycles: model parameters must be positive");
    }
    if (code_distance == 0) throw std::invalid_argument("allocate_cycles: zero code distance");

    CycleAllocation a;
    a.t_measurement_cycles = ceil_count(static_cast<double>(t_total) * model.cycles_per_t_meas);
    a.distillation_cycles = ceil_count(static_cast<double>(t_total) * model.cycles_per_magic_state /
                                       static_cast<double>(model.factory_count));
    a.graph_prep_cycles = ceil_count(static_cast<double>(layout.compiled_logical_qubits) *
                                     model.prep_cycles_per_compiled_qubit *
                                     static_cast<double>(code_distance));
    a.combined_prep_distill_cycles = ceil_count(
        model.combined_fraction *
        static_cast<double>(checked_add(a.graph_prep_cycles, a.distillation_cycles)));
    a.total_cycles = checked_add(checked_add(a.t_measurement_cycles, a.distillation_cycles),
                                 checked_add(a.graph_prep_cycles, a.combined_prep_distill_cycles));
    return a;
}

CycleAllocation replay_cycles(count_t t_measurement, count_t distillation, count_t graph_prep,
                              count_t combined_prep_distill) {
    CycleAllocation a;
    a.t_measurement_cycles = t_measurement;
    a.distillation_cycles = distillation;
    a.graph_prep_cycles = graph_prep;
    a.combined_prep_distill_cycles = combined_prep_distill;
    a.total_cycles = checked_add(checked_add(t_measurement, distillation),
                                 checked_add(graph_prep, combined_prep_distill));
    return a;
}

}  // namespace ftqc
