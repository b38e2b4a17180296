#include "ftqc/hardware.hpp"

#include <cmath>
#include <stdexcept>

namespace ftqc {

void EntanglementParameters::validate() const {
    for (double p : {p_bell, p_down, p_excite, p_decay_s, p_click}) {
        if (!(p > 0) || p > 1) {
            throw std::invalid_argument("entanglement probabilities must lie in (0,1]");
        }
    }
    if (!(attempt_rate_hz > 0)) throw std::invalid_argument("attempt rate must be > 0");
}

EntanglementParameters EntanglementParameters::from_json(const nlohmann::json& doc) {
    EntanglementParameters e;
    if (doc.contains("p_bell")) e.p_bell = doc.at("p_bell").get<double>();
    if (doc.contains("p_down")) e.p_down = doc.at("p_down").get<double>();
    if (doc.contains("p_excite")) e.p_excite = doc.at("p_excite").get<double>();
    if (doc.contains("p_decay_s")) e.p_decay_s = doc.at("p_decay_s").get<double>();
    if (doc.contains("p_click")) e.p_click = doc.at("p_click").get<double>();
    if (doc.contains("attempt_rate_hz")) e.attempt_rate_hz = doc.at("attempt_rate_hz").get<double>();
    e.validate();
    return e;
}

nlohmann::json EntanglementParameters::to_json() const {
    return {{"p_bell", p_bell},       {"p_down", p_down},
            {"p_excite", p_excite},   {"p_decay_s", p_decay_s},
            {"p_click", p_click},     {"attempt_rate_hz", attempt_rate_hz}};
}

void ELUSpec::validate() const {
    const count_t sum = checked_add(checked_add(communication_ions, computational_ions), memory_ions);
    if (total_ions != sum) {
        throw std::invalid_argument("ELU total_ions must equal the sum of its parts");
    }
    if (total_ions > max_ions_per_elu) {
        throw std::invalid_argument("ELU exceeds max_ions_per_elu");
    }
}

ELUSpec ELUSpec::from_json(const nlohmann::json& doc) {
    ELUSpec e;
    e.communication_ions = doc.at("communication_ions").get<count_t>();
    e.computational_ions = doc.at("computational_ions").get<count_t>();
    e.memory_ions = doc.at("memory_ions").get<count_t>();
    if (doc.contains("max_ions_per_elu")) {
        e.max_ions_per_elu = doc.at("max_ions_per_elu").get<count_t>();
    }
    if (doc.contains("total_ions")) {
        e.total_ions = doc.at("total_ions").get<count_t>();
    } else {
        e.total_ions = e.communication_ions + e.computational_ions + e.memory_ions;
    }
    e.validate();
    return e;
}

nlohmann::json ELUSpec::to_json() const {
    return {{"communication_ions", communication_ions},
            {"computational_ions", computational_ions},
            {"memory_ions", memory_ions},
            {"total_ions", total_ions},
            {"max_ions_per_elu", max_ions_per_elu}};
}

LayoutKind layout_kind_from_name(std::string_view name) {
    if (name == "two_row_bus") return LayoutKind::two_row_bus;
    if (name == "effective_all_to_all") return LayoutKind::effective_all_to_all;
    throw std::invalid_argument("unknown layout '" + std::string(name) + "'");
}

const char* layout_kind_name(LayoutKind k) {
    return k == LayoutKind::two_row_bus ? "two_row_bus" : "effective_all_to_all";
}

void HardwareModel::validate() const {
    if (!(scc_time_s > 0)) throw std::invalid_argument("scc_time must be > 0");
    if (!(qubits_per_logical_multiplier > 0)) {
        throw std::invalid_argument("qubits_per_logical multiplier must be > 0");
    }
    if (!(two_row_multiplier >= 1.0)) {
        throw std::invalid_argument("two-row multiplier must be >= 1");
    }
    entanglement.validate();
    if (detail == DetailLevel::detailed_elu) elu.validate();
}

double entanglement_success_probability(const EntanglementParameters& e) {
    e.validate();
    const double chain = e.p_down * e.p_excite * e.p_decay_s * e.p_click;
    return e.p_bell * chain * chain;
}

double normal_quantile(double p) {
    // Wichura's algorithm AS241 (PPND16).
    if (!(p > 0) || !(p < 1)) throw std::domain_error("normal_quantile: p must lie in (0,1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r + 1.0);
    }
    double r = q < 0 ? p : 1 - p;
    r = std::sqrt(-std::log(r));
    double v;
    if (r <= 5.0) {
        r -= 1.6;
        v = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        v = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0 ? -v : v;
}

namespace {

// P(X >= k_min) for X ~ Binomial(n, p), summed in log space.
double binomial_upper_tail(count_t n, double p, count_t k_min) {
    if (k_min == 0) return 1.0;
    if (k_min > n) return 0.0;
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    double cdf = 0.0;
    for (count_t k = 0; k < k_min; ++k) {
        const double log_pmf = std::lgamma(static_cast<double>(n) + 1) -
                               std::lgamma(static_cast<double>(k) + 1) -
                               std::lgamma(static_cast<double>(n - k) + 1) +
                               static_cast<double>(k) * log_p +
                               static_cast<double>(n - k) * log_q;
        cdf += std::exp(log_pmf);
    }
    return 1.0 - std::min(cdf, 1.0);
}

}  // namespace

count_t comm_ions_required(double entanglement_probability, double attempt_rate_hz,
                           double scc_time_s, double refined_pairs_per_scc,
                           double raw_per_refined, double confidence) {
    if (!(entanglement_probability > 0) || entanglement_probability > 1) {
        throw std::invalid_argument("comm_ions_required: P must lie in (0,1]");
    }
    if (!(attempt_rate_hz > 0) || !(scc_time_s > 0)) {
        throw std::invalid_argument("comm_ions_required: rate and SCC time must be positive");
    }
    if (refined_pairs_per_scc < 0 || !(raw_per_refined >= 1)) {
        throw std::invalid_argument("comm_ions_required: invalid demand parameters");
    }
    if (!(confidence > 0) || !(confidence < 1)) {
        throw std::invalid_argument("comm_ions_required: confidence must lie in (0,1)");
    }
    const double demand = refined_pairs_per_scc * raw_per_refined;
    if (demand == 0) return 0;

    const double attempts_per_ion = std::floor(attempt_rate_hz * scc_time_s);
    if (attempts_per_ion < 1) {
        throw std::domain_error("comm_ions_required: no attempt fits within one cycle");
    }
    const double z = normal_quantile(confidence);

    const auto satisfied = [&](count_t n) {
        const count_t attempts = checked_mul(n, static_cast<count_t>(attempts_per_ion));
        const double mean = static_cast<double>(attempts) * entanglement_probability;
        if (mean >= 30.0) {
            const double sigma =
                std::sqrt(mean * (1.0 - entanglement_probability));
            return mean - z * sigma >= demand;
        }
        return binomial_upper_tail(attempts, entanglement_probability,
                                   ceil_count(demand)) >= confidence;
    };

    const count_t n_bound = ceil_count(10.0 * demand / (entanglement_probability * attempts_per_ion));
    if (!satisfied(n_bound)) {
        throw std::domain_error("comm_ions_required: infeasible even at the 10x bound of " +
                                std::to_string(n_bound) + " ions");
    }
    // The predicate is monotone in n.
    count_t lo = 1, hi = n_bound;
    while (lo < hi) {
        const count_t mid = lo + (hi - lo) / 2;
        if (satisfied(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

count_t physical_qubits_basic(const CompiledLayout& layout, count_t d, const FactorySpec& factory,
                              double qubits_per_logical_multiplier) {
    const count_t per_logical =
        ceil_count(qubits_per_logical_multiplier * static_cast<double>(checked_mul(d, d)));
    return checked_add(checked_mul(layout.data_elus, per_logical),
                       checked_mul(layout.factory_elus, factory.physical_qubits_per_factory));
}

count_t physical_qubits_detailed(const CompiledLayout& layout, const ELUSpec& elu) {
    elu.validate();
    return checked_mul(checked_add(layout.data_elus, layout.factory_elus), elu.total_ions);
}

LayoutPenalty layout_penalty(LayoutKind kind, const LogicalCircuitProfile& profile,
                             count_t pair_budget_base, double two_row_multiplier) {
    if (!(two_row_multiplier >= 1.0)) {
        throw std::invalid_argument("layout_penalty: two-row multiplier must be >= 1");
    }
    LayoutPenalty penalty;
    if (kind == LayoutKind::two_row_bus) {
        penalty.multiplier = two_row_multiplier;
        return penalty;
    }
    const count_t budget = checked_mul(
        pair_budget_base,
        ceil_count(static_cast<double>(profile.algorithm_logical_qubits) / 994.0));
    if (profile.distinct_pair_count <= budget) {
        penalty.multiplier = 1.0;
    } else {
        // Photonic routing cannot serve this many distinct pairs at full
        // rate; fall back to the bus penalty and flag it.
        penalty.multiplier = two_row_multiplier;
        penalty.over_budget = true;
    }
    return penalty;
}

}  // namespace ftqc
