#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftqc/errors.hpp"
#include "ftqc/estimator.hpp"
#include "support/paths.hpp"

using namespace ftqc;

namespace {

const PresetDirectory& presets() {
    static PresetDirectory dir(preset_root());
    return dir;
}

Scenario load_scenario(const std::string& name) {
    return presets().scenario(preset_root() / "scenarios" / (name + ".json"));
}

}  // namespace

TEST_CASE("pipeline identity: trivial demand, identity reductions, gamma 1") {
    // With unit model parameters the runtime collapses to
    // total_cycles * scc_time exactly.
    Scenario s = load_scenario("unit-pipeline");
    const auto e = estimate(s, presets());
    const double scc = e.provenance.at("scc_time_s").get<double>();
    CHECK(e.runtime_seconds == static_cast<double>(e.cycles.total_cycles) * scc);
    CHECK(e.runtime_days == e.runtime_seconds / 86400.0);
}

TEST_CASE("headline 56-orbital ion-trap estimate") {
    const auto e = estimate(load_scenario("paper-56o-ion"), presets());
    CHECK(std::abs(e.runtime_days - 1.0) <= 0.10);
    CHECK(e.code_distance == 13);
    CHECK(e.physical_qubits_basic == 1780016);
    REQUIRE(e.physical_qubits_detailed.has_value());
    CHECK(*e.physical_qubits_detailed == 5064220);
    // The detailed model adds communication/memory overhead on top of the
    // basic count.
    CHECK(*e.physical_qubits_detailed >= e.physical_qubits_basic);
}

TEST_CASE("headline 56-orbital neutral-atom estimate") {
    const auto e = estimate(load_scenario("paper-56o-na"), presets());
    CHECK(std::abs(e.runtime_days - 0.73) <= 0.073);
    CHECK(e.code_distance == 9);
    CHECK(std::abs(static_cast<double>(e.physical_qubits_basic) - 758000.0) / 758000.0 <= 0.10);
    CHECK(!e.physical_qubits_detailed.has_value());
}

TEST_CASE("estimate is deterministic") {
    const Scenario s = load_scenario("paper-56o-ion");
    const auto a = estimate(s, presets());
    const auto b = estimate(s, presets());
    CHECK(estimate_to_json(a).dump() == estimate_to_json(b).dump());
    CHECK(a.runtime_seconds == b.runtime_seconds);
}

TEST_CASE("overlap adjustment divides runtime by gamma exactly") {
    Scenario s = load_scenario("paper-56o-ion");
    const auto plain = estimate(s, presets());
    s.overlap_enabled = true;
    const auto adjusted = estimate(s, presets());
    CHECK(adjusted.runtime_seconds == plain.runtime_seconds / s.algorithm.overlap_gamma);
    CHECK(adjusted.physical_qubits_basic == plain.physical_qubits_basic);
    CHECK(adjusted.physical_qubits_detailed == plain.physical_qubits_detailed);
    CHECK(std::abs(adjusted.runtime_days - 1.1) <= 0.05);
}

TEST_CASE("disabling dfthc without a DF profile is a configuration error") {
    Scenario s = load_scenario("paper-56o-ion");
    s.flags.dfthc = false;
    s.profile_df.reset();
    CHECK_THROWS_AS(estimate(s, presets()), config_error);
}

TEST_CASE("layer errors carry the layer tag") {
    Scenario s = load_scenario("paper-56o-ion");
    s.profile.t_per_block_encoding = 0;
    s.profile.rotation_count_per_block = 0;
    try {
        estimate(s, presets());
        FAIL("expected a tagged layer error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("[gsc]") != std::string::npos);
    }
}

TEST_CASE("calibration replay flows through the pipeline unchanged") {
    const auto pre = estimate(load_scenario("small-instance-pre-zx"), presets());
    CHECK(pre.cycles.total_cycles == 910966400);
    CHECK(pre.provenance.at("cycle_mode") == "replay");
    CHECK(pre.runtime_seconds == 910966400 * 1e-4);

    const auto post = estimate(load_scenario("small-instance-post-zx"), presets());
    CHECK(post.cycles.total_cycles == 383672200);
    // The optimized column also reflects the reduced per-block counts.
    CHECK(post.provenance.at("profile_after_zx").at("t_per_block") == 22500);
    CHECK(post.provenance.at("profile_after_zx").at("two_qubit_per_block") == 363);
    CHECK(post.provenance.at("profile_after_zx").at("remote_cnot_per_block") == 278);
}

TEST_CASE("naive GSC settings multiply the runtime") {
    Scenario s = load_scenario("paper-56o-ion");
    const auto tuned = estimate(s, presets());
    s.calibration_preset = "naive-gsc-56o";
    const auto naive = estimate(s, presets());
    CHECK(naive.runtime_seconds == doctest::Approx(25.0 * tuned.runtime_seconds));
}

TEST_CASE("shipped ablation fixtures reproduce the published ordering") {
    const std::vector<std::string> names = {"s1", "s3", "s4",  "s6",  "s7",
                                            "s8", "s9", "s10", "s11", "s13"};
    std::vector<Scenario> scenarios;
    for (const auto& n : names) scenarios.push_back(load_scenario(n));
    const auto rows = ablation_table(scenarios, presets());
    REQUIRE(rows.size() == names.size());

    // Sorted by runtime descending.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i - 1].estimate.runtime_days >= rows[i].estimate.runtime_days);
    }
    CHECK(rows.front().scenario == "S13");
    CHECK(rows.back().scenario == "S1");

    const auto runtime_of = [&](const std::string& name) {
        for (const auto& row : rows) {
            if (row.scenario == name) return row.estimate.runtime_days;
        }
        FAIL("missing scenario ", name);
        return 0.0;
    };
    // Published day values, each within 2%.
    const struct {
        const char* name;
        double days;
    } expected[] = {
        {"S1", 1.0},    {"S3", 2.6},   {"S4", 57.8},    {"S6", 1.4},   {"S7", 243.5},
        {"S8", 27.8},   {"S9", 513.1}, {"S10", 513.1},  {"S11", 324.3}, {"S13", 29950.5},
    };
    for (const auto& row : expected) {
        CHECK(std::abs(runtime_of(row.name) - row.days) / row.days <= 0.02);
    }
}

TEST_CASE("single-flag ratios and tie-breaking") {
    const std::vector<std::string> names = {"s9", "s10"};
    std::vector<Scenario> scenarios;
    for (const auto& n : names) scenarios.push_back(load_scenario(n));
    auto rows = ablation_table(scenarios, presets());
    // Equal runtimes: fewer enabled flags first (S9 has 1, S10 has 2).
    CHECK(rows[0].scenario == "S9");
    CHECK(rows[1].scenario == "S10");
    const auto ratios = single_flag_ratios(rows);
    REQUIRE(ratios.size() == 1);
    CHECK(ratios[0].flag == "msc");
    CHECK(ratios[0].runtime_ratio == doctest::Approx(1.0));
}

TEST_CASE("predictive grid under one shared preset preserves flag monotonicity") {
    Scenario base = load_scenario("shared-predictive");
    std::vector<FeatureFlags> sets;
    for (int mask = 0; mask < 16; ++mask) {
        FeatureFlags f;
        f.dfthc = mask & 1;
        f.zx = mask & 2;
        f.a2a = mask & 4;
        f.msc = mask & 8;
        sets.push_back(f);
    }
    const auto rows = ablation_grid(base, sets, presets());
    REQUIRE(rows.size() == 16);
    for (const auto& ratio : single_flag_ratios(rows)) {
        // Enabling any single innovation never increases runtime.
        CHECK(ratio.runtime_ratio >= 1.0);
    }
    // Degenerate grid of one equals estimate().
    const auto single = ablation_grid(base, {base.flags}, presets());
    REQUIRE(single.size() == 1);
    const auto direct = estimate(base, presets());
    CHECK(single[0].estimate.runtime_seconds == direct.runtime_seconds);
}
