#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ftqc/qec.hpp"

using namespace ftqc;

TEST_CASE("logical_error_per_cycle") {
    SUBCASE("direct powers") {
        CHECK(logical_error_per_cycle({1e-3, 1e-2, 0.1}, 3) == doctest::Approx(1e-3));
        CHECK(logical_error_per_cycle({1e-4, 1e-2, 0.1}, 13) == doctest::Approx(1e-15));
    }
    SUBCASE("increasing d by 2 multiplies by exactly p/p_th") {
        const CodeParameters c{1e-4, 1.3e-2, 0.1};
        for (count_t d = 3; d < 21; d += 2) {
            const double ratio = logical_error_per_cycle(c, d + 2) / logical_error_per_cycle(c, d);
            CHECK(ratio == doctest::Approx(c.physical_error_rate / c.threshold));
        }
    }
    SUBCASE("even or sub-3 distances rejected") {
        const CodeParameters c{1e-4, 1e-2, 0.1};
        CHECK_THROWS_AS(logical_error_per_cycle(c, 4), std::invalid_argument);
        CHECK_THROWS_AS(logical_error_per_cycle(c, 1), std::invalid_argument);
    }
    SUBCASE("strictly decreasing in d, increasing in p") {
        const CodeParameters c{1e-4, 1e-2, 0.1};
        CHECK(logical_error_per_cycle(c, 5) < logical_error_per_cycle(c, 3));
        const CodeParameters worse{2e-4, 1e-2, 0.1};
        CHECK(logical_error_per_cycle(worse, 5) > logical_error_per_cycle(c, 5));
    }
    SUBCASE("invariant 0 < p < p_th < 1 enforced") {
        CHECK_THROWS_AS(logical_error_per_cycle({1e-2, 1e-2, 0.1}, 3), std::invalid_argument);
        CHECK_THROWS_AS(logical_error_per_cycle({0, 1e-2, 0.1}, 3), std::invalid_argument);
    }
}

TEST_CASE("min_distance") {
    const CodeParameters ion{1e-4, 1e-2, 0.1};
    SUBCASE("smallest case") {
        const double budget = logical_error_per_cycle(ion, 3) * 1.5;
        CHECK(min_distance(ion, 1.0, budget) == 3);
    }
    SUBCASE("reconstructed headline distance") {
        CHECK(min_distance(ion, 7.6e11, 0.01) == 13);
        // One step below fails the budget.
        CHECK(logical_error_per_cycle(ion, 11) * 7.6e11 > 0.01);
        CHECK(logical_error_per_cycle(ion, 13) * 7.6e11 <= 0.01);
    }
    SUBCASE("monotone in volume") {
        count_t prev = 3;
        for (double volume = 1; volume < 1e15; volume *= 50) {
            const count_t d = min_distance(ion, volume, 0.01);
            CHECK(d >= prev);
            prev = d;
        }
    }
    SUBCASE("saturation reported") {
        const CodeParameters marginal{9.9e-3, 1e-2, 0.1};
        CHECK_THROWS_AS(min_distance(marginal, 1e12, 1e-9), std::domain_error);
    }
    SUBCASE("randomized instances verified against exhaustive scan") {
        std::mt19937_64 rng(13);
        std::uniform_real_distribution<double> p_dist(1e-5, 5e-3), th_dist(6e-3, 5e-2);
        std::uniform_real_distribution<double> vol_exp(0, 13), budget_exp(-4, -1);
        int checked = 0;
        for (int i = 0; i < 1000; ++i) {
            const double p = p_dist(rng);
            const double th = th_dist(rng);
            if (!(p < th)) continue;
            const CodeParameters c{p, th, 0.1};
            const double volume = std::pow(10.0, vol_exp(rng));
            const double budget = std::pow(10.0, budget_exp(rng));
            count_t expected = 0;
            for (count_t d = 3; d <= 99; d += 2) {
                if (logical_error_per_cycle(c, d) * volume <= budget) {
                    expected = d;
                    break;
                }
            }
            if (expected == 0) {
                CHECK_THROWS_AS(min_distance(c, volume, budget), std::domain_error);
            } else {
                const count_t d = min_distance(c, volume, budget);
                CHECK(d == expected);
                CHECK(d % 2 == 1);
                if (d > 3) {
                    CHECK(logical_error_per_cycle(c, d - 2) * volume > budget);
                }
            }
            ++checked;
        }
        CHECK(checked > 900);
    }
}

TEST_CASE("factory specifications") {
    const CodeParameters ion{1e-4, 1e-2, 0.1};
    SUBCASE("cultivation at nominal noise") {
        const auto f = factory(FactoryKind::cultivation, ion);
        CHECK(f.physical_qubits_per_factory == 9200);
        CHECK(f.parallel_attempts == 20);
        CHECK(f.physical_qubits_per_factory == f.parallel_attempts * 460);
        CHECK(f.output_error == doctest::Approx(4e-12));
        CHECK(f.warning.empty());
    }
    SUBCASE("cultivation above nominal noise is warning-flagged and extrapolated") {
        const auto f = factory(FactoryKind::cultivation, {5e-4, 1e-2, 0.1});
        CHECK(!f.warning.empty());
        CHECK(f.output_error == doctest::Approx(4e-11).epsilon(1e-6));
    }
    SUBCASE("distillation defaults at d=13") {
        const auto f = factory(FactoryKind::distillation, ion, 13);
        CHECK(f.physical_qubits_per_factory == 12 * 13 * 13);
        CHECK(f.cycles_per_magic_state == 11 * 13);
        CHECK(f.output_error == doctest::Approx(3.5e-11));
    }
    SUBCASE("unsupported kind rejected") {
        CHECK_THROWS_AS(factory_kind_from_name("teleportation"), std::invalid_argument);
    }
}

TEST_CASE("platform presets") {
    CHECK(platform_code(Platform::ion_trap).physical_error_rate == doctest::Approx(1e-4));
    CHECK(platform_code(Platform::ion_trap).threshold == doctest::Approx(1e-2));
    CHECK(platform_code(Platform::neutral_atom_conventional).threshold == doctest::Approx(1.3e-2));
    CHECK(platform_code(Platform::neutral_atom_erasure).threshold == doctest::Approx(4.15e-2));
    CHECK_THROWS_AS(platform_from_name("superconducting"), std::invalid_argument);
}

TEST_CASE("raising the threshold never increases the distance") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> vol_exp(0, 13), budget_exp(-4, -1);
    const auto conventional = platform_code(Platform::neutral_atom_conventional);
    const auto erasure = platform_code(Platform::neutral_atom_erasure);
    for (int i = 0; i < 300; ++i) {
        const double volume = std::pow(10.0, vol_exp(rng));
        const double budget = std::pow(10.0, budget_exp(rng));
        CHECK(min_distance(erasure, volume, budget) <= min_distance(conventional, volume, budget));
    }
}
