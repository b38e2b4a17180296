#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "ftqc/algorithm.hpp"
#include "support/random_circuits.hpp"

using namespace ftqc;

TEST_CASE("repetitions = ceil(pi*lambda/(2*eps))") {
    SUBCASE("formula equal to exactly one") {
        const double eps = 1e-3;
        CHECK(repetitions(2 * eps / std::numbers::pi, eps) == 1);
    }
    SUBCASE("one Hartree at one milli-Hartree") {
        CHECK(repetitions(1.0, 1e-3) == 1571);  // ceil(1570.796...)
    }
    SUBCASE("non-positive arguments rejected") {
        CHECK_THROWS_AS(repetitions(0.0, 1e-3), std::domain_error);
        CHECK_THROWS_AS(repetitions(1.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(repetitions(-1.0, 1e-3), std::domain_error);
    }
    SUBCASE("monotone in lambda and epsilon") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> lam(1e-3, 50.0), eps(1e-5, 1e-2);
        for (int i = 0; i < 200; ++i) {
            const double l = lam(rng), e = eps(rng);
            CHECK(repetitions(l * 1.5, e) >= repetitions(l, e));
            CHECK(repetitions(l, e / 2) >= repetitions(l, e));
        }
    }
    SUBCASE("halving epsilon at least doubles repetitions up to ceiling") {
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> lam(1e-3, 50.0), eps(1e-5, 1e-2);
        for (int i = 0; i < 200; ++i) {
            const double l = lam(rng), e = eps(rng);
            CHECK(repetitions(l, e / 2) >= 2 * repetitions(l, e) - 1);
        }
    }
}

TEST_CASE("total_t") {
    AlgorithmSpec spec;
    SUBCASE("identity case") {
        LogicalCircuitProfile p;
        p.algorithm_logical_qubits = 4;
        p.t_per_block_encoding = 10;
        p.block_encodings = 1;
        CHECK(total_t(p, spec) == 10);
    }
    SUBCASE("small instance replay lands within 0.7% of 8.35e7") {
        LogicalCircuitProfile p;
        p.algorithm_logical_qubits = 129;
        p.t_per_block_encoding = 27500;
        p.block_encodings = 3017;
        const count_t total = total_t(p, spec);
        CHECK(total == 82967500ULL);
        CHECK(std::abs(static_cast<double>(total) - 8.35e7) / 8.35e7 < 0.007);
    }
    SUBCASE("rotations expand by rotation_t_cost") {
        LogicalCircuitProfile p;
        p.algorithm_logical_qubits = 8;
        p.t_per_block_encoding = 100;
        p.rotation_count_per_block = 7;
        p.block_encodings = 3;
        spec.rotation_t_cost = 30;
        CHECK(total_t(p, spec) == (100 + 7 * 30) * 3);
    }
    SUBCASE("lambda-driven mode derives repetitions") {
        LogicalCircuitProfile p;
        p.algorithm_logical_qubits = 8;
        p.t_per_block_encoding = 50;
        p.block_encodings = 0;  // unset
        spec.lambda_1norm = 1.0;
        spec.epsilon_target = 1e-3;
        CHECK(total_t(p, spec) == 50 * 1571);
    }
    SUBCASE("unset repetitions without lambda is an error") {
        LogicalCircuitProfile p;
        p.algorithm_logical_qubits = 8;
        p.t_per_block_encoding = 50;
        p.block_encodings = 0;
        CHECK_THROWS_AS(total_t(p, spec), std::invalid_argument);
    }
    SUBCASE("overflow is guarded") {
        LogicalCircuitProfile p;
        p.algorithm_logical_qubits = 8;
        p.t_per_block_encoding = count_t(1) << 62;
        p.block_encodings = 8;
        CHECK_THROWS_AS(total_t(p, spec), std::overflow_error);
    }
    SUBCASE("random profiles match a brute-force expansion oracle") {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<count_t> small(0, 400), blocks(1, 40), cost(1, 60);
        for (int i = 0; i < 100; ++i) {
            LogicalCircuitProfile p;
            p.algorithm_logical_qubits = 4;
            p.t_per_block_encoding = small(rng);
            p.rotation_count_per_block = small(rng);
            p.block_encodings = blocks(rng);
            spec.rotation_t_cost = cost(rng);
            // Expansion oracle: lay the block out gate by gate, then repeat.
            count_t expanded = 0;
            for (count_t b = 0; b < p.block_encodings; ++b) {
                for (count_t t = 0; t < p.t_per_block_encoding; ++t) expanded += 1;
                for (count_t r = 0; r < p.rotation_count_per_block; ++r) {
                    expanded += spec.rotation_t_cost;
                }
            }
            CHECK(total_t(p, spec) == expanded);
        }
    }
    SUBCASE("linear in block encodings") {
        LogicalCircuitProfile p;
        p.algorithm_logical_qubits = 4;
        p.t_per_block_encoding = 123;
        p.rotation_count_per_block = 4;
        p.block_encodings = 7;
        const count_t one = [&] {
            auto q = p;
            q.block_encodings = 1;
            return total_t(q, spec);
        }();
        CHECK(total_t(p, spec) == 7 * one);
    }
}

TEST_CASE("apply_overlap") {
    CHECK(apply_overlap(1.0, 0.91) == doctest::Approx(1.0989).epsilon(1e-3));
    CHECK(apply_overlap(8.7, 0.74) == doctest::Approx(11.7568).epsilon(1e-3));
    CHECK(apply_overlap(3.25, 1.0) == 3.25);  // exact identity
    CHECK_THROWS_AS(apply_overlap(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(apply_overlap(1.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(apply_overlap(1.0, 1.5), std::domain_error);

    // Strictly decreasing in gamma.
    double prev = apply_overlap(2.0, 0.2);
    for (double gamma = 0.3; gamma <= 1.0; gamma += 0.1) {
        const double cur = apply_overlap(2.0, gamma);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("fit_power_exponent") {
    SUBCASE("exact linear series gives 1") {
        CHECK(fit_power_exponent({{2, 6}, {4, 12}, {8, 24}}) == doctest::Approx(1.0));
    }
    SUBCASE("exact quadratic series gives 2") {
        CHECK(fit_power_exponent({{2, 4}, {4, 16}}) == doctest::Approx(2.0));
    }
    SUBCASE("instance totals scale superlinearly") {
        const double e = fit_power_exponent({{56, 8.2e8}, {100, 4.24e9}, {150, 1.12e10}});
        CHECK(e == doctest::Approx(2.66).epsilon(0.01));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(fit_power_exponent({{2, 4}}), std::invalid_argument);
        CHECK_THROWS_AS(fit_power_exponent({{2, 4}, {4, -1}}), std::invalid_argument);
        CHECK_THROWS_AS(fit_power_exponent({{2, 4}, {2, 8}}), std::invalid_argument);
    }
}

TEST_CASE("algorithm spec validation") {
    AlgorithmSpec spec;
    spec.epsilon_target = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.epsilon_target = 1e-3;
    spec.overlap_gamma = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.overlap_gamma = 0.5;
    spec.lambda_1norm = -2.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.lambda_1norm = 2.0;
    CHECK_NOTHROW(spec.validate());
}
