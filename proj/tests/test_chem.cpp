#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ftqc/chem.hpp"
#include "ftqc/fit.hpp"
#include "support/paths.hpp"

using namespace ftqc;

namespace {

ChemLedger fixture_ledger() {
    std::ifstream in(fixtures_root() / "chem" / "energies.csv");
    REQUIRE(in.good());
    return ChemLedger::from_csv(in);
}

std::vector<ClassicalRunRecord> fixture_runs() {
    std::ifstream in(fixtures_root() / "chem" / "runs.csv");
    REQUIRE(in.good());
    return load_run_records(in);
}

}  // namespace

TEST_CASE("reaction energies reproduce the reference table to 1e-5 Ha") {
    const auto ledger = fixture_ledger();
    const struct {
        Method method;
        double expected;
    } rows[] = {
        {Method::DFT, -0.02548}, {Method::HF, 0.420111},   {Method::CASSCF, 0.41225},
        {Method::DMRG, 0.441383}, {Method::SHCI, 0.443483},
    };
    for (const auto& row : rows) {
        CHECK(std::abs(reaction_energy(ledger, row.method) - row.expected) <= 1e-5);
    }
}

TEST_CASE("DFT is the sign outlier") {
    const auto ledger = fixture_ledger();
    CHECK(reaction_energy(ledger, Method::DFT) < 0);
    for (Method m : {Method::HF, Method::CASSCF, Method::DMRG, Method::SHCI}) {
        CHECK(reaction_energy(ledger, m) > 0);
    }
}

TEST_CASE("reaction_energy is linear in the ledger") {
    ChemLedger scaled;
    const double s = 2.5;
    for (const auto& r : fixture_ledger().records()) {
        EnergyRecord copy = r;
        copy.energy_hartree *= s;
        scaled.add(copy);
    }
    CHECK(reaction_energy(scaled, Method::SHCI) ==
          doctest::Approx(s * reaction_energy(fixture_ledger(), Method::SHCI)));

    ChemLedger zeros;
    for (const auto& r : fixture_ledger().records()) {
        EnergyRecord copy = r;
        copy.energy_hartree = 0;
        zeros.add(copy);
    }
    CHECK(reaction_energy(zeros, Method::DMRG) == 0.0);
}

TEST_CASE("missing species/method pair is an error") {
    ChemLedger ledger;
    ledger.add({Species::XVIII, Method::SHCI, -7475.44040, ""});
    CHECK_THROWS_AS(reaction_energy(ledger, Method::SHCI), std::invalid_argument);
}

TEST_CASE("duplicate (species, method) rejected") {
    ChemLedger ledger;
    ledger.add({Species::H2, Method::DFT, -1.16721, ""});
    CHECK_THROWS_AS(ledger.add({Species::H2, Method::DFT, -1.2, ""}), std::invalid_argument);
}

TEST_CASE("SHCI-DMRG gap for XVIII is 1.2 mHa") {
    const auto ledger = fixture_ledger();
    const double gap = std::abs(ledger.energy(Species::XVIII, Method::SHCI) -
                                ledger.energy(Species::XVIII, Method::DMRG));
    CHECK(std::abs(gap - 1.17e-3) <= 0.05e-3);
}

TEST_CASE("cpu_hours") {
    CHECK(cpu_hours(0.5, 0) == 0.0);
    CHECK(cpu_hours(0.1631, 1024) == doctest::Approx(167.0144));
    CHECK(std::abs(cpu_hours(0.1631, 1024) - 167.0) / 167.0 < 0.03);
    // Power-of-two core counts multiply exactly.
    CHECK(cpu_hours(0.1630859375, 1024) == 167.0);
    CHECK_THROWS_AS(cpu_hours(-1.0, 4), std::invalid_argument);
}

TEST_CASE("run records carry exact cpu_hours") {
    const auto runs = fixture_runs();
    REQUIRE(runs.size() == 3);
    for (const auto& r : runs) {
        CHECK(r.cpu_hours == r.wall_hours * static_cast<double>(r.cores));
    }
    CHECK(runs[0].cpu_hours == 167.0);
    CHECK(runs[1].cpu_hours == 668.0);
    CHECK(runs[2].cpu_hours == 7056.0);
    // 7056 CPU-hours over 24 lands within 0.2% of the published 294.4 days.
    CHECK(std::abs(runs[2].cpu_hours / 24.0 - 294.4) / 294.4 < 0.002);
    CHECK(runs[0].extrapolation_case == 'B');
    CHECK(runs[1].extrapolation_case == 'A');
}

TEST_CASE("rate ratio") {
    CHECK(rate_ratio(0.443, 0.443, 300.0) == 1.0);
    // 1 mHa advantage at 300 K.
    CHECK(rate_ratio(0.442483, 0.443483, 300.0) == doctest::Approx(2.865).epsilon(1e-3));
    CHECK(rate_ratio(0.442, 0.443, 300.0) > 1.0);
    CHECK(rate_ratio(0.444, 0.443, 300.0) < 1.0);
    CHECK_THROWS_AS(rate_ratio(0.1, 0.2, 0.0), std::domain_error);
    CHECK_THROWS_AS(rate_ratio(0.1, 0.2, -10.0), std::domain_error);
}

TEST_CASE("uncertainty series grows with system size") {
    const auto series = uncertainty_series(fixture_runs());
    REQUIRE(series.size() == 3);
    CHECK(series[0] == std::pair<count_t, double>{56, 0.05});
    CHECK(series[1] == std::pair<count_t, double>{100, 0.3});
    CHECK(series[2] == std::pair<count_t, double>{150, 7.0});
    CHECK(series[0].second < series[1].second);
    CHECK(series[1].second < series[2].second);

    const auto single = uncertainty_series({fixture_runs()[0]});
    CHECK(single.size() == 1);
}

TEST_CASE("extrapolation-to-zero fixture reproduces the published intercept") {
    std::ifstream in(fixtures_root() / "chem" / "extrapolation_xviii_56o.csv");
    REQUIRE(in.good());
    std::vector<std::pair<double, double>> points;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        points.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    REQUIRE(points.size() == 4);
    const auto fit = fit_linear(points);
    CHECK(fit.intercept_or_prefactor == doctest::Approx(-7475.4404).epsilon(1e-9));
}

TEST_CASE("ledger CSV loader validates") {
    std::istringstream bad("species,method,energy_hartree,source\nXX,DFT,-1.0,x\n");
    CHECK_THROWS_AS(ChemLedger::from_csv(bad), std::invalid_argument);
    std::istringstream short_row("XVIII,DFT\n");
    CHECK_THROWS_AS(ChemLedger::from_csv(short_row), std::invalid_argument);
    std::istringstream bad_case("label,orbitals,wall_hours,cores,uncertainty_mha,case\nx,56,1,4,0.1,D\n");
    CHECK_THROWS_AS(load_run_records(bad_case), std::invalid_argument);
}
