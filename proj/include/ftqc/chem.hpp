#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ftqc/numeric.hpp"

namespace ftqc {

// Boltzmann's constant in Hartree per Kelvin. The rate law divides
// per-particle energies in Hartree by k_B * T; the gas constant form of the
// law applies to molar energies only.
inline constexpr double kBoltzmannHartreePerKelvin = 3.166811563e-6;

enum class Species { I, XVIII, H2, H2O, CO2 };
enum class Method { DFT, HF, CASSCF, DMRG, SHCI };

Species species_from_name(std::string_view name);
Method method_from_name(std::string_view name);
const char* species_name(Species s);
const char* method_name(Method m);

// Small molecules carry one method-independent energy column and are shared
// across methods when a (species, method) pair is absent.
bool is_small_molecule(Species s);

struct EnergyRecord {
    Species species;
    Method method;
    double energy_hartree = 0.0;
    std::string source;
};

class ChemLedger {
  public:
    // CSV columns: species,method,energy_hartree,source
    static ChemLedger from_csv(std::istream& in);

    void add(const EnergyRecord& record);  // rejects duplicate (species, method)
    double energy(Species species, Method method) const;
    bool has(Species species, Method method) const;
    const std::vector<EnergyRecord>& records() const { return records_; }

  private:
    std::vector<EnergyRecord> records_;
};

// Exact product wall_hours * cores.
double cpu_hours(double wall_hours, count_t cores);

// E(XVIII) + E(H2O) - 2 E(H2) - E(I) - E(CO2) for one method.
double reaction_energy(const ChemLedger& ledger, Method method);

// exp(-(dE1 - dE2) / (k_B * T)); a lower dE1 yields a ratio > 1.
double rate_ratio(double delta_e_1, double delta_e_2, double temperature_kelvin);

struct ClassicalRunRecord {
    std::string system_label;
    count_t orbitals = 0;
    double wall_hours = 0.0;
    count_t cores = 0;
    double cpu_hours = 0.0;  // must equal wall_hours * cores exactly
    double uncertainty_mha = 0.0;
    char extrapolation_case = 'A';
};

// CSV columns: label,orbitals,wall_hours,cores,uncertainty_mha,case
std::vector<ClassicalRunRecord> load_run_records(std::istream& in);

// (orbitals, uncertainty_mHa), sorted by orbitals ascending.
std::vector<std::pair<count_t, double>> uncertainty_series(
    const std::vector<ClassicalRunRecord>& records);

}  // namespace ftqc
