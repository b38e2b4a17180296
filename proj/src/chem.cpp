#include "ftqc/chem.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace ftqc {

Species species_from_name(std::string_view name) {
    if (name == "I") return Species::I;
    if (name == "XVIII") return Species::XVIII;
    if (name == "H2") return Species::H2;
    if (name == "H2O") return Species::H2O;
    if (name == "CO2") return Species::CO2;
    throw std::invalid_argument("unknown species '" + std::string(name) + "'");
}

Method method_from_name(std::string_view name) {
    if (name == "DFT") return Method::DFT;
    if (name == "HF") return Method::HF;
    if (name == "CASSCF") return Method::CASSCF;
    if (name == "DMRG") return Method::DMRG;
    if (name == "SHCI") return Method::SHCI;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

const char* species_name(Species s) {
    switch (s) {
        case Species::I: return "I";
        case Species::XVIII: return "XVIII";
        case Species::H2: return "H2";
        case Species::H2O: return "H2O";
        case Species::CO2: return "CO2";
    }
    return "?";
}

const char* method_name(Method m) {
    switch (m) {
        case Method::DFT: return "DFT";
        case Method::HF: return "HF";
        case Method::CASSCF: return "CASSCF";
        case Method::DMRG: return "DMRG";
        case Method::SHCI: return "SHCI";
    }
    return "?";
}

bool is_small_molecule(Species s) {
    return s == Species::H2 || s == Species::H2O || s == Species::CO2;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

ChemLedger ChemLedger::from_csv(std::istream& in) {
    ChemLedger ledger;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (first) {
            first = false;
            if (!fields.empty() && fields[0] == "species") continue;  // header
        }
        if (fields.size() < 3) {
            throw std::invalid_argument("energy ledger: malformed row '" + line + "'");
        }
        EnergyRecord rec;
        rec.species = species_from_name(fields[0]);
        rec.method = method_from_name(fields[1]);
        rec.energy_hartree = std::stod(fields[2]);
        if (fields.size() > 3) rec.source = fields[3];
        ledger.add(rec);
    }
    return ledger;
}

void ChemLedger::add(const EnergyRecord& record) {
    if (!std::isfinite(record.energy_hartree)) {
        throw std::invalid_argument("energy ledger: non-finite energy");
    }
    for (const auto& r : records_) {
        if (r.species == record.species && r.method == record.method) {
            throw std::invalid_argument(std::string("energy ledger: duplicate entry for (") +
                                        species_name(record.species) + ", " +
                                        method_name(record.method) + ")");
        }
    }
    records_.push_back(record);
}

bool ChemLedger::has(Species species, Method method) const {
    for (const auto& r : records_) {
        if (r.species == species && r.method == method) return true;
    }
    if (is_small_molecule(species)) {
        for (const auto& r : records_) {
            if (r.species == species) return true;
        }
    }
    return false;
}

double ChemLedger::energy(Species species, Method method) const {
    for (const auto& r : records_) {
        if (r.species == species && r.method == method) return r.energy_hartree;
    }
    if (is_small_molecule(species)) {
        for (const auto& r : records_) {
            if (r.species == species) return r.energy_hartree;
        }
    }
    throw std::invalid_argument(std::string("energy ledger: missing (") + species_name(species) +
                                ", " + method_name(method) + ")");
}

double cpu_hours(double wall_hours, count_t cores) {
    if (wall_hours < 0) throw std::invalid_argument("cpu_hours: negative wall time");
    return wall_hours * static_cast<double>(cores);
}

double reaction_energy(const ChemLedger& ledger, Method method) {
    return ledger.energy(Species::XVIII, method) + ledger.energy(Species::H2O, method) -
           2.0 * ledger.energy(Species::H2, method) - ledger.energy(Species::I, method) -
           ledger.energy(Species::CO2, method);
}

double rate_ratio(double delta_e_1, double delta_e_2, double temperature_kelvin) {
    if (!(temperature_kelvin > 0)) {
        throw std::domain_error("rate_ratio: temperature must be positive");
    }
    return std::exp(-(delta_e_1 - delta_e_2) / (kBoltzmannHartreePerKelvin * temperature_kelvin));
}

std::vector<ClassicalRunRecord> load_run_records(std::istream& in) {
    std::vector<ClassicalRunRecord> records;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (first) {
            first = false;
            if (!fields.empty() && fields[0] == "label") continue;
        }
        if (fields.size() < 6) {
            throw std::invalid_argument("run records: malformed row '" + line + "'");
        }
        ClassicalRunRecord rec;
        rec.system_label = fields[0];
        rec.orbitals = std::stoull(fields[1]);
        rec.wall_hours = std::stod(fields[2]);
        rec.cores = std::stoull(fields[3]);
        rec.cpu_hours = cpu_hours(rec.wall_hours, rec.cores);
        rec.uncertainty_mha = std::stod(fields[4]);
        if (fields[5].size() != 1 || fields[5][0] < 'A' || fields[5][0] > 'C') {
            throw std::invalid_argument("run records: extrapolation case must be A, B, or C");
        }
        rec.extrapolation_case = fields[5][0];
        records.push_back(rec);
    }
    return records;
}

std::vector<std::pair<count_t, double>> uncertainty_series(
    const std::vector<ClassicalRunRecord>& records) {
    std::vector<std::pair<count_t, double>> series;
    series.reserve(records.size());
    for (const auto& r : records) series.emplace_back(r.orbitals, r.uncertainty_mha);
    std::sort(series.begin(), series.end());
    return series;
}

}  // namespace ftqc
