#include "ftqc/report.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ftqc/errors.hpp"

namespace ftqc {

void atomic_write(const std::filesystem::path& path, std::string_view content) {
    const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::filesystem::create_directories(dir);
    std::random_device rd;
    const auto tmp = dir / (path.filename().string() + ".tmp" + std::to_string(rd() % 1000000));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw config_error("cannot write '" + tmp.string() + "'");
        out << content;
        if (!out.good()) {
            throw std::runtime_error("short write to '" + tmp.string() + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string ablation_csv(const std::vector<AblationRow>& rows) {
    std::ostringstream os;
    os << "scenario,runtime_days,qubits_basic,qubits_detailed,distance,dfthc,zx,a2a,msc\n";
    os.precision(12);
    for (const AblationRow& row : rows) {
        const auto& e = row.estimate;
        os << row.scenario << ',' << e.runtime_days << ',' << e.physical_qubits_basic << ',';
        if (e.physical_qubits_detailed) os << *e.physical_qubits_detailed;
        os << ',' << e.code_distance << ',' << e.flags.dfthc << ',' << e.flags.zx << ','
           << e.flags.a2a << ',' << e.flags.msc << '\n';
    }
    return os.str();
}

nlohmann::json ratios_to_json(const std::vector<FlagRatio>& ratios) {
    nlohmann::json arr = nlohmann::json::array();
    for (const FlagRatio& r : ratios) {
        arr.push_back({{"from", r.from},
                       {"to", r.to},
                       {"flag", r.flag},
                       {"runtime_ratio", r.runtime_ratio}});
    }
    return arr;
}

namespace {

Comparison build_comparison(std::map<count_t, ComparisonRow>& quantum,
                            const std::map<count_t, double>& classical) {
    if (classical.empty()) {
        throw std::invalid_argument("comparison: empty classical series");
    }
    if (quantum.empty()) {
        throw std::invalid_argument("comparison: empty quantum series");
    }
    Comparison c;
    c.verdict["speedups"] = nlohmann::json::array();
    for (auto& [orbitals, row] : quantum) {
        auto it = classical.find(orbitals);
        if (it == classical.end()) {
            throw std::invalid_argument("comparison: no classical record for " +
                                        std::to_string(orbitals) + " orbitals");
        }
        row.cpu_days = it->second;
        nlohmann::json entry = {{"orbitals", orbitals}, {"cpu_days", row.cpu_days}};
        if (row.qpu_days_ion) {
            entry["qpu_days_ion"] = *row.qpu_days_ion;
            entry["speedup_ion"] = row.cpu_days / *row.qpu_days_ion;
        }
        if (row.qpu_days_na) {
            entry["qpu_days_na"] = *row.qpu_days_na;
            entry["speedup_na"] = row.cpu_days / *row.qpu_days_na;
        }
        c.verdict["speedups"].push_back(entry);
        c.rows.push_back(row);
    }
    for (const auto& [orbitals, days] : classical) {
        if (!quantum.count(orbitals)) {
            throw std::invalid_argument("comparison: no quantum estimate for " +
                                        std::to_string(orbitals) + " orbitals");
        }
    }
    return c;
}

}  // namespace

Comparison emit_comparison(const std::vector<ResourceEstimate>& quantum,
                           const std::vector<ClassicalRunRecord>& classical) {
    std::map<count_t, ComparisonRow> qrows;
    for (const ResourceEstimate& e : quantum) {
        if (!e.provenance.contains("orbitals") || !e.provenance.contains("platform")) {
            throw std::invalid_argument("comparison: estimate lacks orbitals/platform provenance");
        }
        const auto orbitals = e.provenance.at("orbitals").get<count_t>();
        const auto platform = e.provenance.at("platform").get<std::string>();
        auto& row = qrows[orbitals];
        row.orbitals = orbitals;
        if (platform == "ion_trap") {
            row.qpu_days_ion = e.runtime_days;
        } else {
            row.qpu_days_na = e.runtime_days;
        }
    }
    std::map<count_t, double> crows;
    for (const ClassicalRunRecord& r : classical) {
        crows[r.orbitals] = r.cpu_hours / 24.0;
    }
    return build_comparison(qrows, crows);
}

Comparison emit_comparison_series(const std::vector<ComparisonRow>& quantum,
                                  const std::vector<std::pair<count_t, double>>& classical) {
    std::map<count_t, ComparisonRow> qrows;
    for (const ComparisonRow& r : quantum) {
        qrows[r.orbitals] = r;
    }
    std::map<count_t, double> crows(classical.begin(), classical.end());
    return build_comparison(qrows, crows);
}

std::string comparison_csv(const Comparison& c) {
    std::ostringstream os;
    os << "orbitals,qpu_days_ion,qpu_days_na,cpu_days\n";
    os.precision(12);
    for (const ComparisonRow& row : c.rows) {
        os << row.orbitals << ',';
        if (row.qpu_days_ion) os << *row.qpu_days_ion;
        os << ',';
        if (row.qpu_days_na) os << *row.qpu_days_na;
        os << ',' << row.cpu_days << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                fields.push_back(cur);
                cur.clear();
            } else if (ch != '\r') {
                cur += ch;
            }
        }
        fields.push_back(cur);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

std::vector<ComparisonRow> load_quantum_series_csv(std::istream& in) {
    auto rows = read_csv(in);
    std::vector<ComparisonRow> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == 0 && !rows[i].empty() && rows[i][0] == "orbitals") continue;
        if (rows[i].size() < 2) {
            throw std::invalid_argument("quantum series: malformed row");
        }
        ComparisonRow r;
        r.orbitals = std::stoull(rows[i][0]);
        if (!rows[i][1].empty()) r.qpu_days_ion = std::stod(rows[i][1]);
        if (rows[i].size() > 2 && !rows[i][2].empty()) r.qpu_days_na = std::stod(rows[i][2]);
        out.push_back(r);
    }
    return out;
}

std::vector<std::pair<count_t, double>> load_classical_series_csv(std::istream& in) {
    auto rows = read_csv(in);
    std::vector<std::pair<count_t, double>> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == 0 && !rows[i].empty() && rows[i][0] == "orbitals") continue;
        if (rows[i].size() < 2) {
            throw std::invalid_argument("classical series: malformed row");
        }
        out.emplace_back(std::stoull(rows[i][0]), std::stod(rows[i][1]));
    }
    return out;
}

}  // namespace ftqc
