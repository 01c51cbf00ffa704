#include "qdn/serialize.hpp"

#include <cstdio>
#include <fstream>

namespace qdn {

nlohmann::json labstate_to_json(const Labstate& state) {
    nlohmann::json amps = nlohmann::json::array();
    for (const cplx& a : state.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    return nlohmann::json{{"rank", state.rank()}, {"amplitudes", std::move(amps)}};
}

Labstate labstate_from_json(const nlohmann::json& j) {
    if (!j.contains("rank") || !j.contains("amplitudes")) {
        throw ShapeError("labstate JSON needs 'rank' and 'amplitudes'");
    }
    const int rank = j.at("rank").get<int>();
    const auto& arr = j.at("amplitudes");
    if (!arr.is_array()) throw ShapeError("'amplitudes' must be an array");
    std::vector<cplx> amps;
    amps.reserve(arr.size());
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 2) {
            throw ShapeError("each amplitude must be a [re, im] pair");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return Labstate::from_amplitudes(rank, std::move(amps));
}

Labstate load_labstate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open labstate file: " + path);
    nlohmann::json j;
    in >> j;
    return labstate_from_json(j);
}

void save_labstate(const Labstate& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write labstate file: " + path);
    out << labstate_to_json(state).dump(2) << '\n';
}

nlohmann::ordered_json algebra_report_to_json(const AlgebraReport& report) {
    nlohmann::ordered_json relations;
    for (const auto& [name, residual] : report.residuals) relations[name] = residual;
    return relations;
}

nlohmann::ordered_json audit_report_to_json(const AuditReport& report) {
    return nlohmann::ordered_json{
        {"max_remote_delta", report.max_remote_delta},
        {"trials", report.trials},
        {"pass", report.pass},
    };
}

std::string format_significant(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    return buf;
}

std::string scan_csv_header() {
    return "theta_a,theta_b,theta_c,p_ab,p_bc,p_ac,lhs,rhs,violated";
}

std::string scan_csv_row(const WignerScanRow& row) {
    std::string out;
    out += format_significant(row.theta_a);
    out += ',';
    out += format_significant(row.theta_b);
    out += ',';
    out += format_significant(row.theta_c);
    out += ',';
    out += format_significant(row.p_ab);
    out += ',';
    out += format_significant(row.p_bc);
    out += ',';
    out += format_significant(row.p_ac);
    out += ',';
    out += format_significant(row.lhs);
    out += ',';
    out += format_significant(row.rhs);
    out += ',';
    out += row.violated ? '1' : '0';
    return out;
}

nlohmann::ordered_json scan_row_to_json(const WignerScanRow& row) {
    return nlohmann::ordered_json{
        {"theta_a", row.theta_a}, {"theta_b", row.theta_b}, {"theta_c", row.theta_c},
        {"p_ab", row.p_ab},       {"p_bc", row.p_bc},       {"p_ac", row.p_ac},
        {"lhs", row.lhs},         {"rhs", row.rhs},         {"violated", row.violated},
    };
}

}  // namespace qdn
