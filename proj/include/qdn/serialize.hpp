#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qdn/epr.hpp"
#include "qdn/labstate.hpp"
#include "qdn/local_ops.hpp"
#include "qdn/signal_ops.hpp"

namespace qdn {

// Labstate wire format: {"rank": r, "amplitudes": [[re, im], ...]} with
// amplitudes ordered by basis index.
nlohmann::json labstate_to_json(const Labstate& state);
Labstate labstate_from_json(const nlohmann::json& j);

Labstate load_labstate(const std::string& path);
void save_labstate(const Labstate& state, const std::string& path);

nlohmann::ordered_json algebra_report_to_json(const AlgebraReport& report);
nlohmann::ordered_json audit_report_to_json(const AuditReport& report);

/// "%.15g" rendering used for every probability and angle the CLI prints.
std::string format_significant(double value);

std::string scan_csv_header();
std::string scan_csv_row(const WignerScanRow& row);
nlohmann::ordered_json scan_row_to_json(const WignerScanRow& row);

}  // namespace qdn
