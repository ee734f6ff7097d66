#pragma once

// JSON and CSV encodings of simulation reports and POVM exports. Numbers are
// written with the C locale ('.' decimal separator) and round-trip precision.

#include <json.hpp>
#include <string>

#include "qlm/machines.h"
#include "qlm/simulate.h"

namespace qlm {

/// Keys: n, machine, trials, seed, batch, empirical, stderr, analytic, z,
/// memory_bits (null when unbounded).
nlohmann::json report_to_json(const MachineReport& report);

/// "n,machine,trials,seed,empirical,stderr,analytic,z"
std::string report_csv_header();
std::string report_csv_row(const MachineReport& report);

std::string_view povm_kind_name(PovmKind kind);

/// Keys: n, kind, outcome_count, outcome_bound, memory_bits,
/// completeness_defect, seed_amplitudes, outcomes[{weight, alpha, beta, gamma}].
nlohmann::json povm_to_json(const CovariantPovm& povm);

/// Shortest representation that parses back to the same double.
std::string format_number(double value);

}  // namespace qlm
