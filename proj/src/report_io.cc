#include "qlm/report_io.h"

#include <fmt/format.h>

#include <cmath>

namespace qlm {

std::string format_number(double value) { return fmt::format("{}", value); }

nlohmann::json report_to_json(const MachineReport& report) {
  nlohmann::json j;
  j["n"] = report.config.n;
  j["machine"] = std::string(machine_name(report.config.machine));
  j["trials"] = report.config.trials;
  j["seed"] = report.config.seed;
  j["batch"] = report.batch;
  j["empirical"] = report.empirical_error;
  j["stderr"] = report.std_error;
  j["analytic"] = report.analytic_error;
  j["z"] = report.z_score;
  if (std::isfinite(report.memory_bits)) {
    j["memory_bits"] = report.memory_bits;
  } else {
    j["memory_bits"] = nullptr;
  }
  return j;
}

std::string report_csv_header() { return "n,machine,trials,seed,empirical,stderr,analytic,z"; }

std::string report_csv_row(const MachineReport& report) {
  return fmt::format("{},{},{},{},{},{},{},{}", report.config.n, machine_name(report.config.machine),
                     report.config.trials, report.config.seed, format_number(report.empirical_error),
                     format_number(report.std_error), format_number(report.analytic_error),
                     format_number(report.z_score));
}

std::string_view povm_kind_name(PovmKind kind) {
  return kind == PovmKind::kTetrahedron ? "tetrahedron" : "quadrature";
}

nlohmann::json povm_to_json(const CovariantPovm& povm) {
  nlohmann::json j;
  j["n"] = povm.n;
  j["kind"] = std::string(povm_kind_name(povm.kind));
  j["outcome_count"] = povm.size();
  j["outcome_bound"] = outcome_bound(povm.n);
  j["memory_bits"] = memory_bits(povm);
  j["completeness_defect"] = completeness_defect(povm);
  j["seed_amplitudes"] = povm.seed.amplitudes;
  nlohmann::json outcomes = nlohmann::json::array();
  for (const PovmOutcome& o : povm.outcomes) {
    outcomes.push_back({{"weight", o.weight},
                        {"alpha", o.rotation.alpha},
                        {"beta", o.rotation.beta},
                        {"gamma", o.rotation.gamma}});
  }
  j["outcomes"] = std::move(outcomes);
  return j;
}

}  // namespace qlm
