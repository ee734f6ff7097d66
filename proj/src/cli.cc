#include "qlm/cli.h"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "qlm/e_and_d.h"
#include "qlm/machines.h"
#include "qlm/report_io.h"
#include "qlm/simulate.h"
#include "qlm/verify.h"

namespace qlm {
namespace {

using Row = std::vector<std::string>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  Row header;
  std::vector<Row> rows;
};

void write_csv(const Table& t, std::ostream& out) {
  auto line = [&](const Row& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << '\n';
  };
  line(t.header);
  for (const Row& r : t.rows) line(r);
}

void write_pretty(const Table& t, std::ostream& out) {
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t i = 0; i < width.size(); ++i) {
    width[i] = t.header[i].size();
    for (const Row& r : t.rows) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const Row& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i ? "  " : "") << (i ? fmt::format("{:>{}}", r[i], width[i]) : fmt::format("{:<{}}", r[i], width[i]));
    }
    out << '\n';
  };
  line(t.header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const Row& r : t.rows) line(r);
}

void write_table(const Table& t, const nlohmann::json& as_json, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kCsv: write_csv(t, out); break;
    case OutputFormat::kPretty: write_pretty(t, out); break;
    case OutputFormat::kJson: out << as_json.dump(2) << '\n'; break;
  }
}

nlohmann::json rows_as_json(const Table& t, const std::vector<std::vector<nlohmann::json>>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : values) {
    nlohmann::json obj;
    for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
    arr.push_back(std::move(obj));
  }
  return arr;
}

int cmd_error_table(int n_max, OutputFormat format, std::ostream& out) {
  Table t{{"n", "p_opt", "p_lm_projection", "p_ed_continuous", "n_r_lm", "n_r_ed"}, {}};
  std::vector<std::vector<nlohmann::json>> values;
  for (int n = 1; n <= n_max; ++n) {
    const double p_opt = optimal_error(n);
    const double p_lm = lm_error_projection(n);
    const double p_ed = ed_error_continuous(n);
    const double r_lm = n * excess_risk(MachineKind::kLearning, n);
    const double r_ed = n * excess_risk(MachineKind::kEdContinuous, n);
    values.push_back({n, p_opt, p_lm, p_ed, r_lm, r_ed});
    t.rows.push_back({std::to_string(n), format_number(p_opt), format_number(p_lm),
                      format_number(p_ed), format_number(r_lm), format_number(r_ed)});
  }
  write_table(t, rows_as_json(t, values), format, out);
  return kExitOk;
}

int cmd_verify(int n_cap, OutputFormat format, std::ostream& out, std::ostream& err) {
  const std::vector<CheckResult> checks = run_verification(n_cap);
  Table t{{"check", "max_defect", "tolerance", "status"}, {}};
  std::vector<std::vector<nlohmann::json>> values;
  bool ok = true;
  for (const CheckResult& c : checks) {
    const char* status = c.passed() ? "pass" : "FAIL";
    ok = ok && c.passed();
    t.rows.push_back({c.name, fmt::format("{:.3e}", c.max_defect), fmt::format("{:.0e}", c.tolerance), status});
    values.push_back({c.name, c.max_defect, c.tolerance, status});
    if (!c.passed()) err << "verification failed: " << c.name << '\n';
  }
  write_table(t, rows_as_json(t, values), format, out);
  return ok ? kExitOk : kExitCheckFailed;
}

SimulatedMachine require_machine(const std::string& name) {
  auto machine = parse_simulated_machine(name);
  if (!machine) throw UsageError("unknown machine '" + name + "'");
  return *machine;
}

int cmd_simulate(const TrialConfig& config, std::uint64_t batch, unsigned threads,
                 OutputFormat format, std::ostream& out) {
  SimulationOptions options;
  options.threads = threads;
  const MachineReport report = reuse_experiment(config, batch, options);
  if (format == OutputFormat::kJson) {
    out << report_to_json(report).dump(2) << '\n';
    return kExitOk;
  }
  Table t;
  t.header = {"n", "machine", "trials", "seed", "empirical", "stderr", "analytic", "z"};
  t.rows.push_back({std::to_string(config.n), std::string(machine_name(config.machine)),
                    std::to_string(config.trials), std::to_string(config.seed),
                    format_number(report.empirical_error), format_number(report.std_error),
                    format_number(report.analytic_error), format_number(report.z_score)});
  if (format == OutputFormat::kCsv) {
    out << report_csv_header() << '\n' << report_csv_row(report) << '\n';
  } else {
    write_pretty(t, out);
  }
  return kExitOk;
}

int cmd_povm(int n, SimulatedMachine machine, OutputFormat format, std::ostream& out) {
  CovariantPovm povm;
  if (machine == SimulatedMachine::kLmTetrahedron) {
    if (n != 1) throw UsageError("the tetrahedron POVM exists only for n = 1");
    povm = tetrahedron_povm();
  } else if (machine == SimulatedMachine::kLmPovm) {
    povm = covariant_povm(n);
  } else {
    throw UsageError("povm export supports lm_povm and lm_tetrahedron");
  }
  const nlohmann::json doc = povm_to_json(povm);
  if (format == OutputFormat::kJson) {
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  Table t{{"mu", "weight", "alpha", "beta", "gamma"}, {}};
  for (std::size_t mu = 0; mu < povm.size(); ++mu) {
    const PovmOutcome& o = povm.outcomes[mu];
    t.rows.push_back({std::to_string(mu), format_number(o.weight), format_number(o.rotation.alpha),
                      format_number(o.rotation.beta), format_number(o.rotation.gamma)});
  }
  if (format == OutputFormat::kCsv) {
    write_csv(t, out);
  } else {
    out << fmt::format("n={} kind={} outcomes={} bound={} memory_bits={} completeness_defect={:.3e}\n",
                       povm.n, povm_kind_name(povm.kind), povm.size(), outcome_bound(povm.n),
                       format_number(memory_bits(povm)), completeness_defect(povm));
    write_pretty(t, out);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool out_is_terminal) {
  CLI::App app{"Quantum learning machines for qubit binary classification"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}, {"pretty", OutputFormat::kPretty}};
  OutputFormat format = out_is_terminal ? OutputFormat::kPretty : OutputFormat::kCsv;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv, json or pretty")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  int n_max = 10;
  auto* table = app.add_subcommand("table", "Error probabilities and scaled excess risks for n = 1..n-max");
  table->add_option("--n-max", n_max, "largest training-set size")->check(CLI::PositiveNumber);
  add_format(table);

  const Capacity capacity;
  int n_cap = 4;
  auto* verify = app.add_subcommand("verify", "Cross-check all evaluation routes up to --cap");
  verify->add_option("--cap", n_cap, "largest n for explicit constructions")
      ->check(CLI::Range(1, capacity.max_n));
  add_format(verify);

  TrialConfig config;
  config.trials = 100000;
  config.seed = 1;
  std::string machine_name_arg;
  std::uint64_t batch = 1;
  unsigned threads = 0;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of a learning machine");
  simulate->add_option("--n", config.n, "training copies per label")->check(CLI::PositiveNumber);
  simulate->add_option("--machine", machine_name_arg, "lm_povm, lm_tetrahedron, ed_n1, ed_continuous")
      ->required();
  simulate->add_option("--trials", config.trials, "number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", config.seed, "master seed");
  simulate->add_option("--batch", batch, "data qubits classified per learning outcome")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--threads", threads, "worker threads (0 = all cores)");
  add_format(simulate);

  int povm_n = 1;
  std::string povm_machine = "lm_povm";
  auto* povm = app.add_subcommand("povm", "Export the covariant learning POVM");
  povm->add_option("--n", povm_n, "training copies per label")->check(CLI::PositiveNumber);
  povm->add_option("--machine", povm_machine, "lm_povm (quadrature) or lm_tetrahedron");
  add_format(povm);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_error_table(n_max, format, out);
    if (*verify) return cmd_verify(n_cap, format, out, err);
    if (*simulate) {
      config.machine = require_machine(machine_name_arg);
      return cmd_simulate(config, batch, threads, format, out);
    }
    if (*povm) return cmd_povm(povm_n, require_machine(povm_machine), format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace qlm
