#pragma once

// Monte Carlo simulation of learn-then-classify machines on Haar-random
// state pairs.
//
// Every trial draws from its own engine, seeded from (master seed, trial
// index), so a report depends only on the config and never on the thread
// count or scheduling.

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "qlm/hilbert.h"

namespace qlm {

enum class SimulatedMachine { kLmPovm, kLmTetrahedron, kEdN1, kEdContinuous };

std::string_view machine_name(SimulatedMachine machine);
/// Accepts the names returned by machine_name, case-insensitively.
std::optional<SimulatedMachine> parse_simulated_machine(std::string_view name);

struct TrialConfig {
  int n = 1;
  SimulatedMachine machine = SimulatedMachine::kLmPovm;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

struct MachineReport {
  TrialConfig config;
  std::uint64_t batch = 1;  // data qubits classified per learning measurement
  double empirical_error = 0.0;
  double std_error = 0.0;
  double analytic_error = 0.0;
  double z_score = 0.0;
  double memory_bits = 0.0;  // classical record kept between learning and classification
};

struct SimulationOptions {
  Capacity capacity;
  unsigned threads = 0;  // 0 = hardware concurrency
};

using Engine = std::mt19937_64;

/// Engine for one trial's substream.
Engine trial_engine(std::uint64_t master_seed, std::uint64_t trial);

/// Uniformly distributed unit vector (Bloch vector of a Haar-random pure qubit).
BlochVector haar_qubit(Engine& rng);

double analytic_error(SimulatedMachine machine, int n);

/// Single-shot runs: every trial draws fresh training and data states.
MachineReport run_trials(const TrialConfig& config, const SimulationOptions& options = {});

/// One learning measurement per trial, then `batch` fresh data qubits
/// classified with the stored outcome. Reports the per-qubit error; std_error
/// is the spread of per-trial error fractions over sqrt(trials).
MachineReport reuse_experiment(const TrialConfig& config, std::uint64_t batch,
                               const SimulationOptions& options = {});

}  // namespace qlm
