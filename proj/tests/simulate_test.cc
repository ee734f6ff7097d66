#include "qlm/simulate.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qlm/e_and_d.h"
#include "qlm/machines.h"

using namespace qlm;

namespace {

TrialConfig config(SimulatedMachine machine, int n, std::uint64_t trials, std::uint64_t seed) {
  TrialConfig c;
  c.machine = machine;
  c.n = n;
  c.trials = trials;
  c.seed = seed;
  return c;
}

SimulationOptions with_threads(unsigned threads) {
  SimulationOptions o;
  o.threads = threads;
  return o;
}

}  // namespace

TEST(simulate, machine_names_round_trip) {
  for (SimulatedMachine m : {SimulatedMachine::kLmPovm, SimulatedMachine::kLmTetrahedron,
                             SimulatedMachine::kEdN1, SimulatedMachine::kEdContinuous}) {
    EXPECT_EQ(parse_simulated_machine(machine_name(m)), m);
  }
  EXPECT_EQ(parse_simulated_machine("LM_Tetrahedron"), SimulatedMachine::kLmTetrahedron);
  EXPECT_FALSE(parse_simulated_machine("nope").has_value());
  EXPECT_FALSE(parse_simulated_machine("").has_value());
}

TEST(simulate, haar_qubit_is_uniform_on_the_sphere) {
  Engine rng(61);
  const int draws = 100000;
  std::vector<double> zs;
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  Eigen::Matrix3d second = Eigen::Matrix3d::Zero();
  for (int i = 0; i < draws; ++i) {
    const Eigen::Vector3d v = haar_qubit(rng).vec();
    ASSERT_NEAR(v.norm(), 1.0, 1e-12);
    mean += v;
    second += v * v.transpose();
    zs.push_back(v.z());
  }
  mean /= draws;
  second /= draws;
  // Each coordinate has variance 1/3.
  const double sigma = std::sqrt(1.0 / 3.0 / draws);
  for (int k = 0; k < 3; ++k) {
    EXPECT_LT(std::abs(mean(k)), 3.0 * sigma);
    EXPECT_NEAR(second(k, k), 1.0 / 3.0, 0.01);
  }
  // Kolmogorov-Smirnov against z ~ U(-1, 1), 1% critical value.
  std::sort(zs.begin(), zs.end());
  double ks = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double cdf = (zs[i] + 1.0) / 2.0;
    ks = std::max({ks, std::abs(cdf - static_cast<double>(i) / draws), std::abs(cdf - (i + 1.0) / draws)});
  }
  EXPECT_LT(ks, 1.628 / std::sqrt(static_cast<double>(draws)));
}

TEST(simulate, trial_engines_are_distinct_and_reproducible) {
  Engine a = trial_engine(1, 0), b = trial_engine(1, 0), c = trial_engine(1, 1), d = trial_engine(2, 0);
  const auto first = a();
  EXPECT_EQ(first, b());
  EXPECT_NE(first, c());
  EXPECT_NE(first, d());
}

TEST(simulate, report_is_independent_of_thread_count) {
  const TrialConfig c = config(SimulatedMachine::kEdContinuous, 3, 20000, 9);
  const MachineReport one = run_trials(c, with_threads(1));
  for (unsigned threads : {2u, 3u, 7u}) {
    const MachineReport many = run_trials(c, with_threads(threads));
    EXPECT_EQ(one.empirical_error, many.empirical_error) << threads;
    EXPECT_EQ(one.std_error, many.std_error) << threads;
  }
  EXPECT_EQ(one.empirical_error, run_trials(c, with_threads(1)).empirical_error);
}

TEST(simulate, different_seeds_differ) {
  const MachineReport a = run_trials(config(SimulatedMachine::kEdN1, 1, 5000, 1));
  const MachineReport b = run_trials(config(SimulatedMachine::kEdN1, 1, 5000, 2));
  EXPECT_NE(a.empirical_error, b.empirical_error);
}

TEST(simulate, batch_one_reuse_equals_single_shot) {
  const TrialConfig c = config(SimulatedMachine::kLmTetrahedron, 1, 5000, 4);
  const MachineReport single = run_trials(c);
  const MachineReport reuse = reuse_experiment(c, 1);
  EXPECT_EQ(single.empirical_error, reuse.empirical_error);
  EXPECT_EQ(single.std_error, reuse.std_error);
  EXPECT_EQ(reuse.batch, 1u);
}

TEST(simulate, single_shot_std_error_is_binomial) {
  const MachineReport r = run_trials(config(SimulatedMachine::kEdN1, 1, 40000, 5));
  const double p = r.empirical_error;
  EXPECT_NEAR(r.std_error, std::sqrt(p * (1.0 - p) / 40000.0), 1e-12);
}

TEST(simulate, lm_povm_matches_closed_form) {
  for (int n : {1, 2, 3}) {
    const MachineReport r = run_trials(config(SimulatedMachine::kLmPovm, n, 100000, 100 + n));
    EXPECT_NEAR(r.analytic_error, optimal_error(n), 1e-15);
    EXPECT_LT(r.z_score, 3.0) << "n=" << n << " empirical=" << r.empirical_error;
  }
}

TEST(simulate, ed_continuous_matches_closed_form) {
  for (int n : {1, 4, 20}) {
    const MachineReport r = run_trials(config(SimulatedMachine::kEdContinuous, n, 100000, 200 + n));
    EXPECT_NEAR(r.analytic_error, ed_error_continuous(n), 1e-15);
    EXPECT_LT(r.z_score, 3.0) << "n=" << n << " empirical=" << r.empirical_error;
  }
}

TEST(simulate, ed_n1_and_tetrahedron_match_closed_form) {
  const MachineReport ed = run_trials(config(SimulatedMachine::kEdN1, 1, 100000, 7));
  EXPECT_LT(ed.z_score, 3.0) << ed.empirical_error;
  const MachineReport tet = run_trials(config(SimulatedMachine::kLmTetrahedron, 1, 100000, 8));
  EXPECT_LT(tet.z_score, 3.0) << tet.empirical_error;
}

TEST(simulate, reuse_keeps_the_single_shot_error) {
  const MachineReport r = reuse_experiment(config(SimulatedMachine::kLmPovm, 1, 5000, 11), 50);
  EXPECT_EQ(r.batch, 50u);
  EXPECT_LT(r.z_score, 3.0) << r.empirical_error << " +/- " << r.std_error;
  // Qubits sharing a learning outcome are correlated, so the spread exceeds
  // the naive binomial one.
  const double naive = std::sqrt(r.empirical_error * (1.0 - r.empirical_error) / (5000.0 * 50.0));
  EXPECT_GT(r.std_error, naive);
}

TEST(simulate, memory_bits) {
  EXPECT_DOUBLE_EQ(run_trials(config(SimulatedMachine::kLmTetrahedron, 1, 10, 1)).memory_bits, 2.0);
  EXPECT_DOUBLE_EQ(run_trials(config(SimulatedMachine::kEdN1, 1, 10, 1)).memory_bits, 2.0);
  EXPECT_NEAR(run_trials(config(SimulatedMachine::kLmPovm, 2, 10, 1)).memory_bits, std::log2(15.0), 1e-15);
  EXPECT_TRUE(std::isinf(run_trials(config(SimulatedMachine::kEdContinuous, 2, 10, 1)).memory_bits));
}

TEST(simulate, incompatible_configs_throw) {
  EXPECT_THROW(run_trials(config(SimulatedMachine::kLmTetrahedron, 2, 10, 1)), std::domain_error);
  EXPECT_THROW(run_trials(config(SimulatedMachine::kEdN1, 3, 10, 1)), std::domain_error);
  EXPECT_THROW(run_trials(config(SimulatedMachine::kEdContinuous, 0, 10, 1)), std::domain_error);
  EXPECT_THROW(run_trials(config(SimulatedMachine::kEdContinuous, 1, 0, 1)), std::domain_error);
  EXPECT_THROW(reuse_experiment(config(SimulatedMachine::kEdContinuous, 1, 10, 1), 0), std::domain_error);
  EXPECT_THROW(run_trials(config(SimulatedMachine::kLmPovm, 6, 10, 1)), CapacityError);
}
