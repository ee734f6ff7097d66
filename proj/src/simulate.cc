#include "qlm/simulate.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qlm/e_and_d.h"
#include "qlm/machines.h"

namespace qlm {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(Engine& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

struct PureQubit {
  Complex up;
  Complex down;
  Eigen::Vector3d bloch;

  static PureQubit from_bloch(const Eigen::Vector3d& r) {
    const double theta = std::acos(std::clamp(r.z(), -1.0, 1.0));
    const double phi = std::atan2(r.y(), r.x());
    return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi), r};
  }
};

Eigen::Vector3d decision_axis(const Eigen::Vector3d& r0, const Eigen::Vector3d& r1) {
  const Eigen::Vector3d diff = r0 - r1;
  return diff.norm() > kTieEpsilon ? Eigen::Vector3d(diff.normalized()) : Eigen::Vector3d::UnitZ();
}

// A trained machine: measures the training set once and returns the axis of
// the data-qubit projector that announces label 0.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual Eigen::Vector3d learn(const PureQubit& psi0, const PureQubit& psi1, Engine& rng) const = 0;
  virtual double memory_bits() const = 0;
};

class CovariantLearner final : public Learner {
 public:
  CovariantLearner(const CovariantPovm& povm, const Capacity& capacity) : n_(povm.n) {
    const std::vector<ConditionedPair> pairs = conditioned_pairs(povm, capacity);
    for (std::size_t mu = 0; mu < povm.size(); ++mu) {
      vectors_.push_back(povm.outcome_vector(mu));
      weights_.push_back(povm.outcomes[mu].weight);
      axes_.push_back(pairs[mu].decision_axis.vec());
    }
    bits_ = qlm::memory_bits(povm);
  }

  Eigen::Vector3d learn(const PureQubit& psi0, const PureQubit& psi1, Engine& rng) const override {
    const CVector training = kron(coherent_state(n_, psi0.up, psi0.down),
                                  coherent_state(n_, psi1.up, psi1.down));
    std::vector<double> cumulative(vectors_.size());
    double total = 0.0;
    for (std::size_t mu = 0; mu < vectors_.size(); ++mu) {
      total += weights_[mu] * std::norm(vectors_[mu].dot(training));
      cumulative[mu] = total;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw std::logic_error("learning outcome probabilities sum to " + std::to_string(total));
    }
    const double u = uniform01(rng) * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t mu = std::min<std::size_t>(it - cumulative.begin(), vectors_.size() - 1);
    return axes_[mu];
  }

  double memory_bits() const override { return bits_; }

 private:
  int n_;
  std::vector<CVector> vectors_;
  std::vector<double> weights_;
  std::vector<Eigen::Vector3d> axes_;
  double bits_ = 0.0;
};

// n = 1: measure A along z and C along x, discriminate the two estimates.
class EdN1Learner final : public Learner {
 public:
  Eigen::Vector3d learn(const PureQubit& psi0, const PureQubit& psi1, Engine& rng) const override {
    const double sign0 = uniform01(rng) < (1.0 + psi0.bloch.z()) / 2.0 ? 1.0 : -1.0;
    const double sign1 = uniform01(rng) < (1.0 + psi1.bloch.x()) / 2.0 ? 1.0 : -1.0;
    return decision_axis(sign0 * Eigen::Vector3d::UnitZ(), sign1 * Eigen::Vector3d::UnitX());
  }
  double memory_bits() const override { return 2.0; }
};

// Continuous covariant estimation on each n-copy register. The estimate s has
// density (n+1) ((1 + s.r)/2)^n over the sphere, so (1 + cos)/2 = U^{1/(n+1)}.
class EdContinuousLearner final : public Learner {
 public:
  explicit EdContinuousLearner(int n) : n_(n) {}

  Eigen::Vector3d learn(const PureQubit& psi0, const PureQubit& psi1, Engine& rng) const override {
    const Eigen::Vector3d s0 = estimate(psi0.bloch, rng);
    const Eigen::Vector3d s1 = estimate(psi1.bloch, rng);
    return decision_axis(s0, s1);
  }
  double memory_bits() const override { return std::numeric_limits<double>::infinity(); }

 private:
  Eigen::Vector3d estimate(const Eigen::Vector3d& r, Engine& rng) const {
    const double cos_theta = 2.0 * std::pow(uniform01(rng), 1.0 / (n_ + 1.0)) - 1.0;
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    const double phi = 2.0 * std::numbers::pi * uniform01(rng);
    const Eigen::Vector3d e3 = r.normalized();
    const Eigen::Vector3d helper =
        std::abs(e3.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    const Eigen::Vector3d e1 = e3.cross(helper).normalized();
    const Eigen::Vector3d e2 = e3.cross(e1);
    return sin_theta * std::cos(phi) * e1 + sin_theta * std::sin(phi) * e2 + cos_theta * e3;
  }

  int n_;
};

std::unique_ptr<Learner> make_learner(const TrialConfig& config, const Capacity& capacity) {
  if (config.n < 1) throw std::domain_error("simulation needs n >= 1");
  switch (config.machine) {
    case SimulatedMachine::kLmPovm:
      if (config.n > capacity.max_n) {
        throw CapacityError("lm_povm simulation: n = " + std::to_string(config.n) +
                            " exceeds the cap of " + std::to_string(capacity.max_n));
      }
      return std::make_unique<CovariantLearner>(covariant_povm(config.n), capacity);
    case SimulatedMachine::kLmTetrahedron:
      if (config.n != 1) throw std::domain_error("lm_tetrahedron requires n = 1");
      return std::make_unique<CovariantLearner>(tetrahedron_povm(), capacity);
    case SimulatedMachine::kEdN1:
      if (config.n != 1) throw std::domain_error("ed_n1 requires n = 1");
      return std::make_unique<EdN1Learner>();
    case SimulatedMachine::kEdContinuous:
      return std::make_unique<EdContinuousLearner>(config.n);
  }
  throw std::domain_error("unknown machine");
}

struct Tally {
  std::uint64_t errors = 0;
  std::uint64_t errors_squared = 0;  // sum over trials of (errors in that trial)^2
};

Tally run_range(const Learner& learner, const TrialConfig& config, std::uint64_t batch,
                std::uint64_t begin, std::uint64_t end) {
  Tally tally;
  for (std::uint64_t t = begin; t < end; ++t) {
    Engine rng = trial_engine(config.seed, t);
    const PureQubit psi0 = PureQubit::from_bloch(haar_qubit(rng).vec());
    const PureQubit psi1 = PureQubit::from_bloch(haar_qubit(rng).vec());
    const Eigen::Vector3d axis = learner.learn(psi0, psi1, rng);
    std::uint64_t errors = 0;
    for (std::uint64_t k = 0; k < batch; ++k) {
      const int label = uniform01(rng) < 0.5 ? 0 : 1;
      const Eigen::Vector3d& data = label == 0 ? psi0.bloch : psi1.bloch;
      const int decided = uniform01(rng) < (1.0 + axis.dot(data)) / 2.0 ? 0 : 1;
      if (decided != label) ++errors;
    }
    tally.errors += errors;
    tally.errors_squared += errors * errors;
  }
  return tally;
}

}  // namespace

std::string_view machine_name(SimulatedMachine machine) {
  switch (machine) {
    case SimulatedMachine::kLmPovm: return "lm_povm";
    case SimulatedMachine::kLmTetrahedron: return "lm_tetrahedron";
    case SimulatedMachine::kEdN1: return "ed_n1";
    case SimulatedMachine::kEdContinuous: return "ed_continuous";
  }
  return "unknown";
}

std::optional<SimulatedMachine> parse_simulated_machine(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (SimulatedMachine m : {SimulatedMachine::kLmPovm, SimulatedMachine::kLmTetrahedron,
                             SimulatedMachine::kEdN1, SimulatedMachine::kEdContinuous}) {
    if (machine_name(m) == lower) return m;
  }
  return std::nullopt;
}

Engine trial_engine(std::uint64_t master_seed, std::uint64_t trial) {
  return Engine(splitmix64(master_seed ^ splitmix64(trial)));
}

BlochVector haar_qubit(Engine& rng) {
  const double z = 2.0 * uniform01(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

double analytic_error(SimulatedMachine machine, int n) {
  switch (machine) {
    case SimulatedMachine::kLmPovm: return optimal_error(n);
    case SimulatedMachine::kLmTetrahedron: return optimal_error(1);
    case SimulatedMachine::kEdN1: return ed_error_n1_optimal();
    case SimulatedMachine::kEdContinuous: return ed_error_continuous(n);
  }
  throw std::domain_error("unknown machine");
}

MachineReport run_trials(const TrialConfig& config, const SimulationOptions& options) {
  return reuse_experiment(config, 1, options);
}

MachineReport reuse_experiment(const TrialConfig& config, std::uint64_t batch,
                               const SimulationOptions& options) {
  if (config.trials < 1) throw std::domain_error("trials must be >= 1");
  if (batch < 1) throw std::domain_error("batch must be >= 1");
  const std::unique_ptr<Learner> learner = make_learner(config, options.capacity);

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, config.trials));

  std::vector<Tally> tallies(threads);
  std::vector<std::exception_ptr> failures(threads);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (config.trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = std::min(config.trials, w * chunk);
      const std::uint64_t end = std::min(config.trials, begin + chunk);
      workers.emplace_back([&, w, begin, end] {
        try {
          tallies[w] = run_range(*learner, config, batch, begin, end);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  Tally total;
  for (const Tally& t : tallies) {
    total.errors += t.errors;
    total.errors_squared += t.errors_squared;
  }

  const double trials = static_cast<double>(config.trials);
  const double per_trial = static_cast<double>(batch);
  MachineReport report;
  report.config = config;
  report.batch = batch;
  report.empirical_error = total.errors / (trials * per_trial);
  const double variance = static_cast<double>(total.errors_squared) / (trials * per_trial * per_trial) -
                          report.empirical_error * report.empirical_error;
  report.std_error = std::sqrt(std::max(0.0, variance) / trials);
  report.analytic_error = analytic_error(config.machine, config.n);
  const double gap = std::abs(report.empirical_error - report.analytic_error);
  report.z_score = report.std_error > 0.0 ? gap / report.std_error
                                          : (gap > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  report.memory_bits = learner->memory_bits();
  return report;
}

}  // namespace qlm
