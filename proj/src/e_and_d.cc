#include "qlm/e_and_d.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qlm/machines.h"

namespace qlm {
namespace {

constexpr double kPovmTolerance = 1e-9;

}  // namespace

EstimationPovm::EstimationPovm(std::vector<EstimateOutcome> outcomes) : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) throw std::domain_error("estimation POVM has no outcomes");
  double total = 0.0;
  Eigen::Vector3d first_moment = Eigen::Vector3d::Zero();
  for (const EstimateOutcome& o : outcomes_) {
    if (!(o.weight > 0.0)) throw std::domain_error("estimation POVM weight must be positive");
    if (std::abs(o.direction.norm() - 1.0) > kPovmTolerance) {
      throw std::domain_error("estimation POVM direction is not a unit vector");
    }
    total += o.weight;
    first_moment += o.weight * o.direction.vec();
  }
  if (std::abs(total - 1.0) > kPovmTolerance) {
    throw std::domain_error("estimation POVM weights sum to " + std::to_string(total) + ", not 1");
  }
  if (first_moment.norm() > kPovmTolerance) {
    throw std::domain_error("estimation POVM violates sum(weight * s) = 0");
  }
}

EstimationPovm EstimationPovm::antipodal(const BlochVector& axis) {
  const Eigen::Vector3d u = axis.vec().normalized();
  return EstimationPovm({{0.5, BlochVector::from(u)}, {0.5, BlochVector::from(-u)}});
}

double conditioned_shrink(int n) {
  if (n < 1) throw std::domain_error("conditioned_shrink needs n >= 1");
  return n / (n + 2.0);
}

double ed_delta_finite(const EstimationPovm& m0, const EstimationPovm& m1, double shrink) {
  if (shrink < 0.0 || shrink > 1.0) throw std::domain_error("shrink must lie in [0, 1]");
  double delta = 0.0;
  for (const EstimateOutcome& a : m0.outcomes()) {
    for (const EstimateOutcome& i : m1.outcomes()) {
      delta += a.weight * i.weight * (shrink * (a.direction.vec() - i.direction.vec())).norm();
    }
  }
  return delta;
}

double ed_delta_continuous(int n) { return 4.0 * n / (3.0 * (n + 2.0)); }

double ed_error_continuous(int n) {
  if (n < 1) throw std::domain_error("ed_error_continuous needs n >= 1");
  return error_from_delta(ed_delta_continuous(n));
}

double ed_error_n1_optimal() {
  const EstimationPovm m0 = EstimationPovm::antipodal({0.0, 0.0, 1.0});
  const EstimationPovm m1 = EstimationPovm::antipodal({1.0, 0.0, 0.0});
  return error_from_delta(ed_delta_finite(m0, m1, conditioned_shrink(1)));
}

double excess_risk(MachineKind machine, int n) {
  switch (machine) {
    case MachineKind::kOptimal:
      return optimal_error(n) - kKnownStatesError;
    case MachineKind::kLearning:
      return lm_error_projection(n) - kKnownStatesError;
    case MachineKind::kEdContinuous:
      return ed_error_continuous(n) - kKnownStatesError;
    case MachineKind::kEdN1:
      if (n != 1) throw std::domain_error("the optimal finite E&D machine is only known for n = 1");
      return ed_error_n1_optimal() - kKnownStatesError;
  }
  throw std::domain_error("unknown machine kind");
}

}  // namespace qlm
