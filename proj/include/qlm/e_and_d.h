#pragma once

// Estimate-and-discriminate machines: estimate each training state with a
// POVM on its n copies, then run known-state discrimination on the data
// qubit using the conditioned Bloch vectors.

#include <vector>

#include "qlm/hilbert.h"

namespace qlm {

struct EstimateOutcome {
  double weight = 0.0;
  BlochVector direction;  // unit estimate s
};

/// A direction-estimation POVM. Validated on construction: weights positive
/// and summing to 1, unit directions, and sum(weight * s) = 0.
class EstimationPovm {
 public:
  explicit EstimationPovm(std::vector<EstimateOutcome> outcomes);

  /// Two equiprobable outcomes along +axis and -axis.
  static EstimationPovm antipodal(const BlochVector& axis);

  const std::vector<EstimateOutcome>& outcomes() const { return outcomes_; }

 private:
  std::vector<EstimateOutcome> outcomes_;
};

/// Length of the conditioned data-qubit Bloch vector per unit estimate for n
/// training copies: n/(n+2), i.e. n/d_{n+1}.
double conditioned_shrink(int n);

/// sum_{a,i} p_a p'_i |shrink * s_a - shrink * s'_i|.
double ed_delta_finite(const EstimationPovm& m0, const EstimationPovm& m1, double shrink);

/// Delta for two continuous covariant estimation POVMs: 4n / (3 d_{n+1}).
double ed_delta_continuous(int n);
double ed_error_continuous(int n);

/// Best n = 1 machine: M = {[up], [down]}, M' = {[+], [-]}.
double ed_error_n1_optimal();

enum class MachineKind { kOptimal, kLearning, kEdContinuous, kEdN1 };

/// Average error of `machine` minus the known-states error 1/6.
double excess_risk(MachineKind machine, int n);

}  // namespace qlm
