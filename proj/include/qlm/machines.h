#pragma once

// Optimal programmable discrimination of two unknown qubit states from a
// training set of n copies of each, and the learning machine that reaches it
// with a covariant measurement on the training set followed by a classical,
// outcome-dependent measurement on the data qubit.
//
// Subsystems: A = n training qubits labeled 0, B = data qubit, C = n training
// qubits labeled 1. The symmetric subspace of m qubits has dimension d_m = m+1.
// "Embedded" operators live on Sym(A) (x) B (x) Sym(C), dimension 2(n+1)^2,
// with factor labels "A", "B", "C" in that order. Learning operators live on
// Sym(A) (x) Sym(C), labels "A", "C".

#include <cstddef>
#include <vector>

#include "qlm/hilbert.h"
#include "qlm/su2.h"

namespace qlm {

/// Error of the Helstrom measurement when both states are known: 1/6 on
/// average over Haar-random pairs.
inline constexpr double kKnownStatesError = 1.0 / 6.0;

/// P = (1 - delta/2)/2, delta being the trace-norm distance.
double error_from_delta(double delta);

/// Closed-form minimum error of programmable discrimination.
double optimal_error(int n);

struct AverageStates {
  HermitianOperator sigma0;
  HermitianOperator sigma1;
};

/// sigma0 = 1_{AB} (x) 1_C / (d_n d_{n+1}), sigma1 = 1_A (x) 1_{BC} / (d_n d_{n+1})
/// on the full (2n+1)-qubit space, built from Dicke isometries.
AverageStates qubit_average_states(int n, const Capacity& capacity = {});

/// The same operators restricted to the embedded space, built from
/// Clebsch-Gordan couplings.
AverageStates embedded_average_states(int n);

/// (1 - ||sigma0 - sigma1||_1 / 2) / 2 on the full qubit space.
double brute_force_error(int n, const Capacity& capacity = {});

/// Seed |phi0> = sum_{j=0}^n sqrt(2j+1) |j, 0> on the coupled AC pair.
struct SeedState {
  int n = 0;
  std::vector<double> amplitudes;  // indexed by j

  double squared_norm() const;
  /// |phi0> in the product Dicke basis of Sym(A) (x) Sym(C).
  CVector product_vector() const;
};

SeedState seed_state(int n);

struct PovmOutcome {
  double weight = 0.0;
  RotationParams rotation;
};

enum class PovmKind { kQuadrature, kTetrahedron };

/// L_mu = weight_mu * U_mu [phi0] U_mu^dagger with U_mu = D^{n/2}(g_mu)^{(x)2}.
struct CovariantPovm {
  int n = 0;
  PovmKind kind = PovmKind::kQuadrature;
  std::vector<PovmOutcome> outcomes;
  SeedState seed;

  std::size_t size() const { return outcomes.size(); }
  /// U_mu |phi0> (norm^2 = d_n^2).
  CVector outcome_vector(std::size_t mu) const;
  /// L_mu on Sym(A) (x) Sym(C).
  HermitianOperator element(std::size_t mu) const;
};

/// Product quadrature: Gauss-Legendre in cos(beta) with n+1 nodes times 2n+1
/// equispaced azimuths; (n+1)(2n+1) outcomes.
CovariantPovm covariant_povm(int n);

/// n = 1 covariant POVM with four equiprobable outcomes at tetrahedron vertices.
CovariantPovm tetrahedron_povm();

/// sum_mu L_mu.
CMatrix assembled_learning_sum(const CovariantPovm& povm);

/// max |sum_mu L_mu - 1| entry.
double completeness_defect(const CovariantPovm& povm);

struct ConditionedPair {
  std::size_t mu = 0;
  double p_mu = 0.0;
  BlochVector r0;
  BlochVector r1;
  BlochVector decision_axis;
};

/// Conditioned data-qubit states rho_{0/1}^mu = tr_AC(L_mu sigma_{0/1}) / p_mu.
/// The decision axis is (r0 - r1)/|r0 - r1|, or +z on a tie.
ConditionedPair conditioned_pair(const CovariantPovm& povm, std::size_t mu,
                                 const Capacity& capacity = {});

/// All conditioned pairs, in outcome order.
std::vector<ConditionedPair> conditioned_pairs(const CovariantPovm& povm,
                                               const Capacity& capacity = {});

/// sum_mu p_mu |r0^mu - r1^mu|.
double lm_delta_from_povm(int n, const CovariantPovm& povm, const Capacity& capacity = {});

struct LearningMeasurement {
  HermitianOperator e0;
  HermitianOperator e1;
};

/// E0 = sum_mu L_mu (x) D_mu, E1 = sum_mu L_mu (x) (1 - D_mu) on the embedded
/// space, D_mu being the projector along the decision axis.
LearningMeasurement assemble_learning_measurement(const CovariantPovm& povm,
                                                  const Capacity& capacity = {});

/// Amplitudes of the projection of |phi0>|up> onto the A(BC)-symmetric
/// subspace, on the coupled states |j - 1/2, 1/2>, j = 1..n+1.
std::vector<double> projection_coefficients(int n);

/// Learning-machine error from the projection amplitudes; valid for large n.
double lm_error_projection(int n);

int outcome_bound(int n);
double memory_bits(const CovariantPovm& povm);

double helstrom_error(const BlochVector& r0, const BlochVector& r1);

}  // namespace qlm
