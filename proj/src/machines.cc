#include "qlm/machines.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qlm/quadrature.h"

namespace qlm {
namespace {

void require_training_size(int n) {
  if (n < 1) throw std::domain_error("training-set size n must be >= 1, got " + std::to_string(n));
}

void require_within_cap(int n, const Capacity& capacity) {
  if (n > capacity.max_n) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the explicit-construction cap of " +
                        std::to_string(capacity.max_n));
  }
}

SpaceLayout training_layout(int n) { return SpaceLayout({{"A", n + 1}, {"C", n + 1}}); }

SpaceLayout embedded_layout(int n) { return SpaceLayout({{"A", n + 1}, {"B", 2}, {"C", n + 1}}); }

// (L (x) D) reordered from (A, C, B) to (A, B, C).
CMatrix embed_learning_and_data(const CMatrix& learning, const CMatrix& data, int d) {
  const int dim = 2 * d * d;
  CMatrix out(dim, dim);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < d; ++c) {
        const int row = (a * 2 + b) * d + c;
        for (int a2 = 0; a2 < d; ++a2)
          for (int b2 = 0; b2 < 2; ++b2)
            for (int c2 = 0; c2 < d; ++c2) {
              const int col = (a2 * 2 + b2) * d + c2;
              out(row, col) = learning(a * d + c, a2 * d + c2) * data(b, b2);
            }
      }
  return out;
}

ConditionedPair condition_on(const CovariantPovm& povm, std::size_t mu, const AverageStates& sigma) {
  const int n = povm.n;
  const int d = n + 1;
  const HermitianOperator learning = povm.element(mu);
  const CMatrix lifted = embed_learning_and_data(learning.matrix(), CMatrix::Identity(2, 2), d);

  auto conditioned_state = [&](const HermitianOperator& s) {
    HermitianOperator product(lifted * s.matrix(), embedded_layout(n));
    return partial_trace(product, {"B"});
  };

  ConditionedPair pair;
  pair.mu = mu;
  pair.p_mu = learning.trace().real() / (d * d);
  pair.r0 = bloch_of(conditioned_state(sigma.sigma0));
  pair.r1 = bloch_of(conditioned_state(sigma.sigma1));
  const Eigen::Vector3d diff = pair.r0.vec() - pair.r1.vec();
  pair.decision_axis =
      diff.norm() > kTieEpsilon ? BlochVector::from(diff.normalized()) : BlochVector{0.0, 0.0, 1.0};
  return pair;
}

}  // namespace

double error_from_delta(double delta) { return (1.0 - delta / 2.0) / 2.0; }

double optimal_error(int n) {
  if (n < 0) throw std::domain_error("optimal_error needs n >= 0");
  const double d = n + 1.0;
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += k * std::sqrt(d * d - static_cast<double>(k) * k);
  return 0.5 - sum / (d * d * (n + 2.0));
}

AverageStates qubit_average_states(int n, const Capacity& capacity) {
  require_training_size(n);
  require_within_cap(n, capacity);
  const double norm = (n + 1.0) * (n + 2.0);
  const CMatrix sym_n = symmetric_projector(n, capacity);
  const CMatrix sym_n1 = symmetric_projector(n + 1, capacity);
  const int side = 1 << n;
  SpaceLayout layout({{"A", side}, {"B", 2}, {"C", side}});
  return {HermitianOperator(kron(sym_n1, sym_n) / norm, layout),
          HermitianOperator(kron(sym_n, sym_n1) / norm, layout)};
}

AverageStates embedded_average_states(int n) {
  require_training_size(n);
  const int d = n + 1;
  const double norm = (n + 1.0) * (n + 2.0);
  const HalfInt spin = HalfInt::from_twice(n);
  const HalfInt stretched = HalfInt::from_twice(n + 1);
  const Eigen::MatrixXd w_ab = coupled_basis(spin, kHalf, stretched);
  const Eigen::MatrixXd w_bc = coupled_basis(kHalf, spin, stretched);
  const CMatrix p_ab = (w_ab * w_ab.transpose()).cast<Complex>();
  const CMatrix p_bc = (w_bc * w_bc.transpose()).cast<Complex>();
  const CMatrix id = CMatrix::Identity(d, d);
  return {HermitianOperator(kron(p_ab, id) / norm, embedded_layout(n)),
          HermitianOperator(kron(id, p_bc) / norm, embedded_layout(n))};
}

double brute_force_error(int n, const Capacity& capacity) {
  const AverageStates s = qubit_average_states(n, capacity);
  const HermitianOperator diff(s.sigma0.matrix() - s.sigma1.matrix(), s.sigma0.layout());
  return error_from_delta(trace_norm(diff));
}

double SeedState::squared_norm() const {
  double s = 0.0;
  for (double a : amplitudes) s += a * a;
  return s;
}

CVector SeedState::product_vector() const {
  const int d = n + 1;
  const HalfInt spin = HalfInt::from_twice(n);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(d * d);
  for (int j = 0; j <= n; ++j) {
    // Column index of M = 0 in a descending spin-j multiplet is j.
    v += amplitudes[j] * coupled_basis(spin, spin, HalfInt::whole(j)).col(j);
  }
  return v.cast<Complex>();
}

SeedState seed_state(int n) {
  require_training_size(n);
  SeedState seed;
  seed.n = n;
  seed.amplitudes.resize(n + 1);
  for (int j = 0; j <= n; ++j) seed.amplitudes[j] = std::sqrt(2.0 * j + 1.0);
  return seed;
}

CVector CovariantPovm::outcome_vector(std::size_t mu) const {
  const CMatrix d = rotation_operator(HalfInt::from_twice(n), outcomes.at(mu).rotation);
  return kron(d, d) * seed.product_vector();
}

HermitianOperator CovariantPovm::element(std::size_t mu) const {
  const CVector v = outcome_vector(mu);
  return HermitianOperator(outcomes[mu].weight * (v * v.adjoint()), training_layout(n));
}

CovariantPovm covariant_povm(int n) {
  require_training_size(n);
  CovariantPovm povm;
  povm.n = n;
  povm.kind = PovmKind::kQuadrature;
  povm.seed = seed_state(n);
  const QuadratureRule polar = gauss_legendre(n + 1);
  const int azimuths = 2 * n + 1;
  for (std::size_t b = 0; b < polar.nodes.size(); ++b) {
    for (int a = 0; a < azimuths; ++a) {
      PovmOutcome outcome;
      outcome.weight = polar.weights[b] / 2.0 / azimuths;
      outcome.rotation.alpha = 2.0 * std::numbers::pi * a / azimuths;
      outcome.rotation.beta = std::acos(polar.nodes[b]);
      povm.outcomes.push_back(outcome);
    }
  }
  return povm;
}

CovariantPovm tetrahedron_povm() {
  CovariantPovm povm;
  povm.n = 1;
  povm.kind = PovmKind::kTetrahedron;
  povm.seed = seed_state(1);
  const Eigen::Vector3d vertices[] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (const Eigen::Vector3d& v : vertices) {
    povm.outcomes.push_back({0.25, rotation_taking_z_to(v)});
  }
  return povm;
}

CMatrix assembled_learning_sum(const CovariantPovm& povm) {
  const int d = povm.n + 1;
  CMatrix sum = CMatrix::Zero(d * d, d * d);
  for (std::size_t mu = 0; mu < povm.size(); ++mu) sum += povm.element(mu).matrix();
  return sum;
}

double completeness_defect(const CovariantPovm& povm) {
  const CMatrix sum = assembled_learning_sum(povm);
  return (sum - CMatrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
}

ConditionedPair conditioned_pair(const CovariantPovm& povm, std::size_t mu,
                                 const Capacity& capacity) {
  require_within_cap(povm.n, capacity);
  if (mu >= povm.size()) throw std::out_of_range("outcome index out of range");
  return condition_on(povm, mu, embedded_average_states(povm.n));
}

std::vector<ConditionedPair> conditioned_pairs(const CovariantPovm& povm,
                                               const Capacity& capacity) {
  require_within_cap(povm.n, capacity);
  const AverageStates sigma = embedded_average_states(povm.n);
  std::vector<ConditionedPair> pairs;
  pairs.reserve(povm.size());
  for (std::size_t mu = 0; mu < povm.size(); ++mu) pairs.push_back(condition_on(povm, mu, sigma));
  return pairs;
}

double lm_delta_from_povm(int n, const CovariantPovm& povm, const Capacity& capacity) {
  if (povm.n != n) throw std::domain_error("POVM was built for a different n");
  double delta = 0.0;
  for (const ConditionedPair& pair : conditioned_pairs(povm, capacity)) {
    delta += pair.p_mu * (pair.r0.vec() - pair.r1.vec()).norm();
  }
  return delta;
}

LearningMeasurement assemble_learning_measurement(const CovariantPovm& povm,
                                                  const Capacity& capacity) {
  const int d = povm.n + 1;
  const std::vector<ConditionedPair> pairs = conditioned_pairs(povm, capacity);
  CMatrix e0 = CMatrix::Zero(2 * d * d, 2 * d * d);
  CMatrix e1 = e0;
  for (std::size_t mu = 0; mu < povm.size(); ++mu) {
    const CMatrix learning = povm.element(mu).matrix();
    const CMatrix accept = qubit_density(pairs[mu].decision_axis);
    e0 += embed_learning_and_data(learning, accept, d);
    e1 += embed_learning_and_data(learning, CMatrix::Identity(2, 2) - accept, d);
  }
  return {HermitianOperator(std::move(e0), embedded_layout(povm.n)),
          HermitianOperator(std::move(e1), embedded_layout(povm.n))};
}

std::vector<double> projection_coefficients(int n) {
  require_training_size(n);
  const double d = n + 1.0;
  std::vector<double> coeffs;
  coeffs.reserve(n + 1);
  for (int j = 1; j <= n + 1; ++j) {
    // sqrt(d+j) - sqrt(d-j) without cancellation.
    const double gap = 2.0 * j / (std::sqrt(d + j) + std::sqrt(d - j));
    coeffs.push_back(std::sqrt(static_cast<double>(j)) * gap / std::sqrt(2.0 * d));
  }
  return coeffs;
}

double lm_error_projection(int n) {
  double norm_sq = 0.0;
  for (double c : projection_coefficients(n)) norm_sq += c * c;
  // The |phi0>|down> term onto the (AB)C-symmetric subspace has the same norm.
  return 2.0 * norm_sq / (2.0 * (n + 1.0) * (n + 2.0));
}

int outcome_bound(int n) {
  require_training_size(n);
  return 2 * (n + 1) * (2 * n + 1);
}

double memory_bits(const CovariantPovm& povm) { return std::log2(static_cast<double>(povm.size())); }

double helstrom_error(const BlochVector& r0, const BlochVector& r1) {
  return error_from_delta((r0.vec() - r1.vec()).norm());
}

}  // namespace qlm
