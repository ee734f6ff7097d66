#include "qlm/verify.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "qlm/machines.h"
#include "qlm/su2.h"

namespace qlm {
namespace {

double min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double recoupling_defect(int n) {
  const HalfInt spin = HalfInt::from_twice(n);
  const HalfInt bc = HalfInt::from_twice(n + 1);
  const double d = n + 1.0;
  double worst = 0.0;
  for (int j = 0; j <= n; ++j) {
    for (int sign : {+1, -1}) {
      const HalfInt J = HalfInt::from_twice(2 * j + sign);
      if (J.twice() < 1) continue;
      const double overlap = recoupling_overlap(spin, spin, kHalf, HalfInt::whole(j), bc, J);
      const double closed = std::sqrt((n + 1.5 + sign * (j + 0.5)) / (2.0 * d));
      worst = std::max(worst, std::abs(std::abs(overlap) - closed));
    }
  }
  return worst;
}

double cg_orthogonality_defect(int max_twice) {
  double worst = 0.0;
  for (int t1 = 0; t1 <= max_twice; ++t1) {
    for (int t2 = 0; t2 <= max_twice; ++t2) {
      const HalfInt j1 = HalfInt::from_twice(t1), j2 = HalfInt::from_twice(t2);
      for (int tJ = std::abs(t1 - t2); tJ <= t1 + t2; tJ += 2) {
        for (int tK = std::abs(t1 - t2); tK <= t1 + t2; tK += 2) {
          const Eigen::MatrixXd a = coupled_basis(j1, j2, HalfInt::from_twice(tJ));
          const Eigen::MatrixXd b = coupled_basis(j1, j2, HalfInt::from_twice(tK));
          Eigen::MatrixXd gram = a.transpose() * b;
          if (tJ == tK) gram -= Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
          worst = std::max(worst, gram.cwiseAbs().maxCoeff());
        }
      }
    }
  }
  return worst;
}

}  // namespace

std::vector<CheckResult> run_verification(int n_cap) {
  CheckResult brute{"closed_form_vs_brute_force", 0.0, 1e-9};
  CheckResult povm_delta{"closed_form_vs_povm_delta", 0.0, 1e-9};
  CheckResult assembled{"closed_form_vs_assembled_measurement", 0.0, 1e-9};
  CheckResult validity{"learning_measurement_validity", 0.0, 1e-10};
  CheckResult completeness{"quadrature_completeness", 0.0, 1e-10};
  CheckResult outcomes{"quadrature_outcome_count_excess", 0.0, 0.5};
  CheckResult recoupling{"sixj_overlap_closed_form", 0.0, 1e-12};

  for (int n = 1; n <= n_cap; ++n) {
    const double exact = optimal_error(n);
    brute.max_defect = std::max(brute.max_defect, std::abs(brute_force_error(n) - exact));

    const CovariantPovm povm = covariant_povm(n);
    povm_delta.max_defect = std::max(
        povm_delta.max_defect, std::abs(error_from_delta(lm_delta_from_povm(n, povm)) - exact));
    completeness.max_defect = std::max(completeness.max_defect, completeness_defect(povm));
    // Positive when the construction exceeds the (n+1)(2n+1) design size or the bound.
    outcomes.max_defect = std::max<double>(
        outcomes.max_defect,
        std::max<double>(static_cast<double>(povm.size()) - (n + 1) * (2 * n + 1),
                         static_cast<double>(povm.size()) - outcome_bound(n)));

    const LearningMeasurement e = assemble_learning_measurement(povm);
    const AverageStates sigma = embedded_average_states(n);
    const double error =
        ((sigma.sigma1.matrix() * e.e0.matrix()).trace().real() +
         (sigma.sigma0.matrix() * e.e1.matrix()).trace().real()) / 2.0;
    assembled.max_defect = std::max(assembled.max_defect, std::abs(error - exact));
    const CMatrix sum = e.e0.matrix() + e.e1.matrix();
    validity.max_defect = std::max(
        {validity.max_defect, (sum - CMatrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff(),
         -min_eigenvalue(e.e0.matrix()), -min_eigenvalue(e.e1.matrix())});

    recoupling.max_defect = std::max(recoupling.max_defect, recoupling_defect(n));
  }

  CheckResult projection{"closed_form_vs_projection", 0.0, 1e-12};
  for (int n = 1; n <= 100; ++n) {
    projection.max_defect =
        std::max(projection.max_defect, std::abs(lm_error_projection(n) - optimal_error(n)));
  }

  const CovariantPovm tetra = tetrahedron_povm();
  CheckResult tetra_delta{"tetrahedron_delta_vs_inverse_sqrt3",
                          std::abs(lm_delta_from_povm(1, tetra) - 1.0 / std::sqrt(3.0)), 1e-12};
  CheckResult tetra_complete{"tetrahedron_completeness", completeness_defect(tetra), 1e-10};
  CheckResult cg{"cg_orthogonality", cg_orthogonality_defect(4), 1e-12};

  return {brute,      povm_delta,  assembled,      validity,       projection, completeness,
          outcomes,   tetra_delta, tetra_complete, recoupling,     cg};
}

}  // namespace qlm
