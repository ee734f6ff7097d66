#pragma once

// Dense state and operator arithmetic on labeled tensor-product spaces.
//
// Tensor products put the first factor in the most significant position
// (Kronecker convention). Qubit basis order is (|up>, |down>), i.e. descending
// magnetic number, consistent with su2.h.

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlm {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Eigenvalues in (-kTieEpsilon, kTieEpsilon) are treated as zero.
inline constexpr double kTieEpsilon = 1e-10;

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest training-set size n for which explicit qubit-space constructions
/// (2n+1 qubits) are allowed.
struct Capacity {
  int max_n = 5;
  int max_qubits() const { return 2 * max_n + 1; }
};

struct Factor {
  std::string label;
  int dim = 1;
};

class SpaceLayout {
 public:
  SpaceLayout() = default;
  explicit SpaceLayout(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  int total_dim() const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const SpaceLayout& a, const SpaceLayout& b);

 private:
  std::vector<Factor> factors_;
};

/// Square operator on a labeled space. `hermitian()` records whether the
/// matrix passed the Hermiticity check at construction; non-Hermitian
/// operators are allowed (products like L*sigma) but rejected by spectral
/// routines.
class HermitianOperator {
 public:
  HermitianOperator(CMatrix matrix, SpaceLayout layout);

  const CMatrix& matrix() const { return matrix_; }
  const SpaceLayout& layout() const { return layout_; }
  bool hermitian() const { return hermitian_; }
  Complex trace() const { return matrix_.trace(); }

 private:
  CMatrix matrix_;
  SpaceLayout layout_;
  bool hermitian_ = false;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Eigen::Vector3d vec() const { return {x, y, z}; }
  static BlochVector from(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }
  double norm() const { return vec().norm(); }
};

/// max |M - M^dagger| entry.
double hermiticity_defect(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Pauli matrix sigma_k for k = 1, 2, 3 (x, y, z).
CMatrix pauli(int k);

/// Qubit density operator with the given Bloch vector.
CMatrix qubit_density(const BlochVector& r);

/// 2^n x (n+1) isometry whose column k is the Dicke state with k spins down
/// (magnetic number n/2 - k). Throws CapacityError when n exceeds the qubit
/// budget.
CMatrix dicke_isometry(int n, const Capacity& capacity = {});

/// Projector onto the symmetric subspace of m qubits, in the qubit basis.
CMatrix symmetric_projector(int m, const Capacity& capacity = {});

/// Coherent state |psi>^{(x)n} expressed in the Dicke basis of dicke_isometry.
CVector coherent_state(int n, Complex up, Complex down);

HermitianOperator partial_trace(const HermitianOperator& op, const std::vector<std::string>& keep);

/// Sum of absolute eigenvalues. Throws std::domain_error if not Hermitian.
double trace_norm(const HermitianOperator& op);

/// Projector onto eigenvectors with eigenvalue > tie_epsilon.
HermitianOperator positive_part_projector(const HermitianOperator& op,
                                          double tie_epsilon = kTieEpsilon);

/// r_k = tr(op sigma_k) / tr(op) for a 2x2 operator.
BlochVector bloch_of(const HermitianOperator& op);

}  // namespace qlm
