#include "qlm/hilbert.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace qlm {
namespace {

constexpr double kHermitianTolerance = 1e-12;

void require_hermitian(const HermitianOperator& op, const char* what) {
  if (!op.hermitian()) throw std::domain_error(std::string(what) + ": operator is not Hermitian");
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

SpaceLayout::SpaceLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const Factor& f : factors_) {
    if (f.dim < 1) throw std::domain_error("factor " + f.label + " has dimension < 1");
    if (!seen.insert(f.label).second) throw std::domain_error("duplicate factor label " + f.label);
  }
}

int SpaceLayout::total_dim() const {
  int d = 1;
  for (const Factor& f : factors_) d *= f.dim;
  return d;
}

std::optional<std::size_t> SpaceLayout::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].label == label) return i;
  }
  return std::nullopt;
}

bool operator==(const SpaceLayout& a, const SpaceLayout& b) {
  if (a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    if (a.factors_[i].label != b.factors_[i].label || a.factors_[i].dim != b.factors_[i].dim) {
      return false;
    }
  }
  return true;
}

double hermiticity_defect(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(CMatrix matrix, SpaceLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
  if (matrix_.rows() != matrix_.cols()) throw std::domain_error("operator matrix is not square");
  if (matrix_.rows() != layout_.total_dim()) {
    throw std::domain_error("operator dimension does not match its layout");
  }
  const double scale = matrix_.size() ? std::max(1.0, matrix_.cwiseAbs().maxCoeff()) : 1.0;
  hermitian_ = hermiticity_defect(matrix_) < kHermitianTolerance * scale;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix pauli(int k) {
  CMatrix p(2, 2);
  const Complex i(0.0, 1.0);
  switch (k) {
    case 1: p << 0.0, 1.0, 1.0, 0.0; break;
    case 2: p << 0.0, -i, i, 0.0; break;
    case 3: p << 1.0, 0.0, 0.0, -1.0; break;
    default: throw std::domain_error("pauli index must be 1, 2 or 3");
  }
  return p;
}

CMatrix qubit_density(const BlochVector& r) {
  return 0.5 * (CMatrix::Identity(2, 2) + r.x * pauli(1) + r.y * pauli(2) + r.z * pauli(3));
}

CMatrix dicke_isometry(int n, const Capacity& capacity) {
  if (n < 1) throw std::domain_error("dicke_isometry needs n >= 1");
  if (n > capacity.max_qubits()) {
    throw CapacityError("dicke_isometry: " + std::to_string(n) + " qubits exceeds the budget of " +
                        std::to_string(capacity.max_qubits()));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix v = CMatrix::Zero(dim, n + 1);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const int downs = std::popcount(static_cast<unsigned long long>(x));
    v(x, downs) = 1.0;
  }
  for (int k = 0; k <= n; ++k) v.col(k) /= std::sqrt(binomial(n, k));
  return v;
}

CMatrix symmetric_projector(int m, const Capacity& capacity) {
  const CMatrix v = dicke_isometry(m, capacity);
  return v * v.adjoint();
}

CVector coherent_state(int n, Complex up, Complex down) {
  // Powers by repeated multiplication so that 0^0 = 1.
  std::vector<Complex> up_pow(n + 1, 1.0), down_pow(n + 1, 1.0);
  for (int k = 1; k <= n; ++k) {
    up_pow[k] = up_pow[k - 1] * up;
    down_pow[k] = down_pow[k - 1] * down;
  }
  CVector out(n + 1);
  for (int k = 0; k <= n; ++k) out(k) = std::sqrt(binomial(n, k)) * up_pow[n - k] * down_pow[k];
  return out;
}

HermitianOperator partial_trace(const HermitianOperator& op, const std::vector<std::string>& keep) {
  const auto& factors = op.layout().factors();
  std::vector<bool> kept(factors.size(), false);
  for (const std::string& label : keep) {
    auto idx = op.layout().index_of(label);
    if (!idx) throw std::domain_error("partial_trace: unknown factor label " + label);
    kept[*idx] = true;
  }

  std::vector<Factor> out_factors;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (kept[f]) out_factors.push_back(factors[f]);
  }
  SpaceLayout out_layout(out_factors);

  // For every full index, its position within the kept and traced subspaces.
  const int dim = op.layout().total_dim();
  std::vector<int> kept_index(dim), traced_index(dim);
  for (int r = 0; r < dim; ++r) {
    int rest = r, k_idx = 0, t_idx = 0, k_stride = 1, t_stride = 1;
    for (std::size_t f = factors.size(); f-- > 0;) {
      const int digit = rest % factors[f].dim;
      rest /= factors[f].dim;
      if (kept[f]) {
        k_idx += digit * k_stride;
        k_stride *= factors[f].dim;
      } else {
        t_idx += digit * t_stride;
        t_stride *= factors[f].dim;
      }
    }
    kept_index[r] = k_idx;
    traced_index[r] = t_idx;
  }

  const CMatrix& m = op.matrix();
  CMatrix out = CMatrix::Zero(out_layout.total_dim(), out_layout.total_dim());
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) {
      if (traced_index[r] == traced_index[c]) out(kept_index[r], kept_index[c]) += m(r, c);
    }
  }
  return HermitianOperator(std::move(out), std::move(out_layout));
}

double trace_norm(const HermitianOperator& op) {
  require_hermitian(op, "trace_norm");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

HermitianOperator positive_part_projector(const HermitianOperator& op, double tie_epsilon) {
  require_hermitian(op, "positive_part_projector");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(op.matrix());
  const auto& values = solver.eigenvalues();
  const CMatrix& vectors = solver.eigenvectors();
  CMatrix proj = CMatrix::Zero(op.matrix().rows(), op.matrix().cols());
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values(k) > tie_epsilon) proj += vectors.col(k) * vectors.col(k).adjoint();
  }
  return HermitianOperator(std::move(proj), op.layout());
}

BlochVector bloch_of(const HermitianOperator& op) {
  if (op.matrix().rows() != 2) throw std::domain_error("bloch_of: operator is not a single qubit");
  const Complex tr = op.trace();
  if (std::abs(tr) == 0.0) throw std::domain_error("bloch_of: operator has zero trace");
  auto component = [&](int k) { return ((op.matrix() * pauli(k)).trace() / tr).real(); };
  return {component(1), component(2), component(3)};
}

}  // namespace qlm
