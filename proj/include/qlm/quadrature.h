#pragma once

#include <vector>

namespace qlm {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1] with `count` nodes, ascending. Exact for
/// polynomials of degree <= 2*count - 1; weights sum to 2.
QuadratureRule gauss_legendre(int count);

}  // namespace qlm
