#pragma once

// SU(2) representation kernels.
//
// Conventions used throughout the library:
//  * Angular momenta and magnetic numbers are stored doubled (HalfInt), so
//    half-integers are exact.
//  * Clebsch-Gordan coefficients follow the Condon-Shortley phase convention.
//  * Basis vectors of a spin-j irrep are ordered by DESCENDING magnetic
//    number: index i <-> m = j - i. For a qubit this is (|up>, |down>).
//  * Rotations use z-y-z Euler angles, D(a,b,c) = exp(-i a Jz) d(b) exp(-i c Jz).

#include <Eigen/Dense>
#include <compare>
#include <string>

namespace qlm {

class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt whole(int value) { return from_twice(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return twice_ / 2.0; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const;

 private:
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

/// Number of magnetic states, 2j+1.
constexpr int multiplicity(HalfInt j) { return j.twice() + 1; }

/// Throws std::domain_error unless j >= 0.
void require_spin(HalfInt j);
/// Throws std::domain_error unless m is a valid projection of j.
void require_projection(HalfInt j, HalfInt m);

/// True when (a, b, c) satisfy the triangle rule and a+b+c is an integer.
bool is_triad(HalfInt a, HalfInt b, HalfInt c);

struct RotationParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// <J M | j1 m1; j2 m2>. Zero when M != m1+m2, |M| > J or the triad (j1 j2 J)
/// is not allowed. Throws std::domain_error for negative spins or for m1, m2
/// that are not valid projections of j1, j2.
///
/// Evaluated with Racah's single-sum formula in exact rational arithmetic;
/// only the final square root is taken in floating point.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// Wigner 6j symbol {j1 j2 j3; j4 j5 j6}, Racah formula in exact rationals.
/// Zero when any of the four triads is not allowed.
double wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

/// Recoupling overlap <((j1 j2)j12, j3) J | (j1, (j2 j3)j23) J>, expressed
/// through a 6j symbol.
double recoupling_overlap(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j12, HalfInt j23, HalfInt J);

/// Small Wigner matrix d^j(beta), rows m', columns m, both descending.
Eigen::MatrixXd wigner_small_d(HalfInt j, double beta);

/// Unitary D^j(alpha, beta, gamma) on the spin-j irrep.
Eigen::MatrixXcd rotation_operator(HalfInt j, const RotationParams& params);

/// Columns are the coupled states |J M>, M descending, written in the product
/// basis |j1 m1> (x) |j2 m2> (m1 major, both descending). Entries are
/// Clebsch-Gordan coefficients.
Eigen::MatrixXd coupled_basis(HalfInt j1, HalfInt j2, HalfInt J);

/// Euler angles of an SU(2) matrix in the defining representation. The
/// result reproduces u up to an overall sign.
RotationParams euler_angles_of(const Eigen::Matrix2cd& u);

/// SO(3) matrix of the rotation (acts on Bloch vectors).
Eigen::Matrix3d rotation_matrix(const RotationParams& params);

/// A rotation with gamma = 0 whose SO(3) image maps +z onto the unit vector v.
RotationParams rotation_taking_z_to(const Eigen::Vector3d& v);

}  // namespace qlm
