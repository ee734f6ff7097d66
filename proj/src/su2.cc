#include "qlm/su2.h"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qlm {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Float = boost::multiprecision::cpp_bin_float_50;

cpp_int factorial(int k) {
  cpp_int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// sign(sum) * sqrt(sum^2 * radicand), with the square root taken at 50 digits.
double signed_root(const cpp_rational& sum, const cpp_rational& radicand) {
  if (sum == 0) return 0.0;
  cpp_rational sq = sum * sum * radicand;
  Float value = sqrt(Float(numerator(sq)) / Float(denominator(sq)));
  double magnitude = value.convert_to<double>();
  return sum < 0 ? -magnitude : magnitude;
}

// Doubled quantity to the integer it represents; callers guarantee evenness.
int half(int twice) { return twice / 2; }

// Delta(abc)^2 = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!
cpp_rational triangle_coefficient(HalfInt a, HalfInt b, HalfInt c) {
  int ta = a.twice(), tb = b.twice(), tc = c.twice();
  return cpp_rational(factorial(half(ta + tb - tc)) * factorial(half(ta - tb + tc)) *
                          factorial(half(-ta + tb + tc)),
                      factorial(half(ta + tb + tc) + 1));
}

long double log_factorial(int k) { return std::lgammal(static_cast<long double>(k) + 1.0L); }

long double int_pow(long double base, int exponent) {
  long double r = 1.0L;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

void require_spin(HalfInt j) {
  if (j.twice() < 0) throw std::domain_error("negative angular momentum " + j.str());
}

void require_projection(HalfInt j, HalfInt m) {
  require_spin(j);
  int tm = m.twice();
  if (std::abs(tm) > j.twice() || (j.twice() - tm) % 2 != 0) {
    throw std::domain_error("m = " + m.str() + " is not a projection of j = " + j.str());
  }
}

bool is_triad(HalfInt a, HalfInt b, HalfInt c) {
  int ta = a.twice(), tb = b.twice(), tc = c.twice();
  if (ta < 0 || tb < 0 || tc < 0) return false;
  if ((ta + tb + tc) % 2 != 0) return false;
  return tc >= std::abs(ta - tb) && tc <= ta + tb;
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  require_projection(j1, m1);
  require_projection(j2, m2);
  require_spin(J);
  if (M != m1 + m2) return 0.0;
  if (!is_triad(j1, j2, J)) return 0.0;
  if (std::abs(M.twice()) > J.twice()) return 0.0;

  const int t1 = j1.twice(), t2 = j2.twice(), tJ = J.twice();
  const int tm1 = m1.twice(), tm2 = m2.twice(), tM = M.twice();

  cpp_rational radicand = cpp_int(tJ + 1) * triangle_coefficient(j1, j2, J);
  radicand *=cpp_rational(factorial(half(tJ + tM)) * factorial(half(tJ - tM)) *
                           factorial(half(t1 - tm1)) * factorial(half(t1 + tm1)) *
                           factorial(half(t2 - tm2)) * factorial(half(t2 + tm2)));

  const int a = half(t1 + t2 - tJ);
  const int b = half(t1 - tm1);
  const int c = half(t2 + tm2);
  const int d = half(tJ - t2 + tm1);
  const int e = half(tJ - t1 - tm2);
  const int k_min = std::max({0, -d, -e});
  const int k_max = std::min({a, b, c});

  cpp_rational sum = 0;
  for (int k = k_min; k <= k_max; ++k) {
    cpp_int denom = factorial(k) * factorial(a - k) * factorial(b - k) * factorial(c - k) *
                    factorial(d + k) * factorial(e + k);
    cpp_rational term(1, denom);
    if (k % 2 != 0) term = -term;
    sum += term;
  }
  return signed_root(sum, radicand);
}

double wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
  for (HalfInt j : {j1, j2, j3, j4, j5, j6}) require_spin(j);
  if (!is_triad(j1, j2, j3) || !is_triad(j1, j5, j6) || !is_triad(j4, j2, j6) ||
      !is_triad(j4, j5, j3)) {
    return 0.0;
  }
  cpp_rational radicand = triangle_coefficient(j1, j2, j3) * triangle_coefficient(j1, j5, j6) *
                          triangle_coefficient(j4, j2, j6) * triangle_coefficient(j4, j5, j3);

  const int a1 = half(j1.twice() + j2.twice() + j3.twice());
  const int a2 = half(j1.twice() + j5.twice() + j6.twice());
  const int a3 = half(j4.twice() + j2.twice() + j6.twice());
  const int a4 = half(j4.twice() + j5.twice() + j3.twice());
  const int b1 = half(j1.twice() + j2.twice() + j4.twice() + j5.twice());
  const int b2 = half(j2.twice() + j3.twice() + j5.twice() + j6.twice());
  const int b3 = half(j3.twice() + j1.twice() + j6.twice() + j4.twice());
  const int t_min = std::max({a1, a2, a3, a4});
  const int t_max = std::min({b1, b2, b3});

  cpp_rational sum = 0;
  for (int t = t_min; t <= t_max; ++t) {
    cpp_int denom = factorial(t - a1) * factorial(t - a2) * factorial(t - a3) *
                    factorial(t - a4) * factorial(b1 - t) * factorial(b2 - t) * factorial(b3 - t);
    cpp_rational term(factorial(t + 1), denom);
    if (t % 2 != 0) term = -term;
    sum += term;
  }
  return signed_root(sum, radicand);
}

double recoupling_overlap(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j12, HalfInt j23, HalfInt J) {
  const int phase_twice = j1.twice() + j2.twice() + j3.twice() + J.twice();
  const double phase = (half(phase_twice) % 2 == 0) ? 1.0 : -1.0;
  return phase * std::sqrt(static_cast<double>(multiplicity(j12) * multiplicity(j23))) *
         wigner_6j(j1, j2, j12, j3, J, j23);
}

Eigen::MatrixXd wigner_small_d(HalfInt j, double beta) {
  require_spin(j);
  const int dim = multiplicity(j);
  const int tj = j.twice();
  const long double c = std::cos(static_cast<long double>(beta) / 2.0L);
  const long double s = std::sin(static_cast<long double>(beta) / 2.0L);
  Eigen::MatrixXd d(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const int tmp = tj - 2 * row;  // 2m'
    for (int col = 0; col < dim; ++col) {
      const int tm = tj - 2 * col;  // 2m
      const int jpm = half(tj + tm), jmm = half(tj - tm);
      const int jpmp = half(tj + tmp), jmmp = half(tj - tmp);
      const int mp_minus_m = half(tmp - tm);
      const long double log_pre =
          0.5L * (log_factorial(jpmp) + log_factorial(jmmp) + log_factorial(jpm) + log_factorial(jmm));
      long double acc = 0.0L;
      for (int k = std::max(0, -mp_minus_m); k <= std::min(jpm, jmmp); ++k) {
        const long double log_den = log_factorial(jpm - k) + log_factorial(k) +
                                    log_factorial(mp_minus_m + k) + log_factorial(jmmp - k);
        const long double term = std::exp(log_pre - log_den) *
                                 int_pow(c, tj - mp_minus_m - 2 * k) *
                                 int_pow(s, mp_minus_m + 2 * k);
        acc += ((mp_minus_m + k) % 2 == 0) ? term : -term;
      }
      d(row, col) = static_cast<double>(acc);
    }
  }
  return d;
}

Eigen::MatrixXcd rotation_operator(HalfInt j, const RotationParams& params) {
  const Eigen::MatrixXd d = wigner_small_d(j, params.beta);
  const int dim = multiplicity(j);
  Eigen::MatrixXcd out(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const double mp = (j.twice() - 2 * row) / 2.0;
    for (int col = 0; col < dim; ++col) {
      const double m = (j.twice() - 2 * col) / 2.0;
      out(row, col) = std::polar(1.0, -mp * params.alpha - m * params.gamma) * d(row, col);
    }
  }
  return out;
}

Eigen::MatrixXd coupled_basis(HalfInt j1, HalfInt j2, HalfInt J) {
  if (!is_triad(j1, j2, J)) {
    throw std::domain_error("cannot couple " + j1.str() + " and " + j2.str() + " to " + J.str());
  }
  const int d1 = multiplicity(j1), d2 = multiplicity(j2), dJ = multiplicity(J);
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(d1 * d2, dJ);
  for (int col = 0; col < dJ; ++col) {
    const HalfInt M = HalfInt::from_twice(J.twice() - 2 * col);
    for (int i1 = 0; i1 < d1; ++i1) {
      const HalfInt m1 = HalfInt::from_twice(j1.twice() - 2 * i1);
      const HalfInt m2 = M - m1;
      if (std::abs(m2.twice()) > j2.twice()) continue;
      const int i2 = half(j2.twice() - m2.twice());
      basis(i1 * d2 + i2, col) = clebsch_gordan(j1, m1, j2, m2, J, M);
    }
  }
  return basis;
}

RotationParams euler_angles_of(const Eigen::Matrix2cd& u) {
  const std::complex<double> u00 = u(0, 0), u10 = u(1, 0);
  const double c = std::abs(u00), s = std::abs(u10);
  RotationParams p;
  p.beta = 2.0 * std::atan2(s, c);
  constexpr double kTiny = 1e-14;
  if (s < kTiny) {
    p.alpha = -2.0 * std::arg(u00);
  } else if (c < kTiny) {
    p.alpha = 2.0 * std::arg(u10);
  } else {
    p.alpha = std::arg(u10) - std::arg(u00);
    p.gamma = -std::arg(u10) - std::arg(u00);
  }
  return p;
}

Eigen::Matrix3d rotation_matrix(const RotationParams& params) {
  using Eigen::AngleAxisd;
  using Eigen::Vector3d;
  return (AngleAxisd(params.alpha, Vector3d::UnitZ()) * AngleAxisd(params.beta, Vector3d::UnitY()) *
          AngleAxisd(params.gamma, Vector3d::UnitZ()))
      .toRotationMatrix();
}

RotationParams rotation_taking_z_to(const Eigen::Vector3d& v) {
  const Eigen::Vector3d u = v.normalized();
  RotationParams p;
  p.beta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  p.alpha = (std::hypot(u.x(), u.y()) > 0.0) ? std::atan2(u.y(), u.x()) : 0.0;
  return p;
}

}  // namespace qlm
