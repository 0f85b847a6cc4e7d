#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace kacward {

/// Arrival direction of a step, matching the row/column semantics of the
/// 4x4 step matrix: 1 = moving up, 2 = moving down, 3 = moving rightward
/// ("from the left"), 4 = moving leftward ("from the right").
enum class Direction : int { Up = 1, Down = 2, FromLeft = 3, FromRight = 4 };

/// Thrown when det(I - uM) is nonpositive at a quadrature node (happens
/// only at the critical singular point).
class SingularDeterminantError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Direction-resolved arrival amplitudes on the free plane, evolved by the
/// one-step recursions. The window covers |x|, |y| <= max_steps; amplitudes
/// vanish outside |x|, |y| <= n automatically.
class AmplitudeField {
public:
  AmplitudeField(int max_steps, double u, Direction seed = Direction::Up);

  void step();  // n -> n+1
  int steps() const { return n_; }

  std::complex<double> amplitude(int x, int y, Direction d) const;
  std::complex<double> total(int x, int y) const;  // sum over directions

private:
  std::size_t idx(int x, int y) const;
  int half_;
  int n_{0};
  double u_;
  std::array<std::vector<std::complex<double>>, 4> field_;  // U, D, L, R
};

/// The matrix uM(eps, eta): row i = direction of the previous step, column
/// j = direction of the next one; the four 180-degree reversal entries are
/// exactly zero and every other entry has modulus u.
Eigen::Matrix4cd step_matrix(double eps, double eta, double u);

/// (1/(2pi)^2) * double integral of Tr (uM)^n over [0,2pi)^2, by the
/// uniform trapezoidal rule with `resolution` nodes per axis. Tr (uM)^n is
/// a trigonometric polynomial of degree n per axis, so resolution >= n+1
/// makes the rule exact up to roundoff. The imaginary residue is asserted
/// below 1e-12 and discarded.
double trace_power_integral(int n, double u, int resolution = 0);

/// -(1/2) * trace_power_integral: the signed amplitude sum of closed
/// walks of length n through a fixed base point, inversions removed.
double closed_amplitude_sum(int n, double u, int resolution = 0);

/// Sum over the four seed directions of the matching-direction amplitude at
/// the origin after n recursion steps; equals trace_power_integral(n, u).
double origin_direction_sum(int n, double u);

/// ln[(u^2+1)^2 - 2u(1-u^2)(cos eps + cos eta)] = ln det(I - uM).
double log_det_integrand(double eps, double eta, double u);

struct SeriesCheckReport {
  double log_det_quadrature{};
  std::vector<double> partial_sums;  // partial_sums[m-1] = sum_{n<=m} -T_n/n
  std::vector<double> residuals;     // |partial - log_det_quadrature|
};

/// Partial sums of sum_n -(1/n)(1/(2pi)^2) Int Tr(uM)^n against the
/// quadrature of ln det(I - uM). Only valid inside |u| < 1/4, where the
/// series converges uniformly.
SeriesCheckReport trace_log_series_check(double u, int n_max,
                                         int resolution = 0);

}  // namespace kacward
