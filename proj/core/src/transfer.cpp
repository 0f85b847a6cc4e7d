#include "kacward/transfer.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace kacward {

namespace {

using cd = std::complex<double>;

constexpr double kPi = std::numbers::pi;
const cd kAlpha = std::polar(1.0, kPi / 4.0);   // e^{i pi/4}, one left turn
const cd kAlphaBar = std::conj(kAlpha);

double check_real(cd value, const char* what) {
  if (std::abs(value.imag()) >= 1e-12) {
    throw std::logic_error(std::string(what) +
                           ": imaginary residue above 1e-12");
  }
  return value.real();
}

}  // namespace

AmplitudeField::AmplitudeField(int max_steps, double u, Direction seed)
    : half_(max_steps), u_(u) {
  if (max_steps < 0) throw std::invalid_argument("max_steps must be >= 0");
  const std::size_t size =
      static_cast<std::size_t>(2 * half_ + 1) * static_cast<std::size_t>(2 * half_ + 1);
  for (auto& f : field_) f.assign(size, cd{});
  field_[static_cast<std::size_t>(static_cast<int>(seed) - 1)][idx(0, 0)] = 1.0;
}

std::size_t AmplitudeField::idx(int x, int y) const {
  return static_cast<std::size_t>(y + half_) *
             static_cast<std::size_t>(2 * half_ + 1) +
         static_cast<std::size_t>(x + half_);
}

void AmplitudeField::step() {
  if (n_ >= half_) {
    throw std::logic_error("amplitude window exhausted; enlarge max_steps");
  }
  auto& up = field_[0];
  auto& down = field_[1];
  auto& left = field_[2];
  auto& right = field_[3];
  std::array<std::vector<cd>, 4> next;
  for (auto& f : next) f.assign(up.size(), cd{});

  auto at = [this](const std::vector<cd>& f, int x, int y) -> cd {
    if (x < -half_ || x > half_ || y < -half_ || y > half_) return cd{};
    return f[idx(x, y)];
  };

  for (int y = -half_; y <= half_; ++y) {
    for (int x = -half_; x <= half_; ++x) {
      const std::size_t k = idx(x, y);
      next[0][k] = u_ * (at(up, x, y - 1) + kAlpha * at(left, x, y - 1) +
                         kAlphaBar * at(right, x, y - 1));
      next[1][k] = u_ * (at(down, x, y + 1) + kAlphaBar * at(left, x, y + 1) +
                         kAlpha * at(right, x, y + 1));
      next[2][k] = u_ * (kAlphaBar * at(up, x - 1, y) +
                         kAlpha * at(down, x - 1, y) + at(left, x - 1, y));
      next[3][k] = u_ * (kAlpha * at(up, x + 1, y) +
                         kAlphaBar * at(down, x + 1, y) + at(right, x + 1, y));
    }
  }
  field_ = std::move(next);
  ++n_;
}

std::complex<double> AmplitudeField::amplitude(int x, int y, Direction d) const {
  if (x < -half_ || x > half_ || y < -half_ || y > half_) return {};
  return field_[static_cast<std::size_t>(static_cast<int>(d) - 1)][idx(x, y)];
}

std::complex<double> AmplitudeField::total(int x, int y) const {
  return amplitude(x, y, Direction::Up) + amplitude(x, y, Direction::Down) +
         amplitude(x, y, Direction::FromLeft) +
         amplitude(x, y, Direction::FromRight);
}

Eigen::Matrix4cd step_matrix(double eps, double eta, double u) {
  const cd v = std::polar(1.0, -eta);
  const cd vb = std::conj(v);
  const cd h = std::polar(1.0, eps);
  const cd hb = std::conj(h);
  const cd a = kAlpha;
  const cd ab = kAlphaBar;

  Eigen::Matrix4cd m;
  m << v, 0.0, ab * hb, a * h,        //
      0.0, vb, a * hb, ab * h,        //
      a * v, ab * vb, hb, 0.0,        //
      ab * v, a * vb, 0.0, h;
  return u * m;
}

double trace_power_integral(int n, double u, int resolution) {
  if (n < 1) throw std::invalid_argument("power must be >= 1");
  const int res = resolution > 0 ? resolution : n + 1;
  if (res < n + 1) {
    throw std::invalid_argument(
        "resolution must be at least n+1 for trigonometric exactness");
  }
  cd acc{};
  for (int j = 0; j < res; ++j) {
    const double eps = 2.0 * kPi * j / res;
    for (int k = 0; k < res; ++k) {
      const double eta = 2.0 * kPi * k / res;
      const Eigen::Matrix4cd um = step_matrix(eps, eta, u);
      Eigen::Matrix4cd p = um;
      for (int m = 1; m < n; ++m) p = p * um;
      acc += p.trace();
    }
  }
  acc /= static_cast<double>(res) * static_cast<double>(res);
  return check_real(acc, "trace_power_integral");
}

double closed_amplitude_sum(int n, double u, int resolution) {
  return -0.5 * trace_power_integral(n, u, resolution);
}

double origin_direction_sum(int n, double u) {
  cd acc{};
  for (int d = 1; d <= 4; ++d) {
    AmplitudeField field(n, u, static_cast<Direction>(d));
    for (int s = 0; s < n; ++s) field.step();
    acc += field.amplitude(0, 0, static_cast<Direction>(d));
  }
  return check_real(acc, "origin_direction_sum");
}

double log_det_integrand(double eps, double eta, double u) {
  const double arg = (u * u + 1.0) * (u * u + 1.0) -
                     2.0 * u * (1.0 - u * u) * (std::cos(eps) + std::cos(eta));
  if (arg <= 0.0) {
    throw SingularDeterminantError("det(I - uM) is nonpositive at this node");
  }
  return std::log(arg);
}

SeriesCheckReport trace_log_series_check(double u, int n_max, int resolution) {
  if (std::abs(u) >= 0.25) {
    throw std::domain_error(
        "trace-log series check requires |u| < 1/4 (uniform convergence)");
  }
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const int res = resolution > 0 ? std::max(resolution, n_max + 1) : n_max + 1;

  // Per-order trace integrals, accumulated over one sweep of the grid.
  std::vector<cd> traces(static_cast<std::size_t>(n_max), cd{});
  for (int j = 0; j < res; ++j) {
    const double eps = 2.0 * kPi * j / res;
    for (int k = 0; k < res; ++k) {
      const double eta = 2.0 * kPi * k / res;
      const Eigen::Matrix4cd um = step_matrix(eps, eta, u);
      Eigen::Matrix4cd p = Eigen::Matrix4cd::Identity();
      for (int m = 1; m <= n_max; ++m) {
        p = p * um;
        traces[static_cast<std::size_t>(m - 1)] += p.trace();
      }
    }
  }
  const double norm = static_cast<double>(res) * static_cast<double>(res);

  // Reference value: midpoint quadrature of ln det(I - uM); the integrand is
  // analytic and periodic, so a moderately fine grid converges past 1e-12.
  const int det_res = std::max(res, 256);
  double logdet = 0.0;
  for (int j = 0; j < det_res; ++j) {
    const double eps = 2.0 * kPi * (j + 0.5) / det_res;
    for (int k = 0; k < det_res; ++k) {
      const double eta = 2.0 * kPi * (k + 0.5) / det_res;
      logdet += log_det_integrand(eps, eta, u);
    }
  }
  logdet /= static_cast<double>(det_res) * static_cast<double>(det_res);

  SeriesCheckReport report;
  report.log_det_quadrature = logdet;
  double partial = 0.0;
  for (int m = 1; m <= n_max; ++m) {
    partial -= check_real(traces[static_cast<std::size_t>(m - 1)], "trace") /
               (norm * m);
    report.partial_sums.push_back(partial);
    report.residuals.push_back(std::abs(partial - logdet));
  }
  return report;
}

}  // namespace kacward
