#include "kacward/onsager.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

namespace kacward {

namespace {

constexpr double kPi = std::numbers::pi;

double log_integrand(double coupling_k, double cos_sum) {
  const double c2 = std::cosh(2.0 * coupling_k);
  const double arg = c2 * c2 - std::sinh(2.0 * coupling_k) * cos_sum;
  if (arg <= 0.0) {
    throw CriticalDivergenceError(
        "free-energy integrand hit its singular point");
  }
  return std::log(arg);
}

/// Midpoint average of f(cos eps + cos eta) over [0,2pi)^2.
template <typename F>
double midpoint_average(int resolution, F&& f) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  std::vector<double> cosines(static_cast<std::size_t>(resolution));
  for (int j = 0; j < resolution; ++j) {
    cosines[static_cast<std::size_t>(j)] =
        std::cos(2.0 * kPi * (j + 0.5) / resolution);
  }
  double sum = 0.0;
  for (int j = 0; j < resolution; ++j) {
    for (int k = 0; k < resolution; ++k) {
      sum += f(cosines[static_cast<std::size_t>(j)] +
               cosines[static_cast<std::size_t>(k)]);
    }
  }
  return sum / (static_cast<double>(resolution) * resolution);
}

}  // namespace

CouplingPoint CouplingPoint::from_coupling(double coupling_k) {
  CouplingPoint p;
  p.K = coupling_k;
  p.u = std::tanh(coupling_k);
  p.k = std::tanh(2.0 * coupling_k) / (2.0 * std::cosh(2.0 * coupling_k));
  p.k1 = 4.0 * p.k;
  return p;
}

double critical_coupling() {
  // 2 sinh 2K = cosh^2 2K is a double root: the residual -(sinh 2K - 1)^2
  // never changes sign, so bisect the equivalent sinh 2K = 1 instead.
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::sinh(2.0 * mid) < 1.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  const double closed_form = 0.5 * std::log(1.0 + std::sqrt(2.0));
  if (std::abs(root - closed_form) > 1e-14) {
    throw std::logic_error("critical coupling bisection drifted off");
  }
  return root;
}

double free_energy_density(double coupling_k, int resolution) {
  const double avg = midpoint_average(resolution, [&](double cos_sum) {
    return log_integrand(coupling_k, cos_sum);
  });
  return std::log(2.0) + 0.5 * avg;
}

ExtrapolatedValue free_energy_density_extrapolated(double coupling_k,
                                                   int base_resolution,
                                                   int levels) {
  if (levels < 2) throw std::invalid_argument("need at least 2 levels");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(levels));
  int res = base_resolution;
  for (int j = 0; j < levels; ++j, res *= 2) {
    values.push_back(free_energy_density(coupling_k, res));
  }

  ExtrapolatedValue out;
  for (std::size_t j = 1; j < values.size(); ++j) {
    out.deltas.push_back(std::abs(values[j] - values[j - 1]));
  }
  // Richardson table for h^2, h^4, ... error terms.
  std::vector<double> row = values;
  for (int m = 1; m < levels; ++m) {
    const double factor = std::pow(4.0, m);
    for (int j = levels - 1; j >= m; --j) {
      row[static_cast<std::size_t>(j)] =
          (factor * row[static_cast<std::size_t>(j)] -
           row[static_cast<std::size_t>(j - 1)]) /
          (factor - 1.0);
    }
  }
  out.value = row.back();
  return out;
}

double finite_size_log_z(int side, double coupling_k, int resolution) {
  if (side < 1) throw std::invalid_argument("side must be >= 1");
  // ln det(I - uM) = -4 ln cosh K + ln[cosh^2 2K - sinh 2K (cos+cos)]
  const double avg = midpoint_average(resolution, [&](double cos_sum) {
    return log_integrand(coupling_k, cos_sum);
  });
  const double log_det_avg = -4.0 * std::log(std::cosh(coupling_k)) + avg;
  return std::log(2.0) +
         2.0 * (1.0 - 1.0 / side) * std::log(std::cosh(coupling_k)) +
         0.5 * log_det_avg;
}

double series_coefficient(int n) {
  if (n < 0 || n > 60) throw std::invalid_argument("series order out of range");
  // central binomial C(2n, n), exactly, then squared in floating point
  __int128 binom = 1;
  for (int m = 1; m <= n; ++m) {
    binom = binom * 2 * (2 * m - 1) / m;  // exact: n divides the product
  }
  const double b = static_cast<double>(binom);
  return b * b;
}

double series_partial(double coupling_k, int n_max) {
  const CouplingPoint p = CouplingPoint::from_coupling(coupling_k);
  if (4.0 * std::abs(p.k) >= 1.0) {
    throw std::domain_error("series diverges for 4|k| >= 1");
  }
  if (n_max < 0 || n_max > 60) {
    throw std::invalid_argument("n_max out of supported range");
  }
  // Expand (1/2pi^2) int ln(1 - 2k(cos e + cos h)) term by term: the odd
  // angular averages vanish and <(cos e + cos h)^{2n}> = C(2n,n)^2 / 4^n,
  // leaving - sum_n C(2n,n)^2 k^{2n} / (4n).
  const double k2 = p.k * p.k;
  double term_scale = 1.0;  // k^(2n)
  double sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    term_scale *= k2;
    sum += series_coefficient(n) * term_scale / (4.0 * n);
  }
  return std::log(2.0) + std::log(std::cosh(2.0 * coupling_k)) - sum;
}

double elliptic_f(double k1) {
  if (k1 < 0.0 || k1 >= 1.0) {
    if (k1 == 1.0) {
      throw CriticalDivergenceError("F(1) diverges logarithmically");
    }
    throw std::domain_error("elliptic modulus must lie in [0, 1)");
  }
  double a = 1.0;
  double b = std::sqrt(1.0 - k1 * k1);
  for (int i = 0; i < 64 && std::abs(a - b) > 4e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

double elliptic_e(double k1) {
  if (k1 < 0.0 || k1 > 1.0) {
    throw std::domain_error("elliptic modulus must lie in [0, 1]");
  }
  if (k1 == 1.0) return 1.0;
  double a = 1.0;
  double b = std::sqrt(1.0 - k1 * k1);
  double c_sum = 0.5 * k1 * k1;
  double weight = 1.0;
  for (int i = 0; i < 64 && std::abs(a - b) > 4e-16 * a; ++i) {
    const double c = 0.5 * (a - b);
    c_sum += weight * c * c;
    weight *= 2.0;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return (kPi / (2.0 * a)) * (1.0 - c_sum);
}

double internal_energy(double coupling_k) {
  if (coupling_k <= 0.0) {
    throw std::domain_error("internal energy defined for K > 0");
  }
  const CouplingPoint p = CouplingPoint::from_coupling(coupling_k);
  const double t2 = std::tanh(2.0 * coupling_k);
  const double coth = 1.0 / t2;
  const double bracket_factor = 2.0 * t2 * t2 - 1.0;
  if (p.k1 >= 1.0) {
    // exactly critical: the 0 * infinity product has limit 0
    return -coth;
  }
  return -coth * (1.0 + bracket_factor * (2.0 / kPi) * elliptic_f(p.k1));
}

double internal_energy_via_integral(double coupling_k, int resolution) {
  if (coupling_k <= 0.0) {
    throw std::domain_error("internal energy defined for K > 0");
  }
  const double s2 = std::sinh(2.0 * coupling_k);
  const double c2 = std::cosh(2.0 * coupling_k);
  const double integral = midpoint_average(resolution, [&](double cos_sum) {
    return 1.0 / (c2 * c2 - s2 * cos_sum);
  });
  return -(c2 / s2) * (1.0 + (s2 * s2 - 1.0) * integral);
}

double specific_heat(double coupling_k) {
  if (coupling_k <= 0.0) {
    throw std::domain_error("specific heat defined for K > 0");
  }
  const CouplingPoint p = CouplingPoint::from_coupling(coupling_k);
  if (p.k1 >= 1.0) {
    throw CriticalDivergenceError(
        "specific heat diverges logarithmically at the critical coupling");
  }
  const double t2 = std::tanh(2.0 * coupling_k);
  const double f = elliptic_f(p.k1);
  const double e = elliptic_e(p.k1);
  const double g = kPi / 2.0 + (2.0 * t2 * t2 - 1.0) * f;
  const double prefactor = coupling_k / t2;  // K coth 2K
  return (2.0 / kPi) * prefactor * prefactor *
         (2.0 * f - 2.0 * e + 2.0 * (t2 * t2 - 1.0) * g);
}

ThermoPoint thermo_point(double coupling_k, int resolution) {
  ThermoPoint pt;
  const CouplingPoint p = CouplingPoint::from_coupling(coupling_k);
  pt.K = p.K;
  pt.u = p.u;
  pt.k1 = p.k1;
  pt.minus_beta_f = free_energy_density(coupling_k, resolution);
  if (coupling_k == 0.0) {
    pt.U_over_J = 0.0;
    pt.C_over_kB = 0.0;
  } else {
    pt.U_over_J = internal_energy(coupling_k);
    pt.C_over_kB = specific_heat(coupling_k);
  }
  return pt;
}

void write_thermo_csv(std::ostream& os, const std::vector<ThermoPoint>& points) {
  os << "K,u,k1,minus_beta_f,U_over_J,C_over_kB\n";
  char buf[160];
  for (const ThermoPoint& p : points) {
    std::snprintf(buf, sizeof(buf), "%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n",
                  p.K, p.u, p.k1, p.minus_beta_f, p.U_over_J, p.C_over_kB);
    os << buf;
  }
}

}  // namespace kacward
