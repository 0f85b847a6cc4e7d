#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace kacward {

/// Thrown for quantities that genuinely diverge at the critical coupling.
class CriticalDivergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The derived couplings used by the closed-form thermodynamics.
/// k1 = 4k = 2 tanh(2K)/cosh(2K) reaches 1 exactly at the critical point.
struct CouplingPoint {
  double K{};
  double u{};   // tanh K
  double k{};   // tanh(2K) / (2 cosh(2K))
  double k1{};  // 4k

  static CouplingPoint from_coupling(double coupling_k);
};

/// Positive root of 2 sinh 2K = cosh^2 2K, i.e. ln(1 + sqrt(2))/2, found by
/// bisection to 1e-14 and asserted against the closed form.
double critical_coupling();

/// -f/(k_B T) = ln 2 + (1/2pi^2) Int_[0,pi]^2 ln[cosh^2 2K - sinh 2K
/// (cos eps + cos eta)], by the midpoint rule on the periodic square with
/// `resolution` nodes per axis. Midpoint offsets keep every node away from
/// the (0,0) singularity at the critical coupling.
double free_energy_density(double coupling_k, int resolution = 512);

struct ExtrapolatedValue {
  double value{};
  std::vector<double> deltas;  // successive-refinement differences
};

/// Richardson extrapolation of free_energy_density over grid refinements
/// resolution, 2*resolution, ..., needed near the critical coupling where
/// the integrand has an integrable logarithmic singularity.
ExtrapolatedValue free_energy_density_extrapolated(double coupling_k,
                                                   int base_resolution = 128,
                                                   int levels = 4);

/// ln Z / N^2 for the finite N x N lattice with the border neglected:
/// ln 2 + 2(1 - 1/N) ln cosh K + (1/8pi^2) Int ln det(I - uM).
double finite_size_log_z(int side, double coupling_k, int resolution = 512);

/// Exact integer series coefficient ((2n)! / (n!)^2)^2 as a double.
double series_coefficient(int n);

/// ln 2 + ln cosh 2K - sum_{n<=n_max} ((2n)!/(n!)^2)^2 k^(2n).
/// Throws outside the convergence domain 4|k| < 1.
double series_partial(double coupling_k, int n_max);

/// Complete elliptic integrals F (first kind) and E (second kind) in the
/// modulus convention F(k1) = Int_0^{pi/2} (1 - k1^2 sin^2 t)^{-1/2} dt,
/// computed by arithmetic-geometric-mean iteration.
double elliptic_f(double k1);
double elliptic_e(double k1);

/// U/J = -coth(2K) [1 + (2 tanh^2 2K - 1)(2/pi) F(k1)]. At the critical
/// coupling the vanishing bracket times the divergent F is evaluated as its
/// limit 0, making U continuous there.
double internal_energy(double coupling_k);

/// Same quantity through the double-integral route, as an independent check.
double internal_energy_via_integral(double coupling_k, int resolution = 512);

/// C/k_B = (2/pi)(K coth 2K)^2 {2F - 2E + 2(tanh^2 2K - 1) G}, with
/// G = pi/2 + (2 tanh^2 2K - 1) F. Logarithmically divergent at the
/// critical coupling, where it throws.
double specific_heat(double coupling_k);

struct ThermoPoint {
  double K{};
  double u{};
  double k1{};
  double minus_beta_f{};
  double U_over_J{};
  double C_over_kB{};
};

ThermoPoint thermo_point(double coupling_k, int resolution = 512);

/// CSV contract: header K,u,k1,minus_beta_f,U_over_J,C_over_kB and one
/// %.12e-formatted row per point.
void write_thermo_csv(std::ostream& os, const std::vector<ThermoPoint>& points);

}  // namespace kacward
