#pragma once

#include <stdexcept>
#include <vector>

#include "spinstat/scatter.hpp"

namespace spinstat {

// Closed-form differential cross-sections (arbitrary units, |f|^2 scale) for
// the three prescriptions.
//
// Notation: theta = -pi + phi is the rotation angle of the exchanged process.
// The amplitude f is evaluated at exchange_angle(phi), i.e. theta wrapped into
// (-pi, pi]; spin phases use theta unwrapped. Both exchanged-branch phase
// factors carry the same 2*pi shift, so the product is unaffected either way.

// Phase exp(i m phi) picked up by a spin with s_z = m while rotating through phi.
Complex gm_phase(HalfInt m, double phi);

// Relative factor exp(-i 2 pi s) between exchanged and direct amplitudes, in
// integer arithmetic: +1 for integer s, -1 for half-odd-integer s.
int relative_exchange_factor(HalfInt s);

// (sum_i beta_i^* alpha_i)(sum_j alpha_j^* beta_j) = |<beta|alpha>|^2.
Complex overlap_factor(const SpinState& alpha, const SpinState& beta);

// |f(phi) + sign * f(-pi+phi) * <bot|alpha><top|beta>|^2 with the detectors
// defaulting to (alpha, beta), which gives the overlap_factor above.
double w_standard(const ScatterConfig& cfg, double phi);

// |f(phi) <top|U(phi)|alpha><bot|U(phi)|beta>
//   + f(-pi+phi) <bot|U(theta)|alpha><top|U(theta)|beta>|^2,
// U(x) = exp(i s_z x). The two exchanged-branch overlap sums are independent
// single sums whose product is taken.
double w_dynamical(const ScatterConfig& cfg, double phi);

// As w_dynamical but with every exp(i m x) replaced by exp(i s x).
double w_working(const ScatterConfig& cfg, double phi);

double cross_section(const ScatterConfig& cfg, double phi, Prescription p);

struct CrossSectionCurve {
  Prescription prescription;
  std::vector<double> phis;
  std::vector<double> values;
};

// phis must be strictly increasing and inside (-pi, pi].
CrossSectionCurve cross_section_curve(const ScatterConfig& cfg, Prescription p, const std::vector<double>& phis);

// n points -pi + 2 pi k / n, k = 1..n: uniform on (-pi, pi], ends at pi.
std::vector<double> uniform_phi_grid(int n);

// Raised when a ratio observable has a vanishing denominator.
class UndefinedObservable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Longitudinal spin correlation (w(++) - w(+-)) / (w(++) + w(+-)), where ++
// means both spins along +x and +- means +x and -x. Throws
// UndefinedObservable when both cross-sections vanish.
double c_ll(const AmplitudeModel& model, HalfInt s, Prescription p, double phi);

} // namespace spinstat
