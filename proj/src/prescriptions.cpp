#include "spinstat/prescriptions.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace spinstat {

namespace {

constexpr double kPi = std::numbers::pi;

enum class PhaseRule { PerProjection, TotalSpin };

// sum_j bra_j^* ket_j exp(i q_j theta), q_j = m_j or s.
Complex phased_overlap(const SpinState& bra, const SpinState& ket, double theta, PhaseRule rule) {
  const HalfInt s = ket.s();
  Complex sum = 0.0;
  for (int j = 0; j < ket.dim(); ++j) {
    const HalfInt q = rule == PhaseRule::PerProjection ? projection_at(s, j) : s;
    sum += std::conj(bra.amps()[j]) * ket.amps()[j] * gm_phase(q, theta);
  }
  return sum;
}

double added_amplitudes(const ScatterConfig& cfg, double phi, PhaseRule rule) {
  const double theta = -kPi + phi;
  const Complex f_direct = cfg.model().evaluate(phi);
  const Complex f_exchanged = cfg.model().evaluate(exchange_angle(phi));
  const SpinState& top = cfg.top_detector();
  const SpinState& bot = cfg.bottom_detector();

  const Complex direct = f_direct * phased_overlap(top, cfg.alpha(), phi, rule) *
                         phased_overlap(bot, cfg.beta(), phi, rule);
  const Complex exchanged = f_exchanged * phased_overlap(bot, cfg.alpha(), theta, rule) *
                            phased_overlap(top, cfg.beta(), theta, rule);
  return std::norm(direct + exchanged);
}

void require_angle(double phi) {
  if (!(phi > -kPi && phi <= kPi)) {
    throw std::domain_error("scattering angle " + std::to_string(phi) + " outside (-pi, pi]");
  }
}

} // namespace

Complex gm_phase(HalfInt m, double phi) { return std::polar(1.0, m.value() * phi); }

int relative_exchange_factor(HalfInt s) {
  // exp(-i pi * 2s): the exponent in units of pi is -2s, reduce mod 2.
  const int half_turns = ((-s.twice()) % 2 + 2) % 2;
  return half_turns == 0 ? +1 : -1;
}

Complex overlap_factor(const SpinState& alpha, const SpinState& beta) {
  return inner(beta, alpha) * inner(alpha, beta);
}

double w_standard(const ScatterConfig& cfg, double phi) {
  require_angle(phi);
  const Complex f_direct = cfg.model().evaluate(phi);
  const Complex f_exchanged = cfg.model().evaluate(exchange_angle(phi));
  const SpinState& top = cfg.top_detector();
  const SpinState& bot = cfg.bottom_detector();

  const Complex direct = f_direct * inner(top, cfg.alpha()) * inner(bot, cfg.beta());
  const Complex exchanged = f_exchanged * inner(bot, cfg.alpha()) * inner(top, cfg.beta());
  return std::norm(direct + static_cast<double>(cfg.statistics_sign()) * exchanged);
}

double w_dynamical(const ScatterConfig& cfg, double phi) {
  require_angle(phi);
  return added_amplitudes(cfg, phi, PhaseRule::PerProjection);
}

double w_working(const ScatterConfig& cfg, double phi) {
  require_angle(phi);
  return added_amplitudes(cfg, phi, PhaseRule::TotalSpin);
}

double cross_section(const ScatterConfig& cfg, double phi, Prescription p) {
  switch (p) {
  case Prescription::StandardSSC: return w_standard(cfg, phi);
  case Prescription::DynamicalGM: return w_dynamical(cfg, phi);
  case Prescription::WorkingSOmega: return w_working(cfg, phi);
  }
  throw std::invalid_argument("unknown prescription");
}

CrossSectionCurve cross_section_curve(const ScatterConfig& cfg, Prescription p, const std::vector<double>& phis) {
  CrossSectionCurve curve{p, phis, {}};
  curve.values.reserve(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (i > 0 && !(phis[i] > phis[i - 1])) throw std::invalid_argument("phi grid must be strictly increasing");
    curve.values.push_back(cross_section(cfg, phis[i], p));
  }
  return curve;
}

std::vector<double> uniform_phi_grid(int n) {
  if (n < 1) throw std::invalid_argument("phi grid needs at least one point");
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    // Ratio first so that e.g. pi/2 comes out exactly when n is divisible by 4.
    grid[static_cast<std::size_t>(k - 1)] = kPi * (static_cast<double>(2 * k - n) / n);
  }
  return grid;
}

double c_ll(const AmplitudeModel& model, HalfInt s, Prescription p, double phi) {
  const SpinState plus_x = coherent_state(s, Vec3::UnitX());
  const SpinState minus_x = coherent_state(s, -Vec3::UnitX());
  const double parallel = cross_section(ScatterConfig(plus_x, plus_x, model), phi, p);
  const double antiparallel = cross_section(ScatterConfig(plus_x, minus_x, model), phi, p);

  const double denom = parallel + antiparallel;
  const double scale = std::norm(std::abs(model.evaluate(phi)) + std::abs(model.evaluate(exchange_angle(phi))));
  if (!(denom > 1e-14 * scale) || denom == 0.0) {
    throw UndefinedObservable("C_LL undefined: both cross-sections vanish at phi = " + std::to_string(phi));
  }
  return (parallel - antiparallel) / denom;
}

} // namespace spinstat
