#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "spinstat/amplitude.hpp"
#include "spinstat/spin_core.hpp"

namespace spinstat {

// How the relative sign between direct and exchanged amplitudes is obtained.
enum class Prescription {
  StandardSSC,   // (anti)symmetrized final state
  DynamicalGM,   // amplitudes added, per-projection phase exp(i m theta) on each spin
  WorkingSOmega, // amplitudes added, total-spin phase exp(i s theta) on each spin
};

std::string_view to_string(Prescription p);
// Accepts "standard", "dynamical", "working". Throws std::invalid_argument.
Prescription parse_prescription(std::string_view text);

// Two identical spin-s particles scattering in the x-y plane. alpha is the
// left particle's spin, beta the right one's. The polarization-sensitive
// detectors default to the direct-scattering final spins (top = alpha,
// bottom = beta) and can be overridden.
class ScatterConfig {
public:
  ScatterConfig(SpinState alpha, SpinState beta, AmplitudeModel model);
  ScatterConfig(SpinState alpha, SpinState beta, AmplitudeModel model, SpinState top_detector,
                SpinState bottom_detector);

  HalfInt s() const { return alpha_.s(); }
  const SpinState& alpha() const { return alpha_; }
  const SpinState& beta() const { return beta_; }
  const AmplitudeModel& model() const { return model_; }
  const SpinState& top_detector() const { return top_ ? *top_ : alpha_; }
  const SpinState& bottom_detector() const { return bottom_ ? *bottom_ : beta_; }
  bool has_custom_detectors() const { return top_.has_value(); }

  int statistics_sign() const { return spinstat::statistics_sign(s()); }

private:
  SpinState alpha_;
  SpinState beta_;
  AmplitudeModel model_;
  std::optional<SpinState> top_;
  std::optional<SpinState> bottom_;
};

} // namespace spinstat
