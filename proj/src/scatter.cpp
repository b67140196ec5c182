#include "spinstat/scatter.hpp"

#include <stdexcept>

namespace spinstat {

std::string_view to_string(Prescription p) {
  switch (p) {
  case Prescription::StandardSSC: return "standard";
  case Prescription::DynamicalGM: return "dynamical";
  case Prescription::WorkingSOmega: return "working";
  }
  return "unknown";
}

Prescription parse_prescription(std::string_view text) {
  if (text == "standard") return Prescription::StandardSSC;
  if (text == "dynamical") return Prescription::DynamicalGM;
  if (text == "working") return Prescription::WorkingSOmega;
  throw std::invalid_argument("unknown prescription '" + std::string(text) +
                              "' (expected standard, dynamical or working)");
}

ScatterConfig::ScatterConfig(SpinState alpha, SpinState beta, AmplitudeModel model)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), model_(std::move(model)) {
  if (alpha_.s() != beta_.s()) {
    throw std::invalid_argument("identical particles need equal spins, got " + alpha_.s().str() + " and " +
                                beta_.s().str());
  }
}

ScatterConfig::ScatterConfig(SpinState alpha, SpinState beta, AmplitudeModel model, SpinState top_detector,
                             SpinState bottom_detector)
    : ScatterConfig(std::move(alpha), std::move(beta), std::move(model)) {
  if (top_detector.s() != s() || bottom_detector.s() != s()) {
    throw std::invalid_argument("detector spin states must match the particle spin");
  }
  top_ = std::move(top_detector);
  bottom_ = std::move(bottom_detector);
}

} // namespace spinstat
