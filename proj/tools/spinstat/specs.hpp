#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spinstat/amplitude.hpp"
#include "spinstat/scatter.hpp"
#include "spinstat/spin_core.hpp"

namespace spinstat::cli {

using Json = nlohmann::ordered_json;

// Bad user input. The message names the offending field.
class ValidationError : public std::runtime_error {
public:
  ValidationError(const std::string& field, const std::string& what) : std::runtime_error(field + ": " + what) {}
};

HalfInt parse_spin(const std::string& text, const std::string& field);

// State specs:
//   eigen:M             s_z eigenstate, M like 1/2 or -1
//   axis:X,Y,Z          coherent state along a unit vector
//   +x -x +y -y +z -z   shorthands for the coordinate axes
//   amps:RE,IM;RE,IM;.. amplitudes in ascending m; rescaled to unit norm with a warning
SpinState parse_state(const std::string& text, HalfInt s, const std::string& field, std::vector<std::string>& warnings);

// Amplitude model as JSON:
//   {"kind": "constant", "value": C}
//   {"kind": "partial_wave", "coeffs": [C, ...]}
//   {"kind": "rutherford", "strength": X, "epsilon": X}
// where C is a number, [re, im] or {"re": _, "im": _}.
struct ModelSpec {
  AmplitudeModel model;
  Json canonical; // complex values rewritten as {"re", "im"}
};
ModelSpec parse_model(const std::string& text, const std::string& field);

// Comma-separated angles. Each is a number or a multiple of pi such as pi/2,
// -pi, 3*pi/4. With degrees set, plain numbers are degrees and pi forms are
// rejected.
std::vector<double> parse_angles(const std::string& text, bool degrees, const std::string& field);

// Comma-separated prescription names; at least one.
std::vector<Prescription> parse_prescriptions(const std::string& text, const std::string& field);

double parse_number(std::string_view text, const std::string& field);

} // namespace spinstat::cli
