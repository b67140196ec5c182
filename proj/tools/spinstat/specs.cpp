#include "specs.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace spinstat::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string fmt(double x) { return std::to_string(x); }

Complex parse_complex(const Json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_object() && j.contains("re") && j["re"].is_number()) {
    const double im = j.contains("im") ? j["im"].get<double>() : 0.0;
    return {j["re"].get<double>(), im};
  }
  throw ValidationError(field, "expected a number, [re, im] or {\"re\", \"im\"}, got " + j.dump());
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

double number_field(const Json& j, const char* key, const std::string& field) {
  if (!j.contains(key) || !j[key].is_number()) throw ValidationError(field, std::string("missing number '") + key + "'");
  return j[key].get<double>();
}

void reject_unknown_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& field) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) throw ValidationError(field, "unknown key '" + key + "'");
  }
}

double parse_angle(std::string_view text, bool degrees, const std::string& field) {
  const std::size_t pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) {
    const double value = parse_number(text, field);
    return degrees ? value * std::numbers::pi / 180.0 : value;
  }
  if (degrees) throw ValidationError(field, "multiples of pi cannot be combined with --degrees");

  std::string_view head = trim(text.substr(0, pi_pos));
  std::string_view tail = trim(text.substr(pi_pos + 2));
  double factor = 1.0;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    factor = head.front() == '-' ? -1.0 : 1.0;
    head = trim(head.substr(1));
  }
  if (!head.empty()) {
    if (head.back() != '*') throw ValidationError(field, "cannot parse angle '" + std::string(text) + "'");
    factor *= parse_number(trim(head.substr(0, head.size() - 1)), field);
  }
  if (!tail.empty()) {
    if (tail.front() != '/') throw ValidationError(field, "cannot parse angle '" + std::string(text) + "'");
    const double den = parse_number(trim(tail.substr(1)), field);
    if (den == 0.0) throw ValidationError(field, "division by zero in '" + std::string(text) + "'");
    factor /= den;
  }
  return factor * std::numbers::pi;
}

Vec3 parse_axis(std::string_view text, const std::string& field) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ValidationError(field, "axis needs three components");
  Vec3 n(parse_number(parts[0], field), parse_number(parts[1], field), parse_number(parts[2], field));
  if (std::abs(n.norm() - 1.0) > kNormTolerance) {
    throw ValidationError(field, "axis must be a unit vector, |n| = " + fmt(n.norm()));
  }
  return n;
}

} // namespace

double parse_number(std::string_view text, const std::string& field) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value)) {
    throw ValidationError(field, "not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

HalfInt parse_spin(const std::string& text, const std::string& field) {
  HalfInt s;
  try {
    s = HalfInt::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(field, e.what());
  }
  if (s.twice() < 0) throw ValidationError(field, "spin must be non-negative");
  return s;
}

SpinState parse_state(const std::string& text, HalfInt s, const std::string& field,
                      std::vector<std::string>& warnings) {
  const std::string_view t = trim(text);
  if (t.size() == 2 && (t[0] == '+' || t[0] == '-') && (t[1] == 'x' || t[1] == 'y' || t[1] == 'z')) {
    Vec3 n = Vec3::Zero();
    n[t[1] - 'x'] = t[0] == '+' ? 1.0 : -1.0;
    return coherent_state(s, n);
  }
  const std::size_t colon = t.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError(field, "expected eigen:M, axis:X,Y,Z, amps:RE,IM;... or +x/-x/+y/-y/+z/-z");
  }
  const std::string_view kind = t.substr(0, colon), body = trim(t.substr(colon + 1));

  if (kind == "eigen") {
    HalfInt m;
    try {
      m = HalfInt::parse(body);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(field, e.what());
    }
    if (!valid_projection(s, m)) throw ValidationError(field, "m = " + m.str() + " is not a projection of s = " + s.str());
    return sz_eigenstate(s, m);
  }
  if (kind == "axis") return coherent_state(s, parse_axis(body, field));
  if (kind == "amps") {
    const auto entries = split(body, ';');
    if (static_cast<int>(entries.size()) != s.multiplicity()) {
      throw ValidationError(field, "expected " + std::to_string(s.multiplicity()) + " amplitudes, got " +
                                       std::to_string(entries.size()));
    }
    ComplexVector amps(s.multiplicity());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto pair = split(entries[i], ',');
      if (pair.size() > 2) throw ValidationError(field, "amplitude '" + std::string(entries[i]) + "' is not RE,IM");
      amps[static_cast<int>(i)] = {parse_number(pair[0], field), pair.size() == 2 ? parse_number(pair[1], field) : 0.0};
    }
    const double norm = amps.norm();
    if (norm == 0.0) throw ValidationError(field, "amplitudes are all zero");
    if (std::abs(norm - 1.0) > kNormTolerance) {
      warnings.push_back(field + ": amplitudes rescaled to unit norm (was " + fmt(norm) + ")");
      return SpinState::normalized(s, amps);
    }
    return SpinState::from_amplitudes(s, amps);
  }
  throw ValidationError(field, "unknown state kind '" + std::string(kind) + "'");
}

ModelSpec parse_model(const std::string& text, const std::string& field) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(field, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ValidationError(field, "expected an object with a string 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "constant") {
      reject_unknown_keys(j, {"kind", "value"}, field);
      if (!j.contains("value")) throw ValidationError(field, "missing 'value'");
      const Complex v = parse_complex(j["value"], field);
      return {AmplitudeModel::constant(v), Json{{"kind", kind}, {"value", complex_json(v)}}};
    }
    if (kind == "partial_wave") {
      reject_unknown_keys(j, {"kind", "coeffs"}, field);
      if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ValidationError(field, "missing array 'coeffs'");
      std::vector<Complex> coeffs;
      Json canonical = Json::array();
      for (const Json& c : j["coeffs"]) {
        coeffs.push_back(parse_complex(c, field));
        canonical.push_back(complex_json(coeffs.back()));
      }
      return {AmplitudeModel::partial_wave(coeffs), Json{{"kind", kind}, {"coeffs", canonical}}};
    }
    if (kind == "rutherford") {
      reject_unknown_keys(j, {"kind", "strength", "epsilon"}, field);
      const double strength = number_field(j, "strength", field), epsilon = number_field(j, "epsilon", field);
      return {AmplitudeModel::rutherford(strength, epsilon),
              Json{{"kind", kind}, {"strength", strength}, {"epsilon", epsilon}}};
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError(field, e.what());
  }
  throw ValidationError(field, "unknown model kind '" + kind + "'");
}

std::vector<double> parse_angles(const std::string& text, bool degrees, const std::string& field) {
  std::vector<double> angles;
  for (std::string_view part : split(text, ',')) angles.push_back(parse_angle(part, degrees, field));
  return angles;
}

std::vector<Prescription> parse_prescriptions(const std::string& text, const std::string& field) {
  std::vector<Prescription> out;
  if (!trim(text).empty()) {
    for (std::string_view part : split(text, ',')) {
      try {
        out.push_back(parse_prescription(part));
      } catch (const std::invalid_argument& e) {
        throw ValidationError(field, e.what());
      }
    }
  }
  if (out.empty()) throw ValidationError(field, "at least one prescription is required");
  return out;
}

} // namespace spinstat::cli
