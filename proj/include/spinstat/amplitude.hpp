#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

namespace spinstat {

// Spin-independent in-plane scattering amplitude f(phi), phi the signed
// scattering angle in (-pi, pi].
//
// Partial-wave convention: the (2l+1) weight is NOT folded into the
// coefficients,
//
//     f(phi) = sum_l (2l + 1) a_l P_l(cos phi),
//
// so coefficients [1, 1] give f(0) = 1 + 3 = 4.
//
// Rutherford-like: f(phi) = strength / (sin^2(phi/2) + epsilon), epsilon > 0
// regularizes the forward divergence, no Coulomb phase.
class AmplitudeModel {
public:
  struct Constant {
    std::complex<double> value;
  };
  struct PartialWave {
    std::vector<std::complex<double>> coeffs;
  };
  struct RutherfordLike {
    double strength;
    double epsilon;
  };
  // Arbitrary callable, for tests that need an amplitude with no particular
  // parity. Not expressible in run configs.
  struct Custom {
    std::function<std::complex<double>(double)> fn;
    bool symmetric;
  };
  using Kind = std::variant<Constant, PartialWave, RutherfordLike, Custom>;

  static AmplitudeModel constant(std::complex<double> value);
  static AmplitudeModel partial_wave(std::vector<std::complex<double>> coeffs);
  static AmplitudeModel rutherford(double strength, double epsilon);
  static AmplitudeModel custom(std::function<std::complex<double>(double)> fn, bool symmetric);

  const Kind& kind() const { return kind_; }

  // True when f depends only on |phi|. All three built-in kinds are even.
  bool symmetric() const;

  // Throws std::domain_error for phi outside (-pi, pi].
  std::complex<double> evaluate(double phi) const;

  std::string name() const;

private:
  explicit AmplitudeModel(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

inline std::complex<double> evaluate(const AmplitudeModel& model, double phi) { return model.evaluate(phi); }

// Reduces any finite angle into (-pi, pi].
double wrap_angle(double phi);

// Argument of the exchanged-process amplitude, -pi + phi wrapped into
// (-pi, pi]. phi = 0 maps to +pi.
double exchange_angle(double phi);

// Legendre polynomial P_l(x) by the three-term recurrence.
double legendre(int l, double x);

} // namespace spinstat
