#include "spinstat/amplitude.hpp"

#include <cmath>
#include <stdexcept>

namespace spinstat {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

} // namespace

AmplitudeModel AmplitudeModel::constant(std::complex<double> value) { return AmplitudeModel(Constant{value}); }

AmplitudeModel AmplitudeModel::partial_wave(std::vector<std::complex<double>> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("partial-wave model needs at least one coefficient");
  return AmplitudeModel(PartialWave{std::move(coeffs)});
}

AmplitudeModel AmplitudeModel::rutherford(double strength, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("rutherford regulator epsilon must be positive");
  }
  if (!std::isfinite(strength)) throw std::invalid_argument("rutherford strength must be finite");
  return AmplitudeModel(RutherfordLike{strength, epsilon});
}

AmplitudeModel AmplitudeModel::custom(std::function<std::complex<double>(double)> fn, bool symmetric) {
  if (!fn) throw std::invalid_argument("custom amplitude needs a callable");
  return AmplitudeModel(Custom{std::move(fn), symmetric});
}

bool AmplitudeModel::symmetric() const {
  if (const auto* c = std::get_if<Custom>(&kind_)) return c->symmetric;
  return true;
}

std::complex<double> AmplitudeModel::evaluate(double phi) const {
  if (!(phi > -kPi && phi <= kPi)) {
    throw std::domain_error("scattering angle " + std::to_string(phi) + " outside (-pi, pi]");
  }
  return std::visit(
      overloaded{
          [](const Constant& c) { return c.value; },
          [phi](const PartialWave& pw) {
            const double x = std::cos(phi);
            std::complex<double> sum = 0.0;
            for (std::size_t l = 0; l < pw.coeffs.size(); ++l) {
              sum += static_cast<double>(2 * l + 1) * pw.coeffs[l] * legendre(static_cast<int>(l), x);
            }
            return sum;
          },
          [phi](const RutherfordLike& r) {
            const double s = std::sin(0.5 * phi);
            return std::complex<double>(r.strength / (s * s + r.epsilon), 0.0);
          },
          [phi](const Custom& c) { return c.fn(phi); },
      },
      kind_);
}

std::string AmplitudeModel::name() const {
  return std::visit(overloaded{
                        [](const Constant&) { return std::string("constant"); },
                        [](const PartialWave&) { return std::string("partial_wave"); },
                        [](const RutherfordLike&) { return std::string("rutherford"); },
                        [](const Custom&) { return std::string("custom"); },
                    },
                    kind_);
}

double wrap_angle(double phi) {
  if (!std::isfinite(phi)) throw std::domain_error("angle must be finite");
  double r = std::fmod(phi, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  if (r > kPi) r -= 2.0 * kPi;
  return r;
}

double exchange_angle(double phi) {
  double r = -kPi + phi;
  if (r <= -kPi) r += 2.0 * kPi;
  return wrap_angle(r);
}

double legendre(int l, double x) {
  if (l < 0) throw std::invalid_argument("legendre order must be non-negative");
  if (l == 0) return 1.0;
  double p_prev = 1.0, p = x;
  for (int n = 1; n < l; ++n) {
    const double next = ((2.0 * n + 1.0) * x * p - n * p_prev) / (n + 1.0);
    p_prev = p;
    p = next;
  }
  return p;
}

} // namespace spinstat
