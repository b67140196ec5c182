#include "spinstat/hilbert_oracle.hpp"

#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace spinstat::oracle {

namespace {

ComplexMatrix mode_transition(Mode to, Mode from) {
  ComplexMatrix t = ComplexMatrix::Zero(kModeCount, kModeCount);
  t(static_cast<int>(to), static_cast<int>(from)) = 1.0;
  return t;
}

void require_cap(HalfInt s) {
  if (s.twice() < 0 || s > kMaxOracleSpin) {
    throw std::invalid_argument("oracle supports 0 <= s <= 3/2, got s = " + s.str());
  }
}

} // namespace

ComplexMatrix spin_phase_operator(HalfInt s, double theta, SpinPhase phase) {
  const int d = s.multiplicity();
  switch (phase) {
  case SpinPhase::None: return ComplexMatrix::Identity(d, d);
  case SpinPhase::PerProjection:
    // exp(i theta Sz) = exp(-i theta (-Sz))
    return unitary_exp(-make_spin_operators(s).sz, theta);
  case SpinPhase::TotalSpin: return std::polar(1.0, s.value() * theta) * ComplexMatrix::Identity(d, d);
  }
  throw std::invalid_argument("unknown spin phase");
}

int single_dim(HalfInt s) { return kModeCount * s.multiplicity(); }
int pair_dim(HalfInt s) { return single_dim(s) * single_dim(s); }

ComplexVector product_state(Mode m1, const SpinState& spin1, Mode m2, const SpinState& spin2) {
  ComplexVector e1 = ComplexVector::Zero(kModeCount), e2 = ComplexVector::Zero(kModeCount);
  e1[static_cast<int>(m1)] = 1.0;
  e2[static_cast<int>(m2)] = 1.0;
  const ComplexVector first = Eigen::kroneckerProduct(e1, spin1.amps());
  const ComplexVector second = Eigen::kroneckerProduct(e2, spin2.amps());
  return Eigen::kroneckerProduct(first, second);
}

ComplexMatrix build_exchange(HalfInt s) {
  require_cap(s);
  const int d = single_dim(s);
  ComplexMatrix p = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) p(j * d + i, i * d + j) = 1.0;
  }
  return p;
}

ComplexMatrix build_lambda(HalfInt s) {
  const ComplexMatrix p = build_exchange(s);
  const double sign = s.is_integer() ? 1.0 : -1.0;
  return 0.5 * (ComplexMatrix::Identity(p.rows(), p.cols()) + sign * p);
}

ComplexMatrix build_s_operator(const AmplitudeModel& model, double phi, SpinPhase phase, HalfInt s) {
  require_cap(s);
  const double theta = -std::numbers::pi + phi;
  const Complex f_direct = model.evaluate(phi);
  const Complex f_exchanged = model.evaluate(exchange_angle(phi));
  const ComplexMatrix u_direct = spin_phase_operator(s, phi, phase);
  const ComplexMatrix u_exchanged = spin_phase_operator(s, theta, phase);

  using enum Mode;
  auto leg = [](Mode to, Mode from, const ComplexMatrix& u) -> ComplexMatrix {
    return Eigen::kroneckerProduct(mode_transition(to, from), u);
  };
  auto pair = [](const ComplexMatrix& a, const ComplexMatrix& b) -> ComplexMatrix {
    return Eigen::kroneckerProduct(a, b);
  };

  ComplexMatrix s_op = f_direct * pair(leg(OutTop, InLeft, u_direct), leg(OutBottom, InRight, u_direct));
  s_op += f_exchanged * pair(leg(OutBottom, InLeft, u_exchanged), leg(OutTop, InRight, u_exchanged));
  // Mirror image: particle 1 arriving from the right.
  s_op += f_direct * pair(leg(OutBottom, InRight, u_direct), leg(OutTop, InLeft, u_direct));
  s_op += f_exchanged * pair(leg(OutTop, InRight, u_exchanged), leg(OutBottom, InLeft, u_exchanged));
  return s_op;
}

double oracle_w(const ScatterConfig& cfg, double phi, Prescription prescription) {
  const HalfInt s = cfg.s();
  require_cap(s);
  using enum Mode;

  const ComplexVector initial = product_state(InLeft, cfg.alpha(), InRight, cfg.beta());
  const ComplexVector final_direct = product_state(OutTop, cfg.top_detector(), OutBottom, cfg.bottom_detector());

  switch (prescription) {
  case Prescription::StandardSSC: {
    const ComplexMatrix lambda = build_lambda(s);
    const ComplexMatrix s_op = build_s_operator(cfg.model(), phi, SpinPhase::None, s);
    const Complex amp = 2.0 * final_direct.dot(lambda * (s_op * initial));
    return std::norm(amp);
  }
  case Prescription::DynamicalGM:
  case Prescription::WorkingSOmega: {
    const SpinPhase phase =
        prescription == Prescription::DynamicalGM ? SpinPhase::PerProjection : SpinPhase::TotalSpin;
    const ComplexMatrix s_op = build_s_operator(cfg.model(), phi, phase, s);
    const ComplexVector final_exchanged = build_exchange(s) * final_direct;
    const ComplexVector scattered = s_op * initial;
    return std::norm(final_direct.dot(scattered) + final_exchanged.dot(scattered));
  }
  }
  throw std::invalid_argument("unknown prescription");
}

} // namespace spinstat::oracle
