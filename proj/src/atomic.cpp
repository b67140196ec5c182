#include "spinstat/atomic.hpp"

#include <cmath>
#include <stdexcept>

namespace spinstat::atomic {

void validate(const OrbitParams& p) {
  if (!(p.v >= 0.0 && p.v < 1.0)) throw std::invalid_argument("speed must satisfy 0 <= v < 1");
  if (!std::isfinite(p.omega)) throw std::invalid_argument("omega must be finite");
  if (!valid_projection(p.s, p.sz)) throw std::invalid_argument("sz = " + p.sz.str() + " invalid for s = " + p.s.str());
}

double lorentz_gamma(double v) {
  if (!(v >= 0.0 && v < 1.0)) throw std::invalid_argument("speed must satisfy 0 <= v < 1");
  return 1.0 / std::sqrt(1.0 - v * v);
}

namespace {

// gamma - 1 = v^2 / (sqrt(1 - v^2) (1 + sqrt(1 - v^2))), free of cancellation at small v.
double gamma_minus_one(double v) {
  const double root = std::sqrt(1.0 - v * v);
  return v * v / (root * (1.0 + root));
}

} // namespace

double gm_shift(const OrbitParams& p) {
  validate(p);
  return -p.sz.value() * p.omega;
}

double thomas_shift(const OrbitParams& p) {
  validate(p);
  return p.sz.value() * gamma_minus_one(p.v) * p.omega;
}

RatioReport ratio_report(const OrbitParams& p) {
  validate(p);
  if (!(p.v > 0.0)) throw std::invalid_argument("ratio report needs v > 0");
  RatioReport r;
  r.params = p;
  r.gamma = lorentz_gamma(p.v);
  r.gm_shift = gm_shift(p);
  r.thomas_shift = thomas_shift(p);
  r.gm_splitting = 2.0 * p.s.value() * p.omega;
  r.ratio = gamma_minus_one(p.v);
  r.small_v_estimate = 0.5 * p.v * p.v;
  r.note = "the shift would also depend on the azimuthal quantum number l; no l-dependent formula is computed";
  return r;
}

} // namespace spinstat::atomic
