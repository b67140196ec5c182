#pragma once

#include <string>

#include "spinstat/half_int.hpp"

namespace spinstat::atomic {

// Orbiting electron (or any spin-s particle): speed v as a fraction of c,
// orbital angular velocity omega, spin s and projection sz.
struct OrbitParams {
  double v = 0.0;
  double omega = 0.0;
  HalfInt s = HalfInt::from_twice(1);
  HalfInt sz = HalfInt::from_twice(1);
};

// Throws std::invalid_argument unless 0 <= v < 1 and sz is a valid projection of s.
void validate(const OrbitParams& p);

double lorentz_gamma(double v);

// Spin-gravito-magnetic shift -sz * omega. Independent of v.
double gm_shift(const OrbitParams& p);

// Thomas term -sz (1 - gamma) omega.
double thomas_shift(const OrbitParams& p);

struct RatioReport {
  OrbitParams params;
  double gamma = 1.0;
  double gm_shift = 0.0;
  double thomas_shift = 0.0;
  double gm_splitting = 0.0; // 2 s omega between sz = +s and sz = -s
  double ratio = 0.0;        // |thomas / gm| = |1 - gamma|
  double small_v_estimate = 0.0; // v^2 / 2
  std::string note;
};

// Requires v > 0.
RatioReport ratio_report(const OrbitParams& p);

} // namespace spinstat::atomic
