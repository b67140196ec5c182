#pragma once

#include <functional>

#include <Eigen/Dense>

#include "spinstat/spin_core.hpp"

namespace spinstat::cosmology {

// Geometric units, c = 1. Coordinates are ordered (t, x, y, z).
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

struct MetricAtPoint {
  Mat4 g;
  Vec4 coords;
};

// Spatially flat Robertson-Walker metric seen from a frame rotating at omega
// about z, with the scale factor frozen at a_now:
//   g_tt = -1 + (x^2 + y^2) omega^2 a^2,  g_tx = -y omega a^2,
//   g_ty = x omega a^2,                   g_ij = a^2 delta_ij.
MetricAtPoint rotating_rw_metric(double omega, double a_now, const Vec4& coords);

// Same metric by a second route: pulls diag(-1, a^2, a^2, a^2) back through
// x' = x cos(wt) - y sin(wt), y' = x sin(wt) + y cos(wt) using a
// Richardson-extrapolated central-difference Jacobian with step h.
MetricAtPoint pulled_back_rw_metric(double omega, double a_now, const Vec4& coords, double h = 1e-3);

// One negative and three positive eigenvalues.
bool has_lorentzian_signature(const MetricAtPoint& metric);

using MetricFn = std::function<MetricAtPoint(const Vec4&)>;
using FieldFn = std::function<Vec3(const Vec3&)>;

// Gravito-magnetic vector potential A_i = -g_{0i} / (2 a^2) read at t = 0.
// With the rotating metric this gives A = (y omega / 2, -x omega / 2, 0).
// Only a_now = 1 is accepted: for curved (k != 0) universes the scale factor
// cannot be normalized to one and no potential is defined here.
Vec3 extract_potential(const MetricFn& metric, const Vec3& point, double a_now);
Vec3 extract_potential(double omega, const Vec3& point, double a_now = 1.0);

// Central-difference curl with step h > 0.
Vec3 numerical_curl(const FieldFn& field, const Vec3& point, double h);

// H_int = -mu_g . B with mu_g = -s and B = (0, 0, -omega): -s_z omega.
double interaction_energy(double spin_z, double omega);

// exp(-i \int_0^{t_s} H_int dt) for a spin with s_z = m and angular velocity
// omega(t), by composite Simpson quadrature with `steps` (even) intervals.
Complex accumulated_phase(HalfInt m, const std::function<double(double)>& omega_of_t, double t_s, int steps = 1000);

} // namespace spinstat::cosmology
