#include "spinstat/cosmology.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinstat::cosmology {

namespace {

void require_scale(double a_now) {
  if (!(a_now > 0.0) || !std::isfinite(a_now)) throw std::invalid_argument("scale factor must be positive");
}

// Comoving coordinates (t, x', y', z) of a rotating-frame point.
Vec4 to_comoving(double omega, const Vec4& c) {
  const double wt = omega * c[0];
  return Vec4(c[0], c[1] * std::cos(wt) - c[2] * std::sin(wt), c[1] * std::sin(wt) + c[2] * std::cos(wt), c[3]);
}

} // namespace

MetricAtPoint rotating_rw_metric(double omega, double a_now, const Vec4& coords) {
  require_scale(a_now);
  const double a2 = a_now * a_now;
  const double x = coords[1], y = coords[2];

  Mat4 g = a2 * Mat4::Identity();
  g(0, 0) = -1.0 + (x * x + y * y) * omega * omega * a2;
  g(0, 1) = g(1, 0) = -y * omega * a2;
  g(0, 2) = g(2, 0) = x * omega * a2;
  return {g, coords};
}

MetricAtPoint pulled_back_rw_metric(double omega, double a_now, const Vec4& coords, double h) {
  require_scale(a_now);
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");

  auto central = [&](double step) {
    Mat4 jacobian; // d(comoving)^mu / d(rotating)^nu
    for (int nu = 0; nu < 4; ++nu) {
      Vec4 plus = coords, minus = coords;
      plus[nu] += step;
      minus[nu] -= step;
      jacobian.col(nu) = (to_comoving(omega, plus) - to_comoving(omega, minus)) / (2.0 * step);
    }
    return jacobian;
  };
  // One Richardson step cancels the h^2 error term.
  const Mat4 jacobian = (4.0 * central(h / 2.0) - central(h)) / 3.0;
  const double a2 = a_now * a_now;
  const Mat4 flat = Eigen::Vector4d(-1.0, a2, a2, a2).asDiagonal();
  return {jacobian.transpose() * flat * jacobian, coords};
}

bool has_lorentzian_signature(const MetricAtPoint& metric) {
  Eigen::SelfAdjointEigenSolver<Mat4> eig(metric.g);
  int negative = 0, positive = 0;
  for (int i = 0; i < 4; ++i) {
    const double ev = eig.eigenvalues()[i];
    if (ev < 0.0) ++negative;
    else if (ev > 0.0) ++positive;
  }
  return negative == 1 && positive == 3;
}

Vec3 extract_potential(const MetricFn& metric, const Vec3& point, double a_now) {
  require_scale(a_now);
  if (a_now != 1.0) {
    throw std::invalid_argument("extract_potential needs a(t_now) = 1 (got " + std::to_string(a_now) +
                                "); only the critical-density universe allows that normalization");
  }
  const MetricAtPoint m = metric(Vec4(0.0, point.x(), point.y(), point.z()));
  const double a2 = m.g(3, 3);
  return Vec3(-m.g(0, 1) / (2.0 * a2), -m.g(0, 2) / (2.0 * a2), -m.g(0, 3) / (2.0 * a2));
}

Vec3 extract_potential(double omega, const Vec3& point, double a_now) {
  return extract_potential([omega, a_now](const Vec4& c) { return rotating_rw_metric(omega, a_now, c); }, point,
                           a_now);
}

Vec3 numerical_curl(const FieldFn& field, const Vec3& point, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  // d[i](j) = dA_j / dx_i
  Eigen::Matrix3d d;
  for (int i = 0; i < 3; ++i) {
    Vec3 plus = point, minus = point;
    plus[i] += h;
    minus[i] -= h;
    d.row(i) = ((field(plus) - field(minus)) / (2.0 * h)).transpose();
  }
  return Vec3(d(1, 2) - d(2, 1), d(2, 0) - d(0, 2), d(0, 1) - d(1, 0));
}

double interaction_energy(double spin_z, double omega) { return -spin_z * omega; }

Complex accumulated_phase(HalfInt m, const std::function<double(double)>& omega_of_t, double t_s, int steps) {
  if (steps < 2 || steps % 2 != 0) throw std::invalid_argument("Simpson quadrature needs an even step count");
  const double dt = t_s / steps;
  double integral = 0.0; // \int H_int dt
  for (int k = 0; k <= steps; ++k) {
    const double weight = (k == 0 || k == steps) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    integral += weight * interaction_energy(m.value(), omega_of_t(k * dt));
  }
  integral *= dt / 3.0;
  return std::polar(1.0, -integral);
}

} // namespace spinstat::cosmology
