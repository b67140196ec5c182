#include "spinstat/spin_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace spinstat {

namespace {

void require_spin(HalfInt s) {
  if (s.twice() < 0) throw std::invalid_argument("spin must be non-negative, got " + s.str());
}

void require_unit_axis(const Vec3& axis) {
  if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("rotation axis must be unit length within 1e-12");
  }
}

} // namespace

SpinState SpinState::from_amplitudes(HalfInt s, ComplexVector amps) {
  require_spin(s);
  if (amps.size() != s.multiplicity()) {
    throw std::invalid_argument("spin " + s.str() + " needs " + std::to_string(s.multiplicity()) +
                                " amplitudes, got " + std::to_string(amps.size()));
  }
  if (!amps.allFinite() || std::abs(amps.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("spin amplitudes are not normalized");
  }
  return SpinState(s, std::move(amps));
}

SpinState SpinState::normalized(HalfInt s, ComplexVector amps) {
  require_spin(s);
  if (amps.size() != s.multiplicity()) {
    throw std::invalid_argument("spin " + s.str() + " needs " + std::to_string(s.multiplicity()) +
                                " amplitudes, got " + std::to_string(amps.size()));
  }
  const double norm = amps.norm();
  if (!std::isfinite(norm) || norm == 0.0) throw std::invalid_argument("cannot normalize a zero spin vector");
  amps /= norm;
  return SpinState(s, std::move(amps));
}

Complex SpinState::amp(HalfInt m) const {
  if (!valid_projection(s_, m)) throw std::invalid_argument("projection " + m.str() + " invalid for spin " + s_.str());
  return amps_[basis_index(s_, m)];
}

Complex inner(const SpinState& a, const SpinState& b) {
  if (a.s() != b.s()) throw std::invalid_argument("inner product of states with different spin");
  return a.amps().dot(b.amps());
}

double fidelity(const SpinState& a, const SpinState& b) { return std::abs(inner(a, b)); }

SpinOperatorTriple make_spin_operators(HalfInt s) {
  require_spin(s);
  const int dim = s.multiplicity();
  const double ss1 = s.value() * (s.value() + 1.0);

  ComplexMatrix raise = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix sz = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double m = projection_at(s, i).value();
    sz(i, i) = m;
    if (i + 1 < dim) raise(i + 1, i) = std::sqrt(ss1 - m * (m + 1.0));
  }
  const ComplexMatrix lower = raise.adjoint();
  const Complex half_i(0.0, 0.5);

  return SpinOperatorTriple{
      .s = s,
      .sx = 0.5 * (raise + lower),
      .sy = -half_i * (raise - lower),
      .sz = sz,
  };
}

ComplexMatrix unitary_exp(const ComplexMatrix& generator, double angle) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(generator);
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const auto& vectors = eig.eigenvectors();
  ComplexVector phases(generator.rows());
  for (Eigen::Index i = 0; i < phases.size(); ++i) phases[i] = std::polar(1.0, -angle * eig.eigenvalues()[i]);
  return vectors * phases.asDiagonal() * vectors.adjoint();
}

ComplexMatrix rotation_matrix(HalfInt s, const Vec3& axis, double angle) {
  require_unit_axis(axis);
  return unitary_exp(make_spin_operators(s).along(axis), angle);
}

SpinState rotate(const SpinState& state, const Vec3& axis, double angle) {
  ComplexVector out = rotation_matrix(state.s(), axis, angle) * state.amps();
  // Unitary up to rounding; renormalize so the invariant is exact.
  return SpinState::normalized(state.s(), std::move(out));
}

SpinState sz_eigenstate(HalfInt s, HalfInt m) {
  require_spin(s);
  if (!valid_projection(s, m)) throw std::invalid_argument("projection " + m.str() + " invalid for spin " + s.str());
  ComplexVector amps = ComplexVector::Zero(s.multiplicity());
  amps[basis_index(s, m)] = 1.0;
  return SpinState::from_amplitudes(s, std::move(amps));
}

SpinState coherent_state(HalfInt s, const Vec3& axis) {
  require_unit_axis(axis);
  const double polar = std::acos(std::clamp(axis.z(), -1.0, 1.0));
  const double azimuth = std::atan2(axis.y(), axis.x());
  const SpinState top = sz_eigenstate(s, s);
  return rotate(rotate(top, Vec3::UnitY(), polar), Vec3::UnitZ(), azimuth);
}

SpinState random_state(HalfInt s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_state(s, rng);
}

SpinState random_state(HalfInt s, std::mt19937_64& rng) {
  require_spin(s);
  std::normal_distribution<double> gauss;
  for (;;) {
    ComplexVector amps(s.multiplicity());
    for (auto& a : amps) a = Complex(gauss(rng), gauss(rng));
    if (amps.norm() > 1e-8) return SpinState::normalized(s, std::move(amps));
  }
}

Vec3 random_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    Vec3 v(gauss(rng), gauss(rng), gauss(rng));
    const double n = v.norm();
    if (n > 1e-8) return v / n;
  }
}

std::string describe(const SpinState& state) {
  std::string out = "[";
  char buf[64];
  for (int i = 0; i < state.dim(); ++i) {
    const Complex a = state.amps()[i];
    std::snprintf(buf, sizeof buf, "%s%.6g%+.6gi", i ? " " : "", a.real(), a.imag());
    out += buf;
  }
  return out + "]";
}

} // namespace spinstat
