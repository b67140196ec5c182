#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "spinstat/half_int.hpp"

namespace spinstat {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;

inline constexpr double kNormTolerance = 1e-12;

// Spin operators Sx, Sy, Sz (hbar = 1) of dimension 2s+1 in the ascending-m
// basis m = -s, ..., +s.
struct SpinOperatorTriple {
  HalfInt s;
  ComplexMatrix sx;
  ComplexMatrix sy;
  ComplexMatrix sz;

  // n.S for a 3-vector n (not required to be unit length here).
  ComplexMatrix along(const Vec3& n) const { return n.x() * sx + n.y() * sy + n.z() * sz; }
};

// Pure spin state over the s_z eigenkets, amplitudes indexed by ascending m.
// Always normalized to within kNormTolerance.
class SpinState {
public:
  // Rejects amplitude vectors of the wrong length or whose norm differs from
  // one by more than kNormTolerance.
  static SpinState from_amplitudes(HalfInt s, ComplexVector amps);

  // Rescales to unit norm. Rejects wrong length and the zero vector.
  static SpinState normalized(HalfInt s, ComplexVector amps);

  HalfInt s() const { return s_; }
  int dim() const { return static_cast<int>(amps_.size()); }
  const ComplexVector& amps() const { return amps_; }
  Complex amp(HalfInt m) const;

private:
  SpinState(HalfInt s, ComplexVector amps) : s_(s), amps_(std::move(amps)) {}

  HalfInt s_;
  ComplexVector amps_;
};

// <a|b>; both states must carry the same spin.
Complex inner(const SpinState& a, const SpinState& b);

// |<a|b>|, the phase-insensitive comparison used throughout.
double fidelity(const SpinState& a, const SpinState& b);

SpinOperatorTriple make_spin_operators(HalfInt s);

// exp(-i * angle * generator) for a Hermitian generator, via its spectral
// decomposition.
ComplexMatrix unitary_exp(const ComplexMatrix& generator, double angle);

// exp(-i * angle * axis.S). The axis must be unit length within 1e-12.
ComplexMatrix rotation_matrix(HalfInt s, const Vec3& axis, double angle);

SpinState rotate(const SpinState& state, const Vec3& axis, double angle);

SpinState sz_eigenstate(HalfInt s, HalfInt m);

// Eigenstate of axis.S with eigenvalue +s (spin "pointing along" axis), built
// as exp(-i az Sz) exp(-i polar Sy)|s, +s>.
SpinState coherent_state(HalfInt s, const Vec3& axis);

// Haar-uniform pure state. The seeded overload is deterministic; the engine
// overload advances the caller's generator.
SpinState random_state(HalfInt s, std::uint64_t seed);
SpinState random_state(HalfInt s, std::mt19937_64& rng);

// Uniformly distributed unit vector.
Vec3 random_axis(std::mt19937_64& rng);

// Short human-readable label such as "[0.7071+0i, 0.7071+0i]".
std::string describe(const SpinState& state);

} // namespace spinstat
