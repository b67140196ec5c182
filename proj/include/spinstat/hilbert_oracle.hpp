#pragma once

#include "spinstat/scatter.hpp"

namespace spinstat::oracle {

// Brute-force evaluation of the scattering probabilities in an explicit
// two-particle Hilbert space (mode (x) spin) (x) (mode (x) spin). Nothing here
// calls into the closed-form prescriptions; it builds dense operators and
// contracts them.
//
// Each particle has four orthonormal spatial modes standing in for the
// incoming (left, right) and outgoing (top, bottom) wave packets. The index of
// |mode, m> within one particle is mode * (2s+1) + basis_index(s, m); the
// two-particle index is first * D + second with D = 4 (2s+1).

enum class Mode : int { InLeft = 0, InRight = 1, OutTop = 2, OutBottom = 3 };
inline constexpr int kModeCount = 4;

// Spin cap for oracle runs; the two-particle dimension is 256 at s = 3/2.
inline constexpr HalfInt kMaxOracleSpin = HalfInt::from_twice(3);

// Spin phase applied to each particle by the scattering operator.
enum class SpinPhase {
  None,          // S = S_space (x) 1
  PerProjection, // exp(i s_z theta)
  TotalSpin,     // exp(i s theta) times identity
};

// Single-particle spin operator for the given rule at rotation angle theta.
ComplexMatrix spin_phase_operator(HalfInt s, double theta, SpinPhase phase);

int single_dim(HalfInt s);
int pair_dim(HalfInt s);

// |m1> (x) spin1 (x) |m2> (x) spin2.
ComplexVector product_state(Mode m1, const SpinState& spin1, Mode m2, const SpinState& spin2);

// Swaps the two particle slots, mode and spin together.
ComplexMatrix build_exchange(HalfInt s);

// (1 + (-1)^{2s} P) / 2.
ComplexMatrix build_lambda(HalfInt s);

// Scattering operator on the incoming subspace:
//   |in_L a, in_R b> -> f(phi) |out_T U(phi)a, out_B U(phi)b>
//                     + f(-pi+phi) |out_B U(theta)a, out_T U(theta)b>,
// theta = -pi + phi, plus the mirror image for |in_R a, in_L b> so that the
// operator commutes with particle exchange. Zero on every other input.
ComplexMatrix build_s_operator(const AmplitudeModel& model, double phi, SpinPhase phase, HalfInt s);

// StandardSSC:   |2 <phi'| Lambda S |phi>|^2
// DynamicalGM:   |<phi'|S'|phi> + <phi'_e|S'|phi>|^2, per-projection phases
// WorkingSOmega: same with total-spin phases
// Throws std::invalid_argument for s above kMaxOracleSpin.
double oracle_w(const ScatterConfig& cfg, double phi, Prescription prescription);

} // namespace spinstat::oracle
