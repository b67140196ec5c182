#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinstat/spin_core.hpp"

namespace spinstat::exchange {

// Two-spin vectors live in the (2s+1)^2 product space, index
// basis_index(s, m_a) * (2s+1) + basis_index(s, m_b).
int joint_index(HalfInt s, HalfInt ma, HalfInt mb);
ComplexVector basis_ket(HalfInt s, HalfInt ma, HalfInt mb);

// Label swap |m_a, m_b> -> |m_b, m_a>.
ComplexVector swap_labels(HalfInt s, const ComplexVector& joint);

// Axis used to rotate one simultaneous eigenket |m_a, m_b> of the pair by pi.
struct SectorAxis {
  HalfInt ma;
  HalfInt mb;
  std::optional<Vec3> axis; // empty when no candidate axis exchanges the pair
  double best_overlap = 0.0; // max over tried axes of |<m_b, m_a| R (x) R |m_a, m_b>|
  std::string note;
};

struct ExchangePlan {
  HalfInt s;
  double angle = 0.0; // always pi
  std::vector<SectorAxis> sectors; // ascending m_a, then m_b

  const SectorAxis& at(HalfInt ma, HalfInt mb) const;
  bool complete() const;
};

// Spin-1/2 pattern generalized: |m, m> about z, |m, -m> about y. Every
// assignment is checked by applying the rotation. Pairs with |m_a| != |m_b|
// cannot be swapped by any pi rotation (a rotation preserves |<S_z>|) and are
// left without an axis.
ExchangePlan default_plan(HalfInt s);

struct ExchangeResult {
  ComplexVector state;
  Complex phase;       // relative to the label-swapped input, from its largest component
  double swap_overlap; // |<swapped input | output>|
};

// R_ab: each basis-pair component is rotated by pi about its planned axis,
// both spins together. Rejects unnormalized input and input with weight on
// pairs the plan cannot exchange.
ExchangeResult apply_exchange(const ExchangePlan& plan, const ComplexVector& joint);

// The fixed-axis alternative: the same pi rotation about one axis for every
// component.
ExchangeResult fixed_axis_exchange(HalfInt s, const Vec3& axis, const ComplexVector& joint);

struct SectorCheck {
  HalfInt ma;
  HalfInt mb;
  bool constructible = false;
  Complex phase;
  bool label_swapped = false;      // output is the swapped ket up to phase
  bool phase_matches = false;      // phase equals (-1)^{2s}
  bool invariance_forces_sign = false; // R-invariant part of random superpositions has the expected parity
  bool passed() const { return constructible && label_swapped && phase_matches && invariance_forces_sign; }
};

struct PostulateReport {
  HalfInt s;
  int expected_sign = 0;
  std::optional<int> forced_sign; // set when all constructible sectors share one real phase
  std::vector<SectorCheck> sectors;
  bool superposition_ok = false; // random superposition across all constructible sectors
  bool passed = false;           // every constructible sector passes and the superposition check holds
  int constructible_count() const;
};

// Imposes R_ab psi = psi and checks that this leaves exactly the
// (anti)symmetric part: symmetric for integer s, antisymmetric otherwise.
PostulateReport exchange_postulate_check(const ExchangePlan& plan, std::uint64_t seed = 0);

} // namespace spinstat::exchange
