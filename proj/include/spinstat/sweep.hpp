#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinstat/scatter.hpp"

namespace spinstat {

struct PrescriptionGap {
  double max_abs_diff = 0.0; // max over the grid of |w_standard - w_dynamical|
  double phi_at_max = 0.0;
};

PrescriptionGap prescription_gap(const ScatterConfig& cfg, const std::vector<double>& phis);

struct SweepRow {
  int pair_id = 0;
  bool eigen_pair = false; // both spins are s_z eigenstates
  std::string alpha_desc;
  std::string beta_desc;
  double max_abs_diff = 0.0;
  double phi_at_max = 0.0;
  bool agree = false; // max_abs_diff < tol
};

struct SweepParams {
  HalfInt s = HalfInt::from_twice(1);
  int n_states = 100; // Haar-random pairs on top of the (2s+1)^2 eigenstate pairs
  int n_phis = 360;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

struct SweepReport {
  SweepParams params;
  std::vector<SweepRow> rows; // eigenstate pairs first (ascending m_a, then m_b), then random pairs

  int agree_count() const;
};

// Compares w_standard against w_dynamical for every s_z-eigenstate product
// pair and for n_states Haar-random pairs drawn from a single generator seeded
// with params.seed. Deterministic for fixed params.
SweepReport agreement_sweep(const AmplitudeModel& model, const SweepParams& params);

} // namespace spinstat
