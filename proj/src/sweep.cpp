#include "spinstat/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "spinstat/prescriptions.hpp"

namespace spinstat {

PrescriptionGap prescription_gap(const ScatterConfig& cfg, const std::vector<double>& phis) {
  PrescriptionGap gap;
  for (double phi : phis) {
    const double diff = std::abs(w_standard(cfg, phi) - w_dynamical(cfg, phi));
    if (diff > gap.max_abs_diff || std::isnan(diff)) {
      gap.max_abs_diff = diff;
      gap.phi_at_max = phi;
    }
  }
  return gap;
}

int SweepReport::agree_count() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.agree; }));
}

SweepReport agreement_sweep(const AmplitudeModel& model, const SweepParams& params) {
  if (params.n_states < 0) throw std::invalid_argument("n_states must be non-negative");
  if (params.n_phis < 1) throw std::invalid_argument("n_phis must be at least 1");
  if (params.s.twice() < 0) throw std::invalid_argument("spin must be non-negative");

  const HalfInt s = params.s;
  const std::vector<double> grid = uniform_phi_grid(params.n_phis);
  SweepReport report{params, {}};

  auto add = [&](const SpinState& alpha, const SpinState& beta, bool eigen, std::string a_desc,
                 std::string b_desc) {
    const PrescriptionGap gap = prescription_gap(ScatterConfig(alpha, beta, model), grid);
    report.rows.push_back(SweepRow{
        .pair_id = static_cast<int>(report.rows.size()),
        .eigen_pair = eigen,
        .alpha_desc = std::move(a_desc),
        .beta_desc = std::move(b_desc),
        .max_abs_diff = gap.max_abs_diff,
        .phi_at_max = gap.phi_at_max,
        .agree = gap.max_abs_diff < params.tol,
    });
  };

  for (int i = 0; i < s.multiplicity(); ++i) {
    for (int j = 0; j < s.multiplicity(); ++j) {
      const HalfInt ma = projection_at(s, i), mb = projection_at(s, j);
      add(sz_eigenstate(s, ma), sz_eigenstate(s, mb), true, "m=" + ma.str(), "m=" + mb.str());
    }
  }

  std::mt19937_64 rng(params.seed);
  for (int k = 0; k < params.n_states; ++k) {
    const SpinState alpha = random_state(s, rng);
    const SpinState beta = random_state(s, rng);
    add(alpha, beta, false, describe(alpha), describe(beta));
  }
  return report;
}

} // namespace spinstat
