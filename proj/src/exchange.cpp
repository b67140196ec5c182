#include "spinstat/exchange.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace spinstat::exchange {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSwapTolerance = 1e-10;

ComplexMatrix pair_rotation(HalfInt s, const Vec3& axis) {
  const ComplexMatrix r = rotation_matrix(s, axis, kPi);
  return Eigen::kroneckerProduct(r, r);
}

// Column k is R_ab applied to basis ket k; zero columns for pairs without an axis.
ComplexMatrix plan_operator(const ExchangePlan& plan) {
  const int d = plan.s.multiplicity();
  ComplexMatrix op = ComplexMatrix::Zero(d * d, d * d);
  for (const SectorAxis& sector : plan.sectors) {
    if (!sector.axis) continue;
    const int k = joint_index(plan.s, sector.ma, sector.mb);
    op.col(k) = pair_rotation(plan.s, *sector.axis).col(k);
  }
  return op;
}

ExchangeResult compare_with_swap(HalfInt s, const ComplexVector& input, ComplexVector output) {
  const ComplexVector swapped = swap_labels(s, input);
  Eigen::Index k = 0;
  output.cwiseAbs().maxCoeff(&k);
  const Complex overlap = swapped.dot(output);
  const Complex phase = std::abs(swapped[k]) > 1e-12 ? output[k] / swapped[k] : overlap;
  return ExchangeResult{std::move(output), phase, std::abs(overlap)};
}

void require_joint(HalfInt s, const ComplexVector& joint) {
  const int d = s.multiplicity();
  if (joint.size() != d * d) throw std::invalid_argument("joint state has wrong dimension");
  if (!joint.allFinite() || std::abs(joint.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("joint state is not normalized");
  }
}

ComplexVector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v.normalized();
}

} // namespace

int joint_index(HalfInt s, HalfInt ma, HalfInt mb) {
  if (!valid_projection(s, ma) || !valid_projection(s, mb)) {
    throw std::invalid_argument("invalid projection pair for spin " + s.str());
  }
  return basis_index(s, ma) * s.multiplicity() + basis_index(s, mb);
}

ComplexVector basis_ket(HalfInt s, HalfInt ma, HalfInt mb) {
  const int d = s.multiplicity();
  ComplexVector v = ComplexVector::Zero(d * d);
  v[joint_index(s, ma, mb)] = 1.0;
  return v;
}

ComplexVector swap_labels(HalfInt s, const ComplexVector& joint) {
  const int d = s.multiplicity();
  if (joint.size() != d * d) throw std::invalid_argument("joint state has wrong dimension");
  ComplexVector out(d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) out[b * d + a] = joint[a * d + b];
  }
  return out;
}

const SectorAxis& ExchangePlan::at(HalfInt ma, HalfInt mb) const {
  for (const SectorAxis& sector : sectors) {
    if (sector.ma == ma && sector.mb == mb) return sector;
  }
  throw std::out_of_range("no sector (" + ma.str() + ", " + mb.str() + ") in plan for spin " + s.str());
}

bool ExchangePlan::complete() const {
  for (const SectorAxis& sector : sectors) {
    if (!sector.axis) return false;
  }
  return true;
}

ExchangePlan default_plan(HalfInt s) {
  if (s.twice() < 0) throw std::invalid_argument("spin must be non-negative");
  ExchangePlan plan{s, kPi, {}};
  const int d = s.multiplicity();

  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const HalfInt ma = projection_at(s, i), mb = projection_at(s, j);
      SectorAxis sector{ma, mb, std::nullopt, 0.0, {}};

      std::vector<Vec3> candidates;
      if (ma == mb) candidates.push_back(Vec3::UnitZ());
      if (ma == -mb) candidates.push_back(Vec3::UnitY());
      candidates.push_back(Vec3::UnitX());

      const ComplexVector ket = basis_ket(s, ma, mb);
      const ComplexVector target = basis_ket(s, mb, ma);
      for (const Vec3& axis : candidates) {
        const double overlap = std::abs(target.dot(pair_rotation(s, axis) * ket));
        sector.best_overlap = std::max(sector.best_overlap, overlap);
        if (overlap >= 1.0 - kSwapTolerance) {
          sector.axis = axis;
          break;
        }
      }
      if (!sector.axis) {
        sector.note = std::abs(ma.twice()) != std::abs(mb.twice())
                          ? "|m_a| != |m_b|: no pi rotation maps the pair onto its swap"
                          : "no candidate axis exchanges this pair";
      }
      plan.sectors.push_back(std::move(sector));
    }
  }
  return plan;
}

ExchangeResult apply_exchange(const ExchangePlan& plan, const ComplexVector& joint) {
  require_joint(plan.s, joint);
  for (const SectorAxis& sector : plan.sectors) {
    if (!sector.axis && std::abs(joint[joint_index(plan.s, sector.ma, sector.mb)]) > kNormTolerance) {
      throw std::invalid_argument("joint state has weight on pair (" + sector.ma.str() + ", " + sector.mb.str() +
                                  ") which the plan cannot exchange");
    }
  }
  return compare_with_swap(plan.s, joint, plan_operator(plan) * joint);
}

ExchangeResult fixed_axis_exchange(HalfInt s, const Vec3& axis, const ComplexVector& joint) {
  require_joint(s, joint);
  return compare_with_swap(s, joint, pair_rotation(s, axis) * joint);
}

int PostulateReport::constructible_count() const {
  int n = 0;
  for (const SectorCheck& c : sectors) n += c.constructible ? 1 : 0;
  return n;
}

PostulateReport exchange_postulate_check(const ExchangePlan& plan, std::uint64_t seed) {
  const HalfInt s = plan.s;
  const int sign = s.is_integer() ? +1 : -1;
  const ComplexMatrix r_ab = plan_operator(plan);
  std::mt19937_64 rng(seed);

  // R-invariant part of psi is (psi + R psi) / 2 since R^2 = 1 on the span. It
  // must have parity `sign`, and every state of that parity must be invariant.
  auto invariance_forces_sign = [&](const ComplexVector& psi) {
    const ComplexVector invariant = 0.5 * (psi + r_ab * psi);
    const bool parity = (swap_labels(s, invariant) - sign * invariant).norm() < kSwapTolerance;
    const ComplexVector definite = 0.5 * (psi + sign * swap_labels(s, psi));
    const bool all_invariant = (r_ab * definite - definite).norm() < kSwapTolerance;
    return parity && all_invariant;
  };

  PostulateReport report{s, sign, std::nullopt, {}, false, false};
  std::optional<Complex> common_phase;
  bool uniform = true;
  ComplexVector span_sample = ComplexVector::Zero(s.multiplicity() * s.multiplicity());

  for (const SectorAxis& sector : plan.sectors) {
    SectorCheck check;
    check.ma = sector.ma;
    check.mb = sector.mb;
    check.constructible = sector.axis.has_value() && plan.at(sector.mb, sector.ma).axis.has_value();
    if (check.constructible) {
      const ComplexVector ket = basis_ket(s, sector.ma, sector.mb);
      const ExchangeResult r = apply_exchange(plan, ket);
      check.phase = r.phase;
      check.label_swapped = r.swap_overlap >= 1.0 - kSwapTolerance;
      check.phase_matches = std::abs(r.phase - static_cast<double>(sign)) < kSwapTolerance;

      ComplexVector psi = ket;
      if (sector.ma != sector.mb) {
        const ComplexVector c = random_vector(2, rng);
        psi = c[0] * ket + c[1] * basis_ket(s, sector.mb, sector.ma);
      }
      check.invariance_forces_sign = invariance_forces_sign(psi);

      if (!common_phase) common_phase = r.phase;
      else if (std::abs(*common_phase - r.phase) > kSwapTolerance) uniform = false;

      std::normal_distribution<double> gauss;
      span_sample[joint_index(s, sector.ma, sector.mb)] = Complex(gauss(rng), gauss(rng));
    }
    report.sectors.push_back(check);
  }

  if (common_phase && uniform && std::abs(common_phase->imag()) < kSwapTolerance &&
      std::abs(std::abs(common_phase->real()) - 1.0) < kSwapTolerance) {
    report.forced_sign = common_phase->real() > 0 ? +1 : -1;
  }
  report.superposition_ok = span_sample.norm() > 0.0 && invariance_forces_sign(span_sample.normalized());

  bool sectors_ok = true;
  for (const SectorCheck& c : report.sectors) {
    if (c.constructible && !c.passed()) sectors_ok = false;
  }
  report.passed = sectors_ok && report.superposition_ok && report.forced_sign == sign;
  return report;
}

} // namespace spinstat::exchange
