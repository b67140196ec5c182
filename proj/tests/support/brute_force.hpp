#pragma once

// Test-only reference computations. Nothing here is shared with the library
// code paths the tests check.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace spinstat::testing {

// exp(A) by scaling and squaring around a 40-term Taylor series.
inline Eigen::MatrixXcd taylor_expm(const Eigen::MatrixXcd& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Eigen::MatrixXcd scaled = a / std::pow(2.0, squarings);

  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// P_l(x) = 2^{-l} sum_k (-1)^k C(l,k) C(2l-2k, l) x^{l-2k}.
inline double legendre_explicit(int l, double x) {
  auto binom = [](int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  double sum = 0.0;
  for (int k = 0; k <= l / 2; ++k) {
    sum += (k % 2 ? -1.0 : 1.0) * binom(l, k) * binom(2 * l - 2 * k, l) * std::pow(x, l - 2 * k);
  }
  return sum / std::pow(2.0, l);
}

// Spin matrices from the textbook matrix elements
// <m'|S_x|m> = (delta_{m',m+1} + delta_{m',m-1}) sqrt(s(s+1) - m m') / 2,
// filled entry by entry rather than via ladder operators.
struct TextbookSpin {
  Eigen::MatrixXcd sx, sy, sz;
};

inline TextbookSpin textbook_spin(int twice_s) {
  const double s = 0.5 * twice_s;
  const int d = twice_s + 1;
  TextbookSpin t{Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d)};
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const double mr = -s + r, mc = -s + c;
      if (r == c) t.sz(r, c) = mr;
      if (r == c + 1 || r + 1 == c) {
        const double amp = 0.5 * std::sqrt(s * (s + 1) - mr * mc);
        t.sx(r, c) = amp;
        t.sy(r, c) = std::complex<double>(0.0, r == c + 1 ? -amp : amp);
      }
    }
  }
  return t;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

} // namespace spinstat::testing
