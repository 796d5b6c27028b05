#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "convdens/innovations.hpp"
#include "convdens/process.hpp"

namespace convdens {

/// Simulated observations X_1..X_n together with the innovations that
/// generated them (kept for oracle checks only). Regeneration with the same
/// (phi, innovation, n, seed, stream) is bit-exact.
struct SamplePath {
  Eigen::VectorXd x;
  Eigen::VectorXd eps_truth;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Draws n + S innovations (S = truncation length of phi, used as burn-in
/// history) and forms X_t by the truncated moving-average convolution.
SamplePath sample_path(const MaCoefficients& phi, const Innovation& innov,
                       int n, std::uint64_t seed, std::uint64_t stream = 0);

/// A density callable on scalars or grids, with enough metadata to build
/// evaluation grids and quadrature ranges around it.
struct Density {
  std::function<double(double)> pdf;
  std::function<Eigen::ArrayXd(const Eigen::ArrayXd&)> pdf_vec;
  std::function<double(double)> cdf;
  double sd = 1.0;
};

/// Innovation density f as a Density (pointwise exact).
Density oracle_f(const Innovation& innov);

/// Density g of Y_0 = sum_s phi_s eps_{-s}. Supported routes:
///  (a) Gaussian innovations, any coefficients: Gaussian with variance
///      sigma2 * sum phi_s^2;
///  (b) Gaussian-mixture innovations, finitely many nonzero phi_s:
///      exact finite mixture by component enumeration (capped);
///  (c) any innovation law with at most two nonzero phi_s: exact scaling
///      for one, adaptive quadrature convolution for two.
/// The degenerate white-noise case (no nonzero coefficient) is rejected.
Density oracle_g(const MaCoefficients& phi, const Innovation& innov);

/// Density h of X_0 = eps_0 + Y_0 via the same routes (h = f for white
/// noise).
Density oracle_h(const MaCoefficients& phi, const Innovation& innov);

/// Kolmogorov-Smirnov distance between the empirical CDF of the sample and
/// the given CDF.
double ks_distance(const Eigen::VectorXd& sample,
                   const std::function<double(double)>& cdf);

}  // namespace convdens
