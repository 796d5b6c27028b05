#pragma once

#include <Eigen/Dense>
#include <functional>

#include "convdens/kernel.hpp"

namespace convdens {

enum class EstimatorKind { FHat, GHat, HTilde, HHat, HSw };

struct EstimateMeta {
  int n = 0;
  int p_n = 0;
  int m = 0;
};

/// A density estimate evaluated on a strictly increasing grid. Higher-order
/// kernels may produce negative values, so there is no nonnegativity
/// guarantee; mass on a wide grid should still be close to 1.
struct DensityEstimate {
  Eigen::VectorXd grid;
  Eigen::VectorXd values;
  double bandwidth = 0.0;
  EstimatorKind kind = EstimatorKind::HTilde;
  EstimateMeta meta;
};

/// c * n^(-1/(2m)).
double bandwidth_rule(int n, int m, double c);

/// Symmetric grid about `mean` spanning +-coverage * sd with the given
/// step; point count is floor(2 * coverage * sd / step) + 1. Requires
/// coverage >= 4, step > 0 and sd > 0.
Eigen::VectorXd default_grid(double mean, double sd, double coverage,
                             double step);
Eigen::VectorXd default_grid(const Eigen::VectorXd& data, double coverage,
                             double step);

/// Kernel density estimate (1/|points|) sum_j k_b(x - point_j); the
/// summation order over points is fixed (index order) so results are
/// reproducible bit-for-bit.
DensityEstimate kde(const Eigen::VectorXd& points, const Kernel& k, double b,
                    const Eigen::VectorXd& grid,
                    EstimatorKind kind = EstimatorKind::HTilde,
                    EstimateMeta meta = {});

/// Evaluation strategy for the pairwise-sum estimators. Direct is the
/// reference double loop; Binned bins the n^2 pairwise sums onto an
/// auxiliary lattice of width ~b/50 (linear binning) and runs one kernel
/// pass over the lattice. Auto picks Direct while the double-loop work
/// budget stays small and Binned beyond it.
enum class VStatPath { Auto, Direct, Binned };

/// Convolution estimator as the V-statistic
///   (n-p)^{-2} sum_i sum_j K_b(x - eps_i - y_j),  K = k * k.
DensityEstimate conv_estimate(const Eigen::VectorXd& eps_hat,
                              const Eigen::VectorXd& y_hat, const Kernel& k,
                              double b, const Eigen::VectorXd& grid,
                              VStatPath path = VStatPath::Auto,
                              EstimateMeta meta = {});

/// U-statistic variant for the MA(1) model: the off-diagonal average of
/// k_b(x - eps_i - theta * eps_j), normalized by (n-p)(n-p-1). Uses the
/// base kernel k, not its self-convolution.
DensityEstimate h_sw_ustat(const Eigen::VectorXd& eps_hat, double theta_hat,
                           const Kernel& k, double b,
                           const Eigen::VectorXd& grid,
                           VStatPath path = VStatPath::Auto,
                           EstimateMeta meta = {});

/// max_g |values[g] - oracle(grid[g])|.
double sup_error(const DensityEstimate& est,
                 const std::function<double(double)>& oracle);

/// Trapezoid integral of the estimate over its grid.
double trapezoid_mass(const DensityEstimate& est);

}  // namespace convdens
