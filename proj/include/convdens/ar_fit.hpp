#pragma once

#include <Eigen/Dense>

#include "convdens/process.hpp"
#include "convdens/simulate.hpp"

namespace convdens {

/// Fitted autoregression over p_n lags with the residuals
/// eps_hat_j = X_j - sum_i rho_hat_i X_{j-i} and the differences
/// Y_hat_j = X_j - eps_hat_j, both over rows j = p_n+1..n. The two
/// identities hold bit-exactly by construction.
struct ArFit {
  enum class Method { LeastSquares, ParametricAr, ParametricMa1,
                      ParametricArma11 };

  int p_n = 0;
  Eigen::VectorXd rho_hat;    // size p_n
  Eigen::VectorXd residuals;  // size n - p_n
  Eigen::VectorXd y_hat;      // size n - p_n
  double gram_condition = 0.0;
  bool ridge_applied = false;
  Method method = Method::LeastSquares;
  Eigen::VectorXd theta_hat;  // parametric methods only
  bool clamped = false;       // MA(1) moment equation was unsolvable
};

/// Lag-order rule ceil(log(n) log(log n)), clamped to [1, n/4].
/// Requires n >= 30.
int pn_rule(int n);

/// Least squares over rows j = p_n+1..n: solves the normal equations with
/// the sample Gram matrix (averaged lag outer products). A near-singular
/// Gram matrix (condition number > 1e12) falls back to a ridge perturbation
/// of 1e-10 * trace / p_n, flagged in the result.
ArFit fit_least_squares(const Eigen::VectorXd& x, int p_n);

/// Method-of-moments parameter estimate for the given family, then
/// rho_hat_i = r_i(theta_hat) for i <= p_n.
///  - AR(p): least squares on exactly p lags;
///  - MA(1): invert the lag-1 autocorrelation theta/(1+theta^2); |r1| >= 0.5
///    clamps theta_hat to +-(1 - 1e-6) and sets the clamped flag;
///  - ARMA(1,1): alpha_hat = r2/r1, then beta_hat by bisection on (-1, 1).
ArFit fit_parametric(const Eigen::VectorXd& x, const ParametricFamily& family,
                     int p_n);

struct ResidualDiagnostics {
  double rms = 0.0;
  double max_abs = 0.0;
  double mean_dev = 0.0;
};

/// Residual accuracy against the true innovations of a simulated path,
/// over the aligned indices p_n+1..n.
ResidualDiagnostics residual_diagnostics(const ArFit& fit,
                                         const SamplePath& truth);

/// Lag-k sample autocorrelation (mean-centered, lag-0 normalizer).
double sample_autocorrelation(const Eigen::VectorXd& x, int lag);

}  // namespace convdens
