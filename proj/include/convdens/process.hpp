#pragma once

#include <Eigen/Dense>
#include <optional>
#include <variant>

namespace convdens {

/// Truncated moving-average coefficient sequence phi_1..phi_S of the linear
/// process X_t = eps_t + sum_s phi_s eps_{t-s}, with an upper bound on the
/// discarded tail sum_{s>S} |phi_s| (zero for finite-order processes).
struct MaCoefficients {
  Eigen::VectorXd phi;
  double tail_bound = 0.0;
};

/// Truncated autoregressive coefficients rho_1..rho_S of the inverted
/// representation eps_t = X_t - sum_s rho_s X_{t-s}.
struct ArCoefficients {
  Eigen::VectorXd rho;
  double tail_bound = 0.0;
};

/// AR(p) with the lag polynomial 1 - sum theta_i z^i root-free on the closed
/// unit disk and theta_p != 0.
struct Ar {
  Eigen::VectorXd theta;
};

/// MA(1) with |theta| < 1 and theta != 0.
struct Ma1 {
  double theta;
};

/// ARMA(1,1) with |alpha| < 1, |beta| < 1 and alpha + beta != 0.
struct Arma11 {
  double alpha;
  double beta;
};

using ParametricFamily = std::variant<Ar, Ma1, Arma11>;

/// Throws std::invalid_argument naming the violated constraint.
void validate(const ParametricFamily& family);

/// Number of free parameters (p, 1 or 2).
int parameter_dim(const ParametricFamily& family);

/// First S moving-average coefficients. Closed form for MA(1)/ARMA(1,1),
/// series inversion of the lag polynomial for AR(p); geometric tail bound.
MaCoefficients ma_coeffs(const ParametricFamily& family, int S);

/// First S autoregression coefficients r_s(theta) in closed form.
ArCoefficients ar_coeffs(const ParametricFamily& family, int S);

/// Gradients of s -> r_s(theta); row s-1 holds the gradient at lag s.
/// sq_norm is the square-summability diagnostic sum_s |r_dot_s|^2.
struct GradientCoeffs {
  Eigen::MatrixXd r_dot;  // S x parameter_dim
  double sq_norm = 0.0;
};
GradientCoeffs gradient_coeffs(const ParametricFamily& family, int S);

/// rho_k = phi_k - sum_{j<k} rho_j phi_{k-j}, from rho(z) phi(z) = 1.
/// Rejects non-invertible input.
ArCoefficients invert_ma_to_ar(const MaCoefficients& phi, int S);

/// Mirror recursion phi_k = rho_k + sum_{j<k} phi_{k-j} rho_j.
MaCoefficients invert_ar_to_ma(const ArCoefficients& rho, int S);

struct InvertibilityReport {
  bool invertible = false;
  double min_root_modulus = 0.0;   // +inf for the all-zero sequence
  double min_abs_on_circle = 0.0;  // min |phi(z)| sampled on |z| = 1
};

/// Roots of the truncated transfer polynomial 1 + sum phi_s z^s via the
/// companion matrix; invertible iff every root has modulus > 1 + 1e-9.
InvertibilityReport check_invertibility(const MaCoefficients& phi);

struct ProcessConstants {
  double variance = 0.0;        // sigma^2 (1 + sum phi_s^2)
  int nonzero_count = 0;        // N
  std::optional<int> tau;       // first nonzero lag; empty for white noise
};
ProcessConstants process_constants(const MaCoefficients& phi, double sigma2);

/// Smallest truncation length with geometric tail bound below 1e-12,
/// capped at 10000.
int default_truncation(const ParametricFamily& family);

}  // namespace convdens
