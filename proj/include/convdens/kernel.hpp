#pragma once

#include <Eigen/Dense>

namespace convdens {

/// A kernel of the form p(t) * N(0, v)(t) with p a polynomial. Base kernels
/// are built against the standard normal density (v = 1); self-convolutions
/// live on v = 2. The moments 1..order_m vanish, so the kernel is of type
/// (order_m, 2).
///
/// Kernels are immutable after construction and safe to share across
/// threads.
struct Kernel {
  int order_m = 1;
  Eigen::VectorXd poly_coeffs;  // ascending powers, degree <= max(order_m, 0)
  double gaussian_variance = 1.0;
};

/// Builds the even-polynomial kernel whose moments 1..m vanish, by solving
/// the Gaussian moment system  sum_j a_j E[Z^(2r+2j)] = 1[r = 0].  Odd
/// moments vanish by symmetry, so for odd m the solved polynomial coincides
/// with the one for m - 1 and still satisfies the type-(m, 2) conditions;
/// order_m records the caller's request.
Kernel build_kernel(int m);

/// k(t), k'(t) or k''(t) in closed form (deriv in {0, 1, 2}).
double eval(const Kernel& k, double t, int deriv = 0);
Eigen::ArrayXd eval(const Kernel& k, const Eigen::ArrayXd& t, int deriv = 0);

/// Derivatives of the rescaled kernel k_b(x) = k(x/b)/b, i.e.
/// b^(-1-deriv) * k^(deriv)(x/b). Requires b > 0.
double scaled_eval(const Kernel& k, double b, double x, int deriv = 0);
Eigen::ArrayXd scaled_eval(const Kernel& k, double b, const Eigen::ArrayXd& x,
                           int deriv = 0);

/// Exact self-convolution K = k * k: another polynomial-times-Gaussian
/// kernel on variance 2. Moments add under convolution, so K keeps the
/// type-(m, 2) property of k.
Kernel self_convolution(const Kernel& k);

/// Exact Gaussian-moment evaluation of the i-th kernel moment
/// integral t^i k(t) dt.
double moment(const Kernel& k, int i);

}  // namespace convdens
