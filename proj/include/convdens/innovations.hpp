#pragma once

#include "convdens/rng.hpp"

namespace convdens {

/// Innovation law menu: all three have mean zero exactly, finite fourth
/// moment, and an absolutely continuous density with bounded integrable
/// derivative, so they qualify as innovation distributions for the linear
/// process model.
///
///  - gaussian(sigma2):          N(0, sigma2)
///  - gaussian_mixture(w,mu,v):  w N(mu, v) + (1-w) N(mu2, v) with
///                               mu2 = -w mu / (1-w) so the mean is zero
///                               analytically, not by centering
///  - logistic(s):               centered logistic with scale s
class Innovation {
 public:
  enum class Kind { Gaussian, GaussianMixture, Logistic };

  static Innovation gaussian(double sigma2);
  static Innovation gaussian_mixture(double w, double mu, double v);
  static Innovation logistic(double scale);

  double pdf(double x) const;
  double dpdf(double x) const;  // f'
  double cdf(double x) const;
  double sample(Philox& rng) const;

  double variance() const { return variance_; }
  double fourth_moment() const { return fourth_moment_; }
  double sd() const;
  Kind kind() const { return kind_; }

  // raw parameters, used by the config serializer
  double p0() const { return p0_; }
  double p1() const { return p1_; }
  double p2() const { return p2_; }

 private:
  Innovation() = default;
  Kind kind_ = Kind::Gaussian;
  double p0_ = 1.0, p1_ = 0.0, p2_ = 0.0;
  double mu2_ = 0.0;  // second mixture mean
  double variance_ = 1.0;
  double fourth_moment_ = 3.0;
};

}  // namespace convdens
