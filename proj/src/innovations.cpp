#include "convdens/innovations.hpp"

#include <cmath>
#include <stdexcept>

namespace convdens {

namespace {

constexpr double kSqrtTwoPi = 2.506628274631000502415765;

double normal_pdf(double x, double mean, double var) {
  const double z = x - mean;
  return std::exp(-z * z / (2.0 * var)) / (kSqrtTwoPi * std::sqrt(var));
}

}  // namespace

Innovation Innovation::gaussian(double sigma2) {
  if (!(sigma2 > 0.0))
    throw std::invalid_argument("Innovation::gaussian: sigma2 must be > 0");
  Innovation f;
  f.kind_ = Kind::Gaussian;
  f.p0_ = sigma2;
  f.variance_ = sigma2;
  f.fourth_moment_ = 3.0 * sigma2 * sigma2;
  return f;
}

Innovation Innovation::gaussian_mixture(double w, double mu, double v) {
  if (!(w > 0.0 && w < 1.0))
    throw std::invalid_argument("Innovation::gaussian_mixture: w in (0,1)");
  if (!(v > 0.0))
    throw std::invalid_argument("Innovation::gaussian_mixture: v must be > 0");
  Innovation f;
  f.kind_ = Kind::GaussianMixture;
  f.p0_ = w;
  f.p1_ = mu;
  f.p2_ = v;
  f.mu2_ = -w * mu / (1.0 - w);
  const double m2 = w * (mu * mu + v) + (1.0 - w) * (f.mu2_ * f.mu2_ + v);
  auto comp4 = [v](double m) {
    const double m2c = m * m;
    return m2c * m2c + 6.0 * m2c * v + 3.0 * v * v;
  };
  f.variance_ = m2;
  f.fourth_moment_ = w * comp4(mu) + (1.0 - w) * comp4(f.mu2_);
  return f;
}

Innovation Innovation::logistic(double scale) {
  if (!(scale > 0.0))
    throw std::invalid_argument("Innovation::logistic: scale must be > 0");
  Innovation f;
  f.kind_ = Kind::Logistic;
  f.p0_ = scale;
  const double pi2 = M_PI * M_PI;
  f.variance_ = pi2 * scale * scale / 3.0;
  f.fourth_moment_ = 7.0 * pi2 * pi2 * scale * scale * scale * scale / 15.0;
  return f;
}

double Innovation::pdf(double x) const {
  switch (kind_) {
    case Kind::Gaussian:
      return normal_pdf(x, 0.0, p0_);
    case Kind::GaussianMixture:
      return p0_ * normal_pdf(x, p1_, p2_) +
             (1.0 - p0_) * normal_pdf(x, mu2_, p2_);
    case Kind::Logistic: {
      const double u = x / (2.0 * p0_);
      const double sech = 1.0 / std::cosh(u);
      return sech * sech / (4.0 * p0_);
    }
  }
  return 0.0;
}

double Innovation::dpdf(double x) const {
  switch (kind_) {
    case Kind::Gaussian:
      return -x / p0_ * normal_pdf(x, 0.0, p0_);
    case Kind::GaussianMixture:
      return p0_ * (-(x - p1_) / p2_) * normal_pdf(x, p1_, p2_) +
             (1.0 - p0_) * (-(x - mu2_) / p2_) * normal_pdf(x, mu2_, p2_);
    case Kind::Logistic: {
      const double u = x / (2.0 * p0_);
      const double sech = 1.0 / std::cosh(u);
      return -sech * sech * std::tanh(u) / (4.0 * p0_ * p0_);
    }
  }
  return 0.0;
}

double Innovation::cdf(double x) const {
  switch (kind_) {
    case Kind::Gaussian:
      return normal_cdf(x / std::sqrt(p0_));
    case Kind::GaussianMixture: {
      const double s = std::sqrt(p2_);
      return p0_ * normal_cdf((x - p1_) / s) +
             (1.0 - p0_) * normal_cdf((x - mu2_) / s);
    }
    case Kind::Logistic:
      return 0.5 * (1.0 + std::tanh(x / (2.0 * p0_)));
  }
  return 0.0;
}

double Innovation::sample(Philox& rng) const {
  switch (kind_) {
    case Kind::Gaussian:
      return std::sqrt(p0_) * rng.normal();
    case Kind::GaussianMixture: {
      const double u = rng.uniform();
      const double mean = (u < p0_) ? p1_ : mu2_;
      return mean + std::sqrt(p2_) * rng.normal();
    }
    case Kind::Logistic: {
      const double u = rng.uniform();
      return p0_ * std::log(u / (1.0 - u));
    }
  }
  return 0.0;
}

double Innovation::sd() const { return std::sqrt(variance_); }

}  // namespace convdens
