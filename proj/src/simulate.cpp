#include "convdens/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "convdens/quadrature.hpp"

namespace convdens {

namespace {

constexpr double kSqrtTwoPi = 2.506628274631000502415765;
constexpr int kMixtureComponentCap = 1 << 16;

Density gaussian_density(double var) {
  Density d;
  const double s = std::sqrt(var);
  d.sd = s;
  d.pdf = [var, s](double x) {
    return std::exp(-x * x / (2.0 * var)) / (kSqrtTwoPi * s);
  };
  d.pdf_vec = [var, s](const Eigen::ArrayXd& x) {
    return ((-x.square() / (2.0 * var)).exp() / (kSqrtTwoPi * s)).eval();
  };
  d.cdf = [s](double x) { return normal_cdf(x / s); };
  return d;
}

Density mixture_density(std::vector<double> w, std::vector<double> mean,
                        std::vector<double> var) {
  Density d;
  double m2 = 0.0;
  for (size_t c = 0; c < w.size(); ++c)
    m2 += w[c] * (mean[c] * mean[c] + var[c]);
  d.sd = std::sqrt(m2);  // all component means are centered already
  d.pdf = [w, mean, var](double x) {
    double v = 0.0;
    for (size_t c = 0; c < w.size(); ++c) {
      const double z = x - mean[c];
      v += w[c] * std::exp(-z * z / (2.0 * var[c])) /
           (kSqrtTwoPi * std::sqrt(var[c]));
    }
    return v;
  };
  d.pdf_vec = [w, mean, var](const Eigen::ArrayXd& x) {
    Eigen::ArrayXd v = Eigen::ArrayXd::Zero(x.size());
    for (size_t c = 0; c < w.size(); ++c) {
      v += w[c] * (-(x - mean[c]).square() / (2.0 * var[c])).exp() /
           (kSqrtTwoPi * std::sqrt(var[c]));
    }
    return v;
  };
  d.cdf = [w, mean, var](double x) {
    double v = 0.0;
    for (size_t c = 0; c < w.size(); ++c)
      v += w[c] * normal_cdf((x - mean[c]) / std::sqrt(var[c]));
    return v;
  };
  return d;
}

Density scaled_density(const Innovation& innov, double t) {
  // density of t * eps: f(x/t)/|t|
  Density d;
  const double at = std::abs(t);
  d.sd = at * innov.sd();
  d.pdf = [innov, t, at](double x) { return innov.pdf(x / t) / at; };
  d.pdf_vec = [innov, t, at](const Eigen::ArrayXd& x) {
    Eigen::ArrayXd v(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) v[i] = innov.pdf(x[i] / t) / at;
    return v;
  };
  d.cdf = [innov, t](double x) {
    return t > 0.0 ? innov.cdf(x / t) : 1.0 - innov.cdf(x / t);
  };
  return d;
}

Density convolution_density(const Density& a, const Density& b) {
  // quadrature convolution (a * b)(x) = int a(x - y) b(y) dy
  Density d;
  d.sd = std::sqrt(a.sd * a.sd + b.sd * b.sd);
  const double range_b = 14.0 * b.sd;
  auto pdf = [a, b, range_b](double x) {
    return integrate([&](double y) { return a.pdf(x - y) * b.pdf(y); },
                     -range_b, range_b, 1e-10);
  };
  d.pdf = pdf;
  d.pdf_vec = [pdf](const Eigen::ArrayXd& x) {
    Eigen::ArrayXd v(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) v[i] = pdf(x[i]);
    return v;
  };
  const double lo = -14.0 * d.sd;
  d.cdf = [pdf, lo](double x) {
    if (x <= lo) return 0.0;
    return integrate(pdf, lo, x, 1e-9);
  };
  return d;
}

std::vector<int> nonzero_lags(const MaCoefficients& phi) {
  std::vector<int> lags;
  for (int s = 0; s < phi.phi.size(); ++s)
    if (phi.phi[s] != 0.0) lags.push_back(s);
  return lags;
}

// Exact finite mixture of the law of sum_i coeff_i * eps_i for mixture
// innovations, by enumerating component assignments.
Density enumerate_mixture(const std::vector<double>& coeff,
                          const Innovation& innov) {
  const double w1 = innov.p0();
  const double mu1 = innov.p1();
  const double mu2 = -w1 * mu1 / (1.0 - w1);
  const double v = innov.p2();
  const size_t k = coeff.size();
  const size_t total = size_t{1} << k;
  if (total > kMixtureComponentCap)
    throw std::invalid_argument(
        "oracle density: mixture component enumeration exceeds cap (rule b)");
  double var = 0.0;
  for (double c : coeff) var += c * c * v;
  std::vector<double> w(total), mean(total), vars(total, var);
  for (size_t mask = 0; mask < total; ++mask) {
    double wt = 1.0, m = 0.0;
    for (size_t i = 0; i < k; ++i) {
      if (mask & (size_t{1} << i)) {
        wt *= 1.0 - w1;
        m += coeff[i] * mu2;
      } else {
        wt *= w1;
        m += coeff[i] * mu1;
      }
    }
    w[mask] = wt;
    mean[mask] = m;
  }
  return mixture_density(std::move(w), std::move(mean), std::move(vars));
}

Density oracle_sum_density(const MaCoefficients& phi, const Innovation& innov,
                           bool include_eps0) {
  const std::vector<int> lags = nonzero_lags(phi);
  const int N = static_cast<int>(lags.size());
  if (!include_eps0 && N == 0)
    throw std::invalid_argument(
        "oracle_g: white noise has no density for Y_0 (condition C fails)");
  if (include_eps0 && N == 0) return oracle_f(innov);

  if (innov.kind() == Innovation::Kind::Gaussian) {
    double var = include_eps0 ? innov.variance() : 0.0;
    for (int s : lags) var += phi.phi[s] * phi.phi[s] * innov.variance();
    return gaussian_density(var);
  }
  if (innov.kind() == Innovation::Kind::GaussianMixture) {
    std::vector<double> coeff;
    if (include_eps0) coeff.push_back(1.0);
    for (int s : lags) coeff.push_back(phi.phi[s]);
    return enumerate_mixture(coeff, innov);
  }
  // rule (c): general innovation law, at most two nonzero coefficients
  if (N > 2)
    throw std::invalid_argument(
        "oracle density: need Gaussian or mixture innovations for MA order > "
        "2 (rules a/b); quadrature route (c) supports at most two nonzero "
        "coefficients");
  Density g = (N == 1)
                  ? scaled_density(innov, phi.phi[lags[0]])
                  : convolution_density(scaled_density(innov, phi.phi[lags[0]]),
                                        scaled_density(innov, phi.phi[lags[1]]));
  if (!include_eps0) return g;
  return convolution_density(oracle_f(innov), g);
}

}  // namespace

SamplePath sample_path(const MaCoefficients& phi, const Innovation& innov,
                       int n, std::uint64_t seed, std::uint64_t stream) {
  if (n < 1) throw std::invalid_argument("sample_path: n must be >= 1");
  const int S = static_cast<int>(phi.phi.size());
  Philox rng(seed, stream);
  Eigen::VectorXd eps(n + S);
  for (int i = 0; i < n + S; ++i) eps[i] = innov.sample(rng);
  SamplePath path;
  path.x.resize(n);
  path.eps_truth = eps.tail(n);
  for (int t = 0; t < n; ++t) {
    double v = eps[t + S];
    for (int s = 1; s <= S; ++s) v += phi.phi[s - 1] * eps[t + S - s];
    path.x[t] = v;
  }
  path.seed = seed;
  path.stream = stream;
  return path;
}

Density oracle_f(const Innovation& innov) {
  Density d;
  d.sd = innov.sd();
  if (innov.kind() == Innovation::Kind::Gaussian)
    return gaussian_density(innov.variance());
  d.pdf = [innov](double x) { return innov.pdf(x); };
  d.pdf_vec = [innov](const Eigen::ArrayXd& x) {
    Eigen::ArrayXd v(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) v[i] = innov.pdf(x[i]);
    return v;
  };
  d.cdf = [innov](double x) { return innov.cdf(x); };
  return d;
}

Density oracle_g(const MaCoefficients& phi, const Innovation& innov) {
  return oracle_sum_density(phi, innov, false);
}

Density oracle_h(const MaCoefficients& phi, const Innovation& innov) {
  return oracle_sum_density(phi, innov, true);
}

double ks_distance(const Eigen::VectorXd& sample,
                   const std::function<double(double)>& cdf) {
  const int n = static_cast<int>(sample.size());
  if (n == 0) throw std::invalid_argument("ks_distance: empty sample");
  std::vector<double> sorted(sample.data(), sample.data() + n);
  std::sort(sorted.begin(), sorted.end());
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    const double F = cdf(sorted[i]);
    d = std::max(d, std::max(F - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - F));
  }
  return d;
}

}  // namespace convdens
