#include "convdens/process.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace convdens {

namespace {

constexpr double kRootMargin = 1e-9;
constexpr double kTailTarget = 1e-12;
constexpr int kTruncationCap = 10000;

// Smallest root modulus of c0 + c1 z + ... + cd z^d (cd != 0).
double min_root_modulus(const Eigen::VectorXd& coeffs) {
  int d = static_cast<int>(coeffs.size()) - 1;
  while (d > 0 && coeffs[d] == 0.0) --d;
  if (d == 0) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -coeffs[i] / coeffs[d];
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  return es.eigenvalues().cwiseAbs().minCoeff();
}

// Geometric tail estimate sum_{s>S} C r^s anchored at the largest of the
// last few computed coefficients.
double geometric_tail(const Eigen::VectorXd& seq, double rate) {
  if (!(rate > 0.0) || rate >= 1.0)
    return std::numeric_limits<double>::infinity();
  const int S = static_cast<int>(seq.size());
  double anchor = 0.0;
  for (int s = std::max(0, S - 5); s < S; ++s)
    anchor = std::max(anchor, std::abs(seq[s]) * std::pow(rate, S - 1 - s));
  return anchor * rate / (1.0 - rate);
}

}  // namespace

void validate(const ParametricFamily& family) {
  if (const auto* ar = std::get_if<Ar>(&family)) {
    const int p = static_cast<int>(ar->theta.size());
    if (p < 1) throw std::invalid_argument("AR(p): p must be >= 1");
    if (ar->theta[p - 1] == 0.0)
      throw std::invalid_argument("AR(p): theta_p must be nonzero");
    // rho(z) = 1 - sum theta_i z^i must be root-free on the closed disk.
    Eigen::VectorXd poly(p + 1);
    poly[0] = 1.0;
    poly.tail(p) = -ar->theta;
    if (!(min_root_modulus(poly) > 1.0))
      throw std::invalid_argument(
          "AR(p): lag polynomial has a root in the closed unit disk");
  } else if (const auto* ma = std::get_if<Ma1>(&family)) {
    if (ma->theta == 0.0)
      throw std::invalid_argument("MA(1): theta must be nonzero");
    if (!(std::abs(ma->theta) < 1.0))
      throw std::invalid_argument("MA(1): |theta| must be < 1");
  } else {
    const auto& arma = std::get<Arma11>(family);
    if (!(std::abs(arma.alpha) < 1.0))
      throw std::invalid_argument("ARMA(1,1): |alpha| must be < 1");
    if (!(std::abs(arma.beta) < 1.0))
      throw std::invalid_argument("ARMA(1,1): |beta| must be < 1");
    if (arma.alpha + arma.beta == 0.0)
      throw std::invalid_argument("ARMA(1,1): alpha + beta must be nonzero");
  }
}

int parameter_dim(const ParametricFamily& family) {
  if (const auto* ar = std::get_if<Ar>(&family))
    return static_cast<int>(ar->theta.size());
  return std::holds_alternative<Ma1>(family) ? 1 : 2;
}

MaCoefficients ma_coeffs(const ParametricFamily& family, int S) {
  validate(family);
  if (S < 1) throw std::invalid_argument("ma_coeffs: S must be >= 1");
  MaCoefficients out;
  out.phi = Eigen::VectorXd::Zero(S);
  if (const auto* ma = std::get_if<Ma1>(&family)) {
    out.phi[0] = ma->theta;
    out.tail_bound = 0.0;
  } else if (const auto* arma = std::get_if<Arma11>(&family)) {
    const double a = arma->alpha, c = arma->alpha + arma->beta;
    double pow_a = 1.0;
    for (int s = 0; s < S; ++s, pow_a *= a) out.phi[s] = c * pow_a;
    out.tail_bound = (a == 0.0) ? 0.0
                                : std::abs(c) * std::pow(std::abs(a), S) /
                                      (1.0 - std::abs(a));
  } else {
    const auto& ar = std::get<Ar>(family);
    ArCoefficients rho;
    rho.rho = Eigen::VectorXd::Zero(S);
    rho.rho.head(std::min<int>(S, static_cast<int>(ar.theta.size()))) =
        ar.theta.head(std::min<int>(S, static_cast<int>(ar.theta.size())));
    out = invert_ar_to_ma(rho, S);
  }
  return out;
}

ArCoefficients ar_coeffs(const ParametricFamily& family, int S) {
  validate(family);
  if (S < 1) throw std::invalid_argument("ar_coeffs: S must be >= 1");
  ArCoefficients out;
  out.rho = Eigen::VectorXd::Zero(S);
  if (const auto* ar = std::get_if<Ar>(&family)) {
    const int p = static_cast<int>(ar->theta.size());
    for (int s = 0; s < std::min(p, S); ++s) out.rho[s] = ar->theta[s];
    out.tail_bound = 0.0;
  } else if (const auto* ma = std::get_if<Ma1>(&family)) {
    const double t = ma->theta;
    double pow_mt = -t;  // (-theta)^s
    for (int s = 1; s <= S; ++s, pow_mt *= -t) out.rho[s - 1] = -pow_mt;
    out.tail_bound =
        std::pow(std::abs(t), S + 1) / (1.0 - std::abs(t));
  } else {
    const auto& arma = std::get<Arma11>(family);
    const double c = arma.alpha + arma.beta, b = arma.beta;
    double pow_mb = 1.0;  // (-beta)^(s-1)
    for (int s = 1; s <= S; ++s, pow_mb *= -b) out.rho[s - 1] = c * pow_mb;
    out.tail_bound = (b == 0.0) ? 0.0
                                : std::abs(c) * std::pow(std::abs(b), S) /
                                      (1.0 - std::abs(b));
  }
  return out;
}

GradientCoeffs gradient_coeffs(const ParametricFamily& family, int S) {
  validate(family);
  if (S < 1) throw std::invalid_argument("gradient_coeffs: S must be >= 1");
  GradientCoeffs out;
  const int q = parameter_dim(family);
  out.r_dot = Eigen::MatrixXd::Zero(S, q);
  if (std::holds_alternative<Ar>(family)) {
    for (int s = 0; s < std::min(S, q); ++s) out.r_dot(s, s) = 1.0;
  } else if (const auto* ma = std::get_if<Ma1>(&family)) {
    double pow_mt = 1.0;  // (-theta)^(s-1)
    for (int s = 1; s <= S; ++s, pow_mt *= -ma->theta)
      out.r_dot(s - 1, 0) = s * pow_mt;
  } else {
    const auto& arma = std::get<Arma11>(family);
    double pow_mb = 1.0;       // (-beta)^(s-1)
    double pow_mb_prev = 0.0;  // (-beta)^(s-2), zero-weighted at s = 1
    for (int s = 1; s <= S; ++s) {
      out.r_dot(s - 1, 0) = pow_mb;
      out.r_dot(s - 1, 1) = s * pow_mb - (s - 1) * arma.alpha * pow_mb_prev;
      pow_mb_prev = pow_mb;
      pow_mb *= -arma.beta;
    }
  }
  out.sq_norm = out.r_dot.squaredNorm();
  return out;
}

ArCoefficients invert_ma_to_ar(const MaCoefficients& phi, int S) {
  if (S < 1) throw std::invalid_argument("invert_ma_to_ar: S must be >= 1");
  const InvertibilityReport rep = check_invertibility(phi);
  if (!rep.invertible)
    throw std::invalid_argument(
        "invert_ma_to_ar: transfer polynomial has a root inside the closed "
        "unit disk");
  const int M = static_cast<int>(phi.phi.size());
  ArCoefficients out;
  out.rho = Eigen::VectorXd::Zero(S);
  for (int k = 1; k <= S; ++k) {
    double v = (k <= M) ? phi.phi[k - 1] : 0.0;
    for (int j = 1; j < k; ++j) {
      const int lag = k - j;
      if (lag <= M) v -= out.rho[j - 1] * phi.phi[lag - 1];
    }
    out.rho[k - 1] = v;
  }
  out.tail_bound = geometric_tail(out.rho, 1.0 / rep.min_root_modulus);
  return out;
}

MaCoefficients invert_ar_to_ma(const ArCoefficients& rho, int S) {
  if (S < 1) throw std::invalid_argument("invert_ar_to_ma: S must be >= 1");
  const int M = static_cast<int>(rho.rho.size());
  MaCoefficients out;
  out.phi = Eigen::VectorXd::Zero(S);
  for (int k = 1; k <= S; ++k) {
    double v = (k <= M) ? rho.rho[k - 1] : 0.0;
    for (int j = 1; j < k; ++j) {
      if (j <= M) v += out.phi[k - j - 1] * rho.rho[j - 1];
    }
    out.phi[k - 1] = v;
  }
  // Tail decays at the rate of 1/rho(z); rho(z) = 1 - sum rho_s z^s.
  Eigen::VectorXd poly(M + 1);
  poly[0] = 1.0;
  poly.tail(M) = -rho.rho;
  out.tail_bound = geometric_tail(out.phi, 1.0 / min_root_modulus(poly));
  return out;
}

InvertibilityReport check_invertibility(const MaCoefficients& phi) {
  InvertibilityReport rep;
  int d = static_cast<int>(phi.phi.size());
  while (d > 0 && phi.phi[d - 1] == 0.0) --d;
  if (d == 0) {
    rep.invertible = true;  // white noise; condition (C) is flagged elsewhere
    rep.min_root_modulus = std::numeric_limits<double>::infinity();
    rep.min_abs_on_circle = 1.0;
    return rep;
  }
  Eigen::VectorXd poly(d + 1);
  poly[0] = 1.0;
  poly.tail(d) = phi.phi.head(d);
  rep.min_root_modulus = min_root_modulus(poly);
  rep.invertible = rep.min_root_modulus > 1.0 + kRootMargin;
  double min_abs = std::numeric_limits<double>::infinity();
  const int samples = 1024;
  for (int i = 0; i < samples; ++i) {
    const double w = 2.0 * M_PI * i / samples;
    std::complex<double> z(std::cos(w), std::sin(w));
    std::complex<double> v(0.0, 0.0);
    for (int j = d; j >= 0; --j) v = v * z + poly[j];
    min_abs = std::min(min_abs, std::abs(v));
  }
  rep.min_abs_on_circle = min_abs;
  return rep;
}

ProcessConstants process_constants(const MaCoefficients& phi, double sigma2) {
  ProcessConstants out;
  out.variance = sigma2 * (1.0 + phi.phi.squaredNorm());
  for (int s = 0; s < phi.phi.size(); ++s) {
    if (phi.phi[s] != 0.0) {
      ++out.nonzero_count;
      if (!out.tau) out.tau = s + 1;
    }
  }
  return out;
}

int default_truncation(const ParametricFamily& family) {
  validate(family);
  if (std::holds_alternative<Ma1>(family)) return 1;
  if (const auto* arma = std::get_if<Arma11>(&family)) {
    const double a = std::abs(arma->alpha);
    if (a == 0.0) return 1;
    const double c = std::abs(arma->alpha + arma->beta);
    const int S = static_cast<int>(
        std::ceil(std::log(kTailTarget * (1.0 - a) / c) / std::log(a)));
    return std::clamp(S, 1, kTruncationCap);
  }
  const MaCoefficients full = ma_coeffs(family, kTruncationCap);
  const auto& ar = std::get<Ar>(family);
  Eigen::VectorXd poly(ar.theta.size() + 1);
  poly[0] = 1.0;
  poly.tail(ar.theta.size()) = -ar.theta;
  const double rate = 1.0 / min_root_modulus(poly);
  for (int S = static_cast<int>(ar.theta.size()); S < kTruncationCap; ++S) {
    if (geometric_tail(full.phi.head(S), rate) < kTailTarget) return S;
  }
  return kTruncationCap;
}

}  // namespace convdens
