#include "convdens/ar_fit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace convdens {

namespace {

// eps_hat_j = X_j - sum_i rho_i X_{j-i} for j = p_n+1..n (1-based).
void fill_residuals(const Eigen::VectorXd& x, const Eigen::VectorXd& rho,
                    int p_n, ArFit& fit) {
  const int n = static_cast<int>(x.size());
  fit.residuals.resize(n - p_n);
  fit.y_hat.resize(n - p_n);
  for (int j = p_n; j < n; ++j) {
    double eps = x[j];
    for (int i = 1; i <= p_n; ++i) eps -= rho[i - 1] * x[j - i];
    fit.residuals[j - p_n] = eps;
    fit.y_hat[j - p_n] = x[j] - eps;
  }
}

ArFit least_squares_impl(const Eigen::VectorXd& x, int p_n,
                         ArFit::Method method) {
  const int n = static_cast<int>(x.size());
  if (p_n < 1) throw std::invalid_argument("fit_least_squares: p_n >= 1");
  if (n - p_n <= p_n)
    throw std::invalid_argument(
        "fit_least_squares: need n - p_n > p_n rows");
  const int rows = n - p_n;
  // Lag design matrix: row j-p_n holds (X_{j-1}, ..., X_{j-p_n}).
  Eigen::MatrixXd lags(rows, p_n);
  for (int j = p_n; j < n; ++j)
    for (int i = 1; i <= p_n; ++i) lags(j - p_n, i - 1) = x[j - i];
  const Eigen::VectorXd y = x.tail(rows);
  Eigen::MatrixXd gram = (lags.transpose() * lags) / rows;
  const Eigen::VectorXd rhs = (lags.transpose() * y) / rows;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double lmin = es.eigenvalues().minCoeff();
  const double lmax = es.eigenvalues().maxCoeff();
  ArFit fit;
  fit.method = method;
  fit.p_n = p_n;
  fit.gram_condition =
      (lmin > 0.0) ? lmax / lmin : std::numeric_limits<double>::infinity();
  if (!(lmin > 0.0) || fit.gram_condition > 1e12) {
    gram.diagonal().array() += 1e-10 * gram.trace() / p_n;
    fit.ridge_applied = true;
  }
  fit.rho_hat = gram.ldlt().solve(rhs);
  fill_residuals(x, fit.rho_hat, p_n, fit);
  return fit;
}

double solve_ma1_theta(double r1, bool& clamped) {
  clamped = false;
  if (std::abs(r1) >= 0.5) {
    clamped = true;
    return (r1 > 0.0 ? 1.0 : -1.0) * (1.0 - 1e-6);
  }
  if (std::abs(r1) < 1e-12) return r1;
  return (1.0 - std::sqrt(1.0 - 4.0 * r1 * r1)) / (2.0 * r1);
}

double arma11_rho1(double alpha, double beta) {
  return (1.0 + alpha * beta) * (alpha + beta) /
         (1.0 + 2.0 * alpha * beta + beta * beta);
}

double solve_arma11_beta(double alpha, double r1) {
  const double lo = -1.0 + 1e-6, hi = 1.0 - 1e-6;
  auto fn = [&](double b) { return arma11_rho1(alpha, b) - r1; };
  double a = lo, b = hi, fa = fn(a), fb = fn(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw std::runtime_error(
        "fit_parametric: ARMA(1,1) beta root search failed (no sign change "
        "on (-1, 1))");
  while (b - a > 1e-12) {
    const double m = 0.5 * (a + b);
    const double fm = fn(m);
    if (fm == 0.0) return m;
    if (fa * fm < 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

int pn_rule(int n) {
  if (n < 30) throw std::invalid_argument("pn_rule: n must be >= 30");
  const double v = std::log(static_cast<double>(n)) *
                   std::log(std::log(static_cast<double>(n)));
  const int p = static_cast<int>(std::ceil(v));
  return std::clamp(p, 1, n / 4);
}

ArFit fit_least_squares(const Eigen::VectorXd& x, int p_n) {
  return least_squares_impl(x, p_n, ArFit::Method::LeastSquares);
}

ArFit fit_parametric(const Eigen::VectorXd& x, const ParametricFamily& family,
                     int p_n) {
  validate(family);
  if (p_n < 1) throw std::invalid_argument("fit_parametric: p_n >= 1");
  const int n = static_cast<int>(x.size());
  if (n - p_n < 2)
    throw std::invalid_argument("fit_parametric: series too short");

  if (const auto* ar = std::get_if<Ar>(&family)) {
    const int p = static_cast<int>(ar->theta.size());
    ArFit base = least_squares_impl(x, p, ArFit::Method::ParametricAr);
    if (p_n == p) {
      base.theta_hat = base.rho_hat;
      return base;
    }
    ArFit fit;
    fit.method = ArFit::Method::ParametricAr;
    fit.p_n = p_n;
    fit.theta_hat = base.rho_hat;
    fit.gram_condition = base.gram_condition;
    fit.ridge_applied = base.ridge_applied;
    fit.rho_hat = Eigen::VectorXd::Zero(p_n);
    fit.rho_hat.head(std::min(p, p_n)) = base.rho_hat.head(std::min(p, p_n));
    fill_residuals(x, fit.rho_hat, p_n, fit);
    return fit;
  }

  ArFit fit;
  fit.p_n = p_n;
  fit.gram_condition = std::numeric_limits<double>::quiet_NaN();
  if (std::holds_alternative<Ma1>(family)) {
    fit.method = ArFit::Method::ParametricMa1;
    const double r1 = sample_autocorrelation(x, 1);
    const double theta = solve_ma1_theta(r1, fit.clamped);
    fit.theta_hat = Eigen::VectorXd::Constant(1, theta);
    fit.rho_hat = ar_coeffs(Ma1{theta}, p_n).rho;
  } else {
    fit.method = ArFit::Method::ParametricArma11;
    const double r1 = sample_autocorrelation(x, 1);
    const double r2 = sample_autocorrelation(x, 2);
    if (r1 == 0.0)
      throw std::runtime_error(
          "fit_parametric: ARMA(1,1) needs a nonzero lag-1 autocorrelation");
    const double alpha = r2 / r1;
    if (!(std::abs(alpha) < 1.0))
      throw std::runtime_error(
          "fit_parametric: ARMA(1,1) alpha estimate outside (-1, 1)");
    const double beta = solve_arma11_beta(alpha, r1);
    fit.theta_hat = Eigen::Vector2d(alpha, beta);
    fit.rho_hat = ar_coeffs(Arma11{alpha, beta}, p_n).rho;
  }
  fill_residuals(x, fit.rho_hat, p_n, fit);
  return fit;
}

ResidualDiagnostics residual_diagnostics(const ArFit& fit,
                                         const SamplePath& truth) {
  const int n = static_cast<int>(truth.eps_truth.size());
  const int rows = static_cast<int>(fit.residuals.size());
  if (rows + fit.p_n != n)
    throw std::invalid_argument(
        "residual_diagnostics: fit and path lengths do not align");
  const Eigen::VectorXd diff =
      fit.residuals - truth.eps_truth.tail(rows);
  ResidualDiagnostics d;
  d.rms = std::sqrt(diff.squaredNorm() / rows);
  d.max_abs = diff.cwiseAbs().maxCoeff();
  d.mean_dev = std::abs(diff.mean());
  return d;
}

double sample_autocorrelation(const Eigen::VectorXd& x, int lag) {
  const int n = static_cast<int>(x.size());
  if (lag < 0 || lag >= n)
    throw std::invalid_argument("sample_autocorrelation: bad lag");
  const double mean = x.mean();
  const Eigen::ArrayXd c = x.array() - mean;
  const double denom = c.square().sum();
  if (denom == 0.0)
    throw std::invalid_argument("sample_autocorrelation: constant series");
  double num = 0.0;
  for (int j = 0; j + lag < n; ++j) num += c[j] * c[j + lag];
  return num / denom;
}

}  // namespace convdens
