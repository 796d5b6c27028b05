#include "convdens/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace convdens {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

// E[Z^k] for Z ~ N(0, v): (k-1)!! v^(k/2) for even k, 0 for odd k.
double gaussian_moment(int k, double v) {
  if (k % 2 == 1) return 0.0;
  double m = 1.0;
  for (int j = k - 1; j >= 1; j -= 2) m *= j;
  return m * std::pow(v, k / 2.0);
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double poly_eval(const Eigen::VectorXd& c, double t) {
  double v = 0.0;
  for (Eigen::Index i = c.size() - 1; i >= 0; --i) v = v * t + c[i];
  return v;
}

Eigen::ArrayXd poly_eval(const Eigen::VectorXd& c, const Eigen::ArrayXd& t) {
  Eigen::ArrayXd v = Eigen::ArrayXd::Zero(t.size());
  for (Eigen::Index i = c.size() - 1; i >= 0; --i) v = v * t + c[i];
  return v;
}

// d/dt [p(t) N(0,v)(t)] = (p'(t) - (t/v) p(t)) N(0,v)(t); this returns the
// polynomial factor.
Eigen::VectorXd derivative_poly(const Eigen::VectorXd& p, double v) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(p.size() + 1);
  for (Eigen::Index i = 1; i < p.size(); ++i) out[i - 1] += i * p[i];
  for (Eigen::Index i = 0; i < p.size(); ++i) out[i + 1] -= p[i] / v;
  return out;
}

Eigen::VectorXd effective_poly(const Kernel& k, int deriv) {
  if (deriv < 0 || deriv > 2)
    throw std::invalid_argument("eval: deriv must be in {0,1,2}");
  Eigen::VectorXd p = k.poly_coeffs;
  for (int d = 0; d < deriv; ++d) p = derivative_poly(p, k.gaussian_variance);
  return p;
}

}  // namespace

Kernel build_kernel(int m) {
  if (m < 1) throw std::invalid_argument("build_kernel: m must be >= 1");
  const int J = m / 2;  // even powers t^0, t^2, ..., t^(2J)
  Eigen::MatrixXd A(J + 1, J + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(J + 1);
  rhs[0] = 1.0;
  for (int r = 0; r <= J; ++r)
    for (int j = 0; j <= J; ++j) A(r, j) = gaussian_moment(2 * r + 2 * j, 1.0);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (!lu.isInvertible())
    throw std::runtime_error("build_kernel: moment system singular");
  const Eigen::VectorXd a = lu.solve(rhs);
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(m + 1);
  for (int j = 0; j <= J; ++j) coeffs[2 * j] = a[j];
  return Kernel{m, coeffs, 1.0};
}

double eval(const Kernel& k, double t, int deriv) {
  const Eigen::VectorXd p = effective_poly(k, deriv);
  const double v = k.gaussian_variance;
  return poly_eval(p, t) * std::exp(-t * t / (2.0 * v)) /
         std::sqrt(kTwoPi * v);
}

Eigen::ArrayXd eval(const Kernel& k, const Eigen::ArrayXd& t, int deriv) {
  const Eigen::VectorXd p = effective_poly(k, deriv);
  const double v = k.gaussian_variance;
  return poly_eval(p, t) * (-t.square() / (2.0 * v)).exp() /
         std::sqrt(kTwoPi * v);
}

double scaled_eval(const Kernel& k, double b, double x, int deriv) {
  if (!(b > 0.0)) throw std::invalid_argument("scaled_eval: b must be > 0");
  return eval(k, x / b, deriv) * std::pow(b, -1.0 - deriv);
}

Eigen::ArrayXd scaled_eval(const Kernel& k, double b, const Eigen::ArrayXd& x,
                           int deriv) {
  if (!(b > 0.0)) throw std::invalid_argument("scaled_eval: b must be > 0");
  return eval(k, Eigen::ArrayXd(x / b), deriv) * std::pow(b, -1.0 - deriv);
}

Kernel self_convolution(const Kernel& k) {
  if (k.gaussian_variance != 1.0)
    throw std::invalid_argument(
        "self_convolution: expects a base kernel on variance 1");
  // With N(0,1)(s) N(0,1)(t-s) = N(0,2)(t) N(t/2, 1/2)(s), the convolution
  // is N(0,2)(t) times E[p(t/2 + U) p(t/2 - U)] with U ~ N(0, 1/2), an even
  // polynomial in t.
  const Eigen::VectorXd& c = k.poly_coeffs;
  const int deg = static_cast<int>(c.size()) - 1;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * deg + 1);
  for (int j = 0; j <= deg; ++j) {
    if (c[j] == 0.0) continue;
    for (int l = 0; l <= deg; ++l) {
      if (c[l] == 0.0) continue;
      for (int a = 0; a <= j; ++a) {
        for (int b = 0; b <= l; ++b) {
          const double eu = gaussian_moment(a + b, 0.5);
          if (eu == 0.0) continue;
          const int tpow = (j - a) + (l - b);
          double term = c[j] * c[l] * binomial(j, a) * binomial(l, b) * eu *
                        std::pow(0.5, tpow);
          if (b % 2 == 1) term = -term;
          out[tpow] += term;
        }
      }
    }
  }
  return Kernel{k.order_m, out, 2.0};
}

double moment(const Kernel& k, int i) {
  if (i < 0) throw std::invalid_argument("moment: i must be >= 0");
  double s = 0.0;
  for (Eigen::Index j = 0; j < k.poly_coeffs.size(); ++j)
    s += k.poly_coeffs[j] *
         gaussian_moment(i + static_cast<int>(j), k.gaussian_variance);
  return s;
}

}  // namespace convdens
