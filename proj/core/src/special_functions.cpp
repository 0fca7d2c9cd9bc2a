#include "rieloc/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rieloc {

namespace {

constexpr double kMinExponentGap = 1e-6;  // rejection margin around -1

// Stirling tail S(z) with lgamma(z) = (z-1/2) ln z - z + ln(2 pi)/2 + S(z).
// Coefficients B_{2n} / (2n (2n-1)); truncation below 1e-17 for z >= 20.
double stirling_tail(double z) {
  const double w = 1.0 / (z * z);
  double s = -691.0 / 360360.0;
  s = s * w + 1.0 / 1188.0;
  s = s * w - 1.0 / 1680.0;
  s = s * w + 1.0 / 1260.0;
  s = s * w - 1.0 / 360.0;
  s = s * w + 1.0 / 12.0;
  return s / z;
}

}  // namespace

JacobiParams::JacobiParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
  if (!(alpha > -1.0 + kMinExponentGap) || !(beta > -1.0 + kMinExponentGap)) {
    throw std::domain_error("JacobiParams: alpha and beta must exceed -1 (margin 1e-6), got alpha=" +
                            std::to_string(alpha_) + " beta=" + std::to_string(beta_));
  }
}

SphereDim::SphereDim(int d_) : d(d_) {
  if (d < 1) throw std::domain_error("SphereDim: d must be >= 1");
}

double gamma_ratio_shifted(double x, double delta) {
  if (!(x > 0.0) || !(x + delta > 0.0)) {
    throw std::domain_error("gamma_ratio_shifted: arguments must be positive");
  }
  if (delta == 0.0) return 1.0;

  // Raise both arguments above z0; each step multiplies by (x+j)/(x+delta+j).
  constexpr double z0 = 20.0;
  double shift_factor = 1.0;
  double y = x;
  while (y < z0 || y + delta < z0) {
    shift_factor *= y / (y + delta);
    y += 1.0;
  }

  const double log_ratio = delta * std::log(y) + (y + delta - 0.5) * std::log1p(delta / y) - delta +
                           stirling_tail(y + delta) - stirling_tail(y);
  return shift_factor * std::exp(log_ratio);
}

double gamma_ratio(double a, double b, long long L) {
  const double x = static_cast<double>(L) + b;
  const double xd = static_cast<double>(L) + a;
  if (!(x > 0.0) || !(xd > 0.0)) {
    throw std::domain_error("gamma_ratio: L+a and L+b must be positive");
  }
  return gamma_ratio_shifted(x, a - b);
}

std::vector<double> jacobi_batch(const JacobiParams& p, int ell_max, double t) {
  if (ell_max < 0) throw std::domain_error("jacobi_batch: ell_max must be >= 0");
  std::vector<double> out(static_cast<size_t>(ell_max) + 1);
  detail::jacobi_batch_into(p, ell_max, t, out.data());
  return out;
}

double jacobi_eval(const JacobiParams& p, int ell, double t) {
  return jacobi_batch(p, ell, t).back();
}

double jacobi_at_one(const JacobiParams& p, int ell) {
  if (ell < 0) throw std::domain_error("jacobi_at_one: ell must be >= 0");
  // binom(ell+alpha, ell) = Gamma(ell+alpha+1) / (Gamma(ell+1) Gamma(alpha+1))
  return gamma_ratio_shifted(static_cast<double>(ell) + 1.0, p.alpha) / std::tgamma(p.alpha + 1.0);
}

double norm_const(const JacobiParams& p, int ell) {
  if (ell < 0) throw std::domain_error("norm_const: ell must be >= 0");
  const double a = p.alpha, b = p.beta;
  const double l = static_cast<double>(ell);
  // 2^{a+b+1}/(2l+a+b+1) * [G(l+a+1)/G(l+1)] * [G(l+b+1)/G(l+a+b+1)]
  return std::exp2(a + b + 1.0) / (2 * l + a + b + 1) * gamma_ratio_shifted(l + 1.0, a) /
         gamma_ratio_shifted(l + b + 1.0, a);
}

double dim_harmonic(SphereDim dim, int ell) {
  if (dim.d < 2) throw std::domain_error("dim_harmonic: d must be >= 2");
  if (ell < 0) throw std::domain_error("dim_harmonic: ell must be >= 0");
  if (ell == 0) return 1.0;
  const double l = static_cast<double>(ell);
  const double d = static_cast<double>(dim.d);
  // (2l+d-1) G(l+d-1) / (G(d) G(l+1))
  return (2 * l + d - 1) * gamma_ratio_shifted(l + 1.0, d - 2.0) / std::tgamma(d);
}

double sphere_area(SphereDim dim) { return detail::unit_sphere_area(dim.d); }

namespace detail {

double unit_sphere_area(int d) {
  if (d < 0) throw std::domain_error("unit_sphere_area: d must be >= 0");
  const double half = (d + 1) / 2.0;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

void jacobi_batch_into(const JacobiParams& p, int ell_max, double t, double* out) {
  if (std::abs(t) > 1.0) throw std::domain_error("jacobi_batch: |t| must be <= 1");
  const double a = p.alpha, b = p.beta;
  out[0] = 1.0;
  if (ell_max == 0) return;
  out[1] = (a + 1) + (a + b + 2) * (t - 1) / 2;
  for (int l = 2; l <= ell_max; ++l) {
    const double den = 2.0 * l * (l + a + b) * (2 * l + a + b - 2);
    const double c1 = (2 * l + a + b - 1) * ((2 * l + a + b) * (2 * l + a + b - 2) * t + a * a - b * b);
    const double c0 = -2.0 * (l + a - 1) * (l + b - 1) * (2 * l + a + b);
    out[l] = (c1 * out[l - 1] + c0 * out[l - 2]) / den;
  }
}

double jacobi_terminal(const JacobiParams& p, int ell, double t) {
  if (std::abs(t) > 1.0) throw std::domain_error("jacobi_terminal: |t| must be <= 1");
  const double a = p.alpha, b = p.beta;
  if (ell == 0) return 1.0;
  double prev = 1.0;
  double cur = (a + 1) + (a + b + 2) * (t - 1) / 2;
  for (int l = 2; l <= ell; ++l) {
    const double den = 2.0 * l * (l + a + b) * (2 * l + a + b - 2);
    const double c1 = (2 * l + a + b - 1) * ((2 * l + a + b) * (2 * l + a + b - 2) * t + a * a - b * b);
    const double c0 = -2.0 * (l + a - 1) * (l + b - 1) * (2 * l + a + b);
    const double next = (c1 * cur + c0 * prev) / den;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace detail

}  // namespace rieloc
