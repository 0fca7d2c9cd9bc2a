#include "rieloc/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rieloc/kernels.hpp"

namespace rieloc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_open_interval(double theta, const char* who) {
  if (!(theta > 0.0) || !(theta < kPi)) {
    throw std::domain_error(std::string(who) + ": theta must lie in (0, pi)");
  }
}

ThetaInterval window_for(int n) {
  return {kOrderWindow / n, kPi - kOrderWindow / n};
}

void require_window(double theta, const ThetaInterval& w, const char* who) {
  if (!w.contains(theta)) {
    throw std::domain_error(std::string(who) + ": theta outside validity window [" +
                            std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]");
  }
}

double factorial(int n) {
  double r = 1.0;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

double envelope_m(const JacobiParams& p, double theta) {
  require_open_interval(theta, "envelope_m");
  return std::pow(std::sin(theta / 2), -p.alpha - 0.5) * std::pow(std::cos(theta / 2), -p.beta - 0.5) /
         std::sqrt(kPi);
}

double phase_omega(double alpha, double z) { return z - alpha * kPi / 2 - kPi / 4; }

double f2_coefficient(const JacobiParams& p, double theta) {
  require_open_interval(theta, "f2_coefficient");
  const double a = p.alpha, b = p.beta;
  return (b * b - a * a) / 4 * std::tan(theta / 2) - (4 * a * a - 1) / 8 / std::tan(theta);
}

double u_hat(double alpha) {
  const double x = alpha + 0.5;
  return -2.0 + (x - std::floor(x));
}

double nu_hat(double alpha) { return alpha < 0.5 ? alpha + 2.5 : alpha + 0.5; }

ExpansionResult jacobi_one_term(const JacobiParams& p, int ell, double theta) {
  if (ell < 1) throw std::domain_error("jacobi_one_term: ell must be >= 1");
  const auto w = window_for(ell);
  require_window(theta, w, "jacobi_one_term");
  const double ls = p.ell_shift(ell);
  const double env = envelope_m(p, theta) / std::sqrt(ls);
  return {env * std::cos(phase_omega(p.alpha, ls * theta)), std::abs(env), -1.0, w};
}

ExpansionResult jacobi_two_term(const JacobiParams& p, int ell, double theta) {
  if (ell < 1) throw std::domain_error("jacobi_two_term: ell must be >= 1");
  if (!(p.alpha > -0.5) || !(p.beta > -0.5) || !(p.alpha - p.beta > -4.0)) {
    throw std::domain_error("jacobi_two_term: requires alpha, beta > -1/2 and alpha - beta > -4");
  }
  const auto w = window_for(ell);
  require_window(theta, w, "jacobi_two_term");
  const double ls = p.ell_shift(ell);
  const double env = envelope_m(p, theta) / std::sqrt(ls);
  const double f1 = f2_coefficient(p, theta) * std::cos(phase_omega(p.alpha + 1, ls * theta)) -
                    p.alpha * p.beta / 2 * std::cos(phase_omega(p.alpha, ls * theta));
  const double bracket = std::cos(phase_omega(p.alpha, ls * theta)) + f1 / ls;
  return {env * bracket, std::abs(env), u_hat(p.alpha), w};
}

ExpansionResult dirichlet_one_term(const JacobiParams& p, int L, double theta) {
  return dirichlet_one_term(p, L, theta,
                            theta <= kPi / 2 ? KernelBranch::from_zero : KernelBranch::from_pi);
}

ExpansionResult dirichlet_one_term(const JacobiParams& p, int L, double theta, KernelBranch branch) {
  if (L < 1) throw std::domain_error("dirichlet_one_term: L must be >= 1");
  const auto w = window_for(L);
  require_window(theta, w, "dirichlet_one_term");
  const double a = p.alpha, b = p.beta;
  const double Ls = p.degree_shift(L);
  const double amp = std::pow(Ls, a + 0.5) / (std::exp2(a + b + 1.0) * std::tgamma(a + 1.0));
  if (branch == KernelBranch::from_zero) {
    const double env = amp * envelope_m({a + 1, b}, theta);
    return {env * std::cos(phase_omega(a + 1, Ls * theta)), std::abs(env), -1.0, {w.lo, kPi / 2}};
  }
  const double tp = kPi - theta;
  const double env = amp * envelope_m({b, a + 1}, tp);
  const double sign = (L % 2 == 0) ? 1.0 : -1.0;
  return {sign * env * std::cos(phase_omega(b, Ls * tp)), std::abs(env), -1.0, {kPi / 2, w.hi}};
}

ExpansionResult dirichlet_two_term(const JacobiParams& p, int L, double theta, KernelBranch branch) {
  if (L < 1) throw std::domain_error("dirichlet_two_term: L must be >= 1");
  const double a = p.alpha, b = p.beta;
  if (!(a > -0.5) || !(b > -0.5)) {
    throw std::domain_error("dirichlet_two_term: requires alpha, beta > -1/2");
  }
  const auto w = window_for(L);
  require_window(theta, w, "dirichlet_two_term");
  const double Ls = p.degree_shift(L);
  const double amp = std::pow(Ls, a + 0.5) / (std::exp2(a + b + 1.0) * std::tgamma(a + 1.0));

  if (branch == KernelBranch::from_zero) {
    if (!(a - b > -5.0)) throw std::domain_error("dirichlet_two_term: branch from_zero needs alpha - beta > -5");
    const double f3 = f2_coefficient({a + 1, b}, theta) * std::cos(phase_omega(a + 2, Ls * theta));
    const double env = amp * envelope_m({a + 1, b}, theta);
    const double bracket = std::cos(phase_omega(a + 1, Ls * theta)) + f3 / Ls;
    return {env * bracket, std::abs(env), u_hat(a + 1), w};
  }

  if (!(b - a > -3.0)) throw std::domain_error("dirichlet_two_term: branch from_pi needs beta - alpha > -3");
  const double tp = kPi - theta;
  const double f4 = f2_coefficient({b, a + 1}, tp) * std::cos(phase_omega(b + 1, Ls * tp));
  const double env = amp * envelope_m({b, a + 1}, tp);
  const double sign = (L % 2 == 0) ? 1.0 : -1.0;
  const double bracket = std::cos(phase_omega(b, Ls * tp)) + f4 / Ls;
  return {sign * env * bracket, std::abs(env), u_hat(b), w};
}

LambdaTable lambda_tables(int kappa, int s) {
  if (kappa < 0 || s < 1) throw std::domain_error("lambda_tables: need kappa >= 0, s >= 1");
  LambdaTable out;
  out.kappa = kappa;
  out.s = s;
  out.lambda.resize(static_cast<size_t>(s));
  out.lambda_bar.resize(static_cast<size_t>(s) + 1);
  for (int nu = 0; nu <= s - 1; ++nu) {
    long long acc = 0;
    for (int j = nu + 1; j <= s; ++j) {
      const long long c = static_cast<long long>(detail::binomial(s, j));
      acc += (j % 2 == 0 ? c : -c) * ipow(j - nu, kappa + 1);
    }
    out.lambda[static_cast<size_t>(nu)] = acc;
  }
  for (int nu = 0; nu <= s; ++nu) {
    long long acc = 0;
    for (int j = 0; j <= nu; ++j) {
      const long long c = static_cast<long long>(detail::binomial(s, j));
      acc += (j % 2 == 0 ? c : -c) * ipow(j - nu - 1, kappa + 1);
    }
    out.lambda_bar[static_cast<size_t>(nu)] = acc;
  }
  return out;
}

ExpansionResult filtered_kernel_asymp(const JacobiParams& p, const Filter& f, int L, double theta) {
  if (L < 1) throw std::domain_error("filtered_kernel_asymp: L must be >= 1");
  const auto w = window_for(L);
  require_window(theta, w, "filtered_kernel_asymp");

  const double a = p.alpha, b = p.beta;
  const int kappa = f.kappa;
  const int k = kappa + 3;
  const auto tab = lambda_tables(kappa, k);

  double g1 = 0, g2 = 0, g3 = 0, g4 = 0;
  for (int i = 0; i <= kappa + 2; ++i) {
    const double ci = std::cos(i * theta), si = std::sin(i * theta);
    g1 += tab.lambda[static_cast<size_t>(i)] * ci;
    g2 += tab.lambda[static_cast<size_t>(i)] * si;
    g3 += tab.lambda_bar[static_cast<size_t>(i)] * ci;
    g4 += tab.lambda_bar[static_cast<size_t>(i)] * si;
  }
  const double edge2 = std::exp2(a + 0.5) * f.d2;
  g1 *= f.d1;
  g2 *= f.d1;
  g3 *= edge2;
  g4 *= edge2;

  const double c1 = std::pow(std::sin(theta / 2), -a - k - 0.5) * std::pow(std::cos(theta / 2), -b - 0.5) /
                    (std::exp2(a + b + 1.0) * std::sqrt(kPi) * std::tgamma(a + 1.0));
  const double Ls = p.degree_shift(L);
  const double Ls2 = p.degree_shift(2.0 * L);
  const double xi1 = (a + k) * kPi / 2 + kPi / 4;
  const double phi = (Ls + (kappa + 2) / 2.0) * theta - xi1;
  const double phib = (Ls2 - 1.0 + (kappa + 2) / 2.0) * theta - xi1;

  const double pref = std::pow(static_cast<double>(L), -(kappa - a + 0.5)) * c1 /
                      (std::exp2(static_cast<double>(kappa + 2)) * factorial(kappa + 1));
  const double bracket =
      g1 * std::cos(phi) + g2 * std::sin(phi) + g3 * std::cos(phib) + g4 * std::sin(phib);
  return {pref * bracket, std::abs(pref), -1.0, w};
}

double endpoint_bounds(const JacobiParams& p, int L, double theta) {
  if (L < 1) throw std::domain_error("endpoint_bounds: L must be >= 1");
  const double lim = kOrderWindow / L;
  const bool near_zero = theta >= 0.0 && theta <= lim;
  const bool near_pi = theta >= kPi - lim && theta <= kPi;
  if (!near_zero && !near_pi) {
    throw std::domain_error("endpoint_bounds: theta must lie within c/L of 0 or pi");
  }
  return dirichlet_closed(p, L, std::cos(theta));
}

}  // namespace rieloc
