#pragma once

#include <vector>

#include "rieloc/filters.hpp"
#include "rieloc/special_functions.hpp"

namespace rieloc {

/// Validity window constant: asymptotic formulas are served for
/// theta in [c_win/L, pi - c_win/L]. The underlying estimates hold for
/// "some constant c"; 10 keeps pre-asymptotic wobble below test
/// tolerances for L >= 64.
inline constexpr double kOrderWindow = 10.0;

struct ThetaInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double theta) const { return theta >= lo && theta <= hi; }
};

/// Value of an asymptotic main term together with its amplitude factor and
/// the predicted order (exponent of L) of the envelope-relative error.
struct ExpansionResult {
  double value = 0.0;
  double envelope = 0.0;
  double predicted_error_order = 0.0;
  ThetaInterval valid_theta_range;
};

/// Envelope m_{alpha,beta}(theta) = pi^{-1/2} (sin t/2)^{-a-1/2} (cos t/2)^{-b-1/2}.
/// Throws std::domain_error at theta <= 0 or >= pi.
double envelope_m(const JacobiParams& p, double theta);

/// Phase omega_alpha(z) = z - alpha pi/2 - pi/4.
double phase_omega(double alpha, double z);

/// F^{(2)}_{alpha,beta}(theta) = (b^2-a^2)/4 tan(t/2) - (4a^2-1)/8 cot t.
/// Singular at the interval ends; throws outside (0, pi).
double f2_coefficient(const JacobiParams& p, double theta);

/// u_hat(alpha) = -2 + frac(alpha + 1/2).
double u_hat(double alpha);
/// nu_hat(alpha) = alpha + 5/2 for alpha < 1/2, alpha + 1/2 otherwise.
double nu_hat(double alpha);

/// One-term expansion of P_ell^{(a,b)}(cos theta):
///   ellshift^{-1/2} m_{a,b}(theta) cos omega_a(ellshift theta).
ExpansionResult jacobi_one_term(const JacobiParams& p, int ell, double theta);

/// Two-term expansion: adds ellshift^{-1} F^{(1)} with
///   F^{(1)} = F^{(2)}_{a,b}(theta) cos omega_{a+1}(ellshift theta)
///           - (a b / 2) cos omega_a(ellshift theta).
/// Requires alpha, beta > -1/2 and alpha - beta > -4.
ExpansionResult jacobi_two_term(const JacobiParams& p, int ell, double theta);

/// Which side of the kernel expansion to use: measured from theta = 0
/// or reflected through theta = pi (where the kernel alternates in L).
enum class KernelBranch { from_zero, from_pi };

/// One-term expansion of v_L^{(a,b)}(1, cos theta). Selects the branch by
/// theta <= pi/2 unless forced.
ExpansionResult dirichlet_one_term(const JacobiParams& p, int L, double theta);
ExpansionResult dirichlet_one_term(const JacobiParams& p, int L, double theta, KernelBranch branch);

/// Two-term kernel expansion. Branch from_zero requires alpha - beta > -5,
/// branch from_pi requires beta - alpha > -3 (both need alpha, beta > -1/2).
ExpansionResult dirichlet_two_term(const JacobiParams& p, int L, double theta, KernelBranch branch);

/// Exact integer tables
///   lambda_{nu,s}    = sum_{j=nu+1}^{s} binom(s,j) (-1)^j (j-nu)^{kappa+1},   0 <= nu <= s-1,
///   lambdabar_{nu,s} = sum_{j=0}^{nu}   binom(s,j) (-1)^j (j-nu-1)^{kappa+1}, 0 <= nu <= s.
struct LambdaTable {
  int kappa = 0;
  int s = 1;
  std::vector<long long> lambda;
  std::vector<long long> lambda_bar;
};
LambdaTable lambda_tables(int kappa, int s);

/// Asymptotic expansion of the filtered kernel v_{L,g}^{(a,b)}(1, cos theta):
///   L^{-(kappa-a+1/2)} C1(theta) / (2^{kappa+2} (kappa+1)!)
///     * [g1 cos phi_L + g2 sin phi_L + g3 cos phibar_L + g4 sin phibar_L]
/// with C1, g_i, phi_L, phibar_L built from the lambda tables and the filter
/// edge derivatives. The envelope-relative error is (sin theta)^{-1} O(1/L).
ExpansionResult filtered_kernel_asymp(const JacobiParams& p, const Filter& f, int L, double theta);

/// Exact kernel value inside the endpoint windows theta in [0, c_win/L] or
/// [pi - c_win/L, pi], where the oscillatory expansions do not apply; the
/// growth exponents (2 alpha + 2 at 0, alpha + beta + 1 at pi) are asserted
/// by the experiments layer.
double endpoint_bounds(const JacobiParams& p, int L, double theta);

}  // namespace rieloc
