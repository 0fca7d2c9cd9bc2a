#pragma once

#include <vector>

namespace rieloc {

/// Jacobi weight exponents (alpha, beta), both > -1.
///
/// Values within 1e-6 of -1 are rejected at construction: the
/// normalisation constants blow up there and none of the asymptotic
/// machinery is valid below -1/2 anyway.
struct JacobiParams {
  double alpha;
  double beta;

  JacobiParams(double alpha, double beta);

  /// Shifted degree for a single polynomial: ell + (alpha+beta+1)/2.
  double ell_shift(double ell) const { return ell + (alpha + beta + 1) / 2; }
  /// Shifted degree for a kernel of order L: L + (alpha+beta+2)/2.
  double degree_shift(double L) const { return L + (alpha + beta + 2) / 2; }
};

/// Dimension d of the unit sphere S^d. d >= 2 for all kernel work;
/// d = 1 is permitted so the circle experiment can share the type.
struct SphereDim {
  int d;
  explicit SphereDim(int d);

  /// The equivalent Jacobi parameterisation alpha = beta = (d-2)/2.
  JacobiParams jacobi() const { return {(d - 2) / 2.0, (d - 2) / 2.0}; }
};

/// Gamma(x+delta) / Gamma(x) for x > 0, x + delta > 0.
///
/// Computed from a reorganised log-space difference (log1p form plus a
/// Stirling tail after shifting both arguments above 20) so the result
/// keeps ~1e-15 relative accuracy even when x is around 1e6, where a
/// naive lgamma(x+delta) - lgamma(x) subtraction loses seven digits.
double gamma_ratio_shifted(double x, double delta);

/// Gamma(L+a) / Gamma(L+b).
/// Throws std::domain_error unless L+a > 0 and L+b > 0.
double gamma_ratio(double a, double b, long long L);

/// P_ell^{(alpha,beta)}(t) for all ell = 0..ell_max in one recurrence pass.
/// Requires |t| <= 1.
std::vector<double> jacobi_batch(const JacobiParams& p, int ell_max, double t);

/// P_ell^{(alpha,beta)}(t), |t| <= 1.
double jacobi_eval(const JacobiParams& p, int ell, double t);

/// P_ell^{(alpha,beta)}(1) = binom(ell+alpha, ell).
double jacobi_at_one(const JacobiParams& p, int ell);

/// Orthogonality normalisation h_ell:
/// integral of P_ell^2 against the weight (1-t)^alpha (1+t)^beta.
double norm_const(const JacobiParams& p, int ell);

/// Z(d, ell), the dimension of the space of spherical harmonics of
/// exact degree ell on S^d. Requires d >= 2; Z(d, 0) = 1.
double dim_harmonic(SphereDim dim, int ell);

/// Surface area |S^d| = 2 pi^{(d+1)/2} / Gamma((d+1)/2), d >= 1.
double sphere_area(SphereDim dim);

namespace detail {
/// |S^d| for d >= 0 (|S^0| = 2, the two-point sphere).
double unit_sphere_area(int d);

/// P_ell(t) alone via a rolling recurrence, no allocation. Hot path for
/// closed-form kernel evaluation over large node sets.
double jacobi_terminal(const JacobiParams& p, int ell, double t);

/// Batch recurrence into caller-owned storage (out.size() == ell_max + 1).
void jacobi_batch_into(const JacobiParams& p, int ell_max, double t, double* out);

/// Compensated accumulator. Direct kernel sums reach L^{2 alpha + 2}
/// near t = 1; plain summation would eat into the 1e-10 identity
/// budget at L ~ 2000.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};
}  // namespace detail

}  // namespace rieloc
