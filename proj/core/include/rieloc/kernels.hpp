#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rieloc/filters.hpp"
#include "rieloc/special_functions.hpp"

namespace rieloc {

enum class KernelKind { fourier, filtered };

/// Which kernel to evaluate: Fourier (Dirichlet) or filtered, under either a
/// Jacobi or a sphere parameterisation. Filtered kernels truncate at degree
/// 2L-1 exactly, the support of the filter.
struct KernelSpec {
  std::variant<JacobiParams, SphereDim> params;
  int degree = 0;
  KernelKind kind = KernelKind::fourier;
  std::optional<Filter> filter;

  static KernelSpec fourier(JacobiParams p, int L) { return {p, L, KernelKind::fourier, {}}; }
  static KernelSpec fourier(SphereDim d, int L) { return {d, L, KernelKind::fourier, {}}; }
  static KernelSpec filtered(JacobiParams p, Filter f, int L) { return {p, L, KernelKind::filtered, std::move(f)}; }
  static KernelSpec filtered(SphereDim d, Filter f, int L) { return {d, L, KernelKind::filtered, std::move(f)}; }
};

/// Kernel coefficients w_ell = P_ell(1) / h_ell for ell = 0..ell_max, so that
/// v_L(1, t) = sum w_ell P_ell(t).
std::vector<double> dirichlet_weights(const JacobiParams& p, int ell_max);

/// v_L^{(alpha,beta)}(1, t) as the direct sum over degrees 0..L.
double dirichlet_direct(const JacobiParams& p, int L, double t);

/// v_L^{(alpha,beta)}(1, t) via the closed form
///   2^{-(alpha+beta+1)} G(L+alpha+beta+2) / (G(alpha+1) G(L+beta+1)) P_L^{(alpha+1,beta)}(t),
/// O(L) work instead of the O(L^2) naive sum.
double dirichlet_closed(const JacobiParams& p, int L, double t);

/// Sphere Fourier kernel v_L^{(d)}(t) = (|S^d| / |S^{d-1}|) v_L^{(a,a)}(1,t), a = (d-2)/2.
double sphere_dirichlet(SphereDim dim, int L, double t);

/// Filtered kernel v_{L,g}^{(alpha,beta)}(1, t) = sum_{ell=0}^{2L-1} g(ell/L) w_ell P_ell(t).
double filtered_direct(const JacobiParams& p, const Filter& f, int L, double t);

/// Sphere filtered kernel, the same constant multiple as sphere_dirichlet.
double sphere_filtered(SphereDim dim, const Filter& f, int L, double t);

/// |S^d| / |S^{d-1}|, the constant converting Jacobi kernels to sphere kernels.
double sphere_kernel_constant(SphereDim dim);

/// Summation-by-parts coefficients A_k(L, ell). Supported on
/// [L-k+1, 2L-1]; zero outside, exactly.
struct SbpCoefficients {
  int k = 1;
  int ell_min = 0;  ///< max(0, L-k+1)
  int ell_max = 0;  ///< 2L-1
  std::vector<double> values;

  double at(int ell) const {
    if (ell < ell_min || ell > ell_max) return 0.0;
    return values[static_cast<size_t>(ell - ell_min)];
  }
};

/// A_k(L, .) from the recursion
///   A_1(L, ell) = g(ell/L) - g((ell+1)/L),
///   A_k(L, ell) = A_{k-1}(L, ell) / (2 ell + alpha + beta + k)
///               - A_{k-1}(L, ell+1) / (2 (ell+1) + alpha + beta + k).
SbpCoefficients sbp_coefficients(const JacobiParams& p, const Filter& f, int L, int k);

/// The filtered kernel rewritten by k-fold summation by parts:
///   2^{-(a+b+1)} / G(a+1) * sum_ell A_k(L,ell) G(ell+a+k+b+1)/G(ell+b+1) P_ell^{(a+k,b)}(t).
/// Must equal filtered_direct for every admissible k.
/// Throws std::invalid_argument if k > kappa + 3 (smoothness unverified beyond).
double filtered_sbp(const JacobiParams& p, const Filter& f, int L, int k, double t);

/// Evaluate the kernel described by spec at a single point.
double kernel_value(const KernelSpec& spec, double t);

/// Evaluate at many points; coefficient vectors are computed once.
/// When abs_scale is non-null it receives, per point, the sum of |term|
/// over the kernel series: the conditioning scale that bounds the rounding
/// noise of the evaluated value (the value itself can be much smaller).
std::vector<double> kernel_values(const KernelSpec& spec, std::span<const double> t,
                                  std::vector<double>* abs_scale = nullptr);

}  // namespace rieloc
