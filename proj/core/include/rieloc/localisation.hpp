#pragma once

#include <functional>
#include <vector>

#include "rieloc/kernels.hpp"
#include "rieloc/special_functions.hpp"

namespace rieloc {

/// Gauss-Legendre nodes and weights mapped to [a, b].
struct QuadratureRule {
  double a = -1.0;
  double b = 1.0;
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

/// n-point rule; exact for polynomials of degree <= 2n-1. Nodes are found by
/// Newton iteration on P_n; a stalled iteration throws std::runtime_error.
/// Canonical [-1,1] rules are cached, so repeated calls are cheap.
QuadratureRule gauss_nodes(int n, double a, double b);

/// Zonal function f(y) = F(y . p) given by its profile F on [-1, 1].
/// The constant function 1 is the distinguished instance used by all of
/// the decay experiments; it is flagged so integrators can skip the
/// translation quadrature (the translation of a constant is exact).
struct ZonalFunction {
  std::function<double(double)> profile;
  bool constant_one = false;

  static ZonalFunction one();
  static ZonalFunction of(std::function<double(double)> profile);
  double operator()(double u) const { return constant_one ? 1.0 : profile(u); }
};

/// Spherical cap of geodesic radius delta about the evaluation point.
/// Upper-bound statements need 0 < delta < pi; the lower-bound experiment
/// additionally needs delta < pi/2, which its runner enforces.
struct CapConfig {
  double delta;
  SphereDim dim;
  CapConfig(double delta, SphereDim dim);
};

/// Translation operator for a zonal function: the mean of F(y . p) over the
/// circle at geodesic distance theta from a point x at colatitude psi.
/// For d >= 2 this collapses to the 1-D integral
///   (|S^{d-2}| / |S^{d-1}|) int_0^pi F(cos psi cos theta + sin psi sin theta cos phi)
///                                  (sin phi)^{d-2} dphi.
double translate_zonal(SphereDim d, const ZonalFunction& F, double theta, double psi);

/// Local convolution: the kernel integrated against the translated zonal
/// function over the complement of the cap of radius delta,
///   (|S^{d-1}| / |S^d|) int_delta^pi v(cos theta) T_theta(f) (sin theta)^{d-1} dtheta.
/// delta = 0 reduces to the full convolution. The quadrature doubles its
/// node count until two successive values agree to 1e-9 (relative), else
/// throws std::runtime_error.
double local_convolution(SphereDim d, const KernelSpec& kernel, const ZonalFunction& F, double delta,
                         double psi);

/// Circle analogue at theta = 0 for an even profile f:
///   (1/pi) int_delta^pi [sin((L+1/2) phi) / sin(phi/2)] f(phi) dphi.
double circle_local_convolution(int L, double delta, const std::function<double(double)>& profile);

/// max over a uniform colatitude grid of grid_n points in [0, pi] of
/// |local_convolution|; a single evaluation when F is the constant 1.
double sup_norm_over_colatitude(SphereDim d, const KernelSpec& kernel, const ZonalFunction& F,
                                double delta, int grid_n);

/// Integrate f over [a, b], doubling the node count from n0 until two
/// successive values agree to rel_tol (relative to the value, with a
/// rounding-level floor from the L1 mass). Throws on non-convergence.
double integrate_doubling(const std::function<double(double)>& f, double a, double b, int n0,
                          double rel_tol = 1e-9);

}  // namespace rieloc
