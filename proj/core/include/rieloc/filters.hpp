#pragma once

#include <vector>

namespace rieloc {

/// A C^kappa filter: g = 1 on [0,1], g = 0 on [2,inf), and a polynomial
/// transition on [1,2] whose derivatives of order 1..kappa vanish at both
/// joints. d1 and d2 record the first non-vanishing one-sided derivatives
/// g^{(kappa+1)}(1+) and g^{(kappa+1)}(2-); d1 != 0 by construction.
struct Filter {
  int kappa = 0;
  /// Coefficients c_j of the transition piece p(1+u) = sum c_j u^j, u in [0,1].
  std::vector<double> transition;
  double d1 = 0.0;
  double d2 = 0.0;
  double plateau = 1.0;

  double operator()(double t) const;
};

/// The minimal-degree polynomial filter of smoothness class kappa:
/// the transition on [1,2] is the degree-(2 kappa + 1) Hermite interpolant
/// with p(1) = 1, p(2) = 0 and vanishing derivatives 1..kappa at both ends.
/// All coefficients and the edge derivatives d1, d2 are exact integers.
Filter hermite_filter(int kappa);

/// g(t) for t >= 0.
double filter_eval(const Filter& f, double t);

/// s-th order forward difference Z_s(ell) of g(./L) at ell, with
/// Delta u_ell = u_ell - u_{ell+1}:
///   Z_s(ell) = sum_j binom(s,j) (-1)^j g((ell+j)/L).
double forward_diff(const Filter& f, int L, int s, int ell);

namespace detail {
/// binom(n, k) as an exact double for small integer arguments.
double binomial(int n, int k);
}

}  // namespace rieloc
