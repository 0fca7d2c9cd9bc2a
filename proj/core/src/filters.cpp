#include "rieloc/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace rieloc {

namespace detail {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return std::round(r);
}

}  // namespace detail

double Filter::operator()(double t) const { return filter_eval(*this, t); }

Filter hermite_filter(int kappa) {
  if (kappa < 0) throw std::domain_error("hermite_filter: kappa must be >= 0");

  // p(1+u) = 1 - S(u), where S is the order-kappa smoothstep
  //   S(u) = sum_{j=0}^{kappa} (-1)^j binom(kappa+j, j) binom(2 kappa+1, kappa-j) u^{kappa+1+j}.
  Filter f;
  f.kappa = kappa;
  f.transition.assign(static_cast<size_t>(2 * kappa) + 2, 0.0);
  f.transition[0] = 1.0;
  for (int j = 0; j <= kappa; ++j) {
    const double c = detail::binomial(kappa + j, j) * detail::binomial(2 * kappa + 1, kappa - j);
    f.transition[static_cast<size_t>(kappa + 1 + j)] = (j % 2 == 0 ? -c : c);
  }

  // d1 = p^{(kappa+1)}(1+) = (kappa+1)! c_{kappa+1}
  double fact = 1.0;
  for (int j = 2; j <= kappa + 1; ++j) fact *= j;
  f.d1 = fact * f.transition[static_cast<size_t>(kappa) + 1];

  // d2 = p^{(kappa+1)}(2-) = sum_{j >= kappa+1} c_j j! / (j-kappa-1)!
  double d2 = 0.0;
  for (int j = kappa + 1; j <= 2 * kappa + 1; ++j) {
    double fall = 1.0;
    for (int i = 0; i <= kappa; ++i) fall *= (j - i);
    d2 += f.transition[static_cast<size_t>(j)] * fall;
  }
  f.d2 = d2;
  return f;
}

double filter_eval(const Filter& f, double t) {
  if (t < 0.0) throw std::domain_error("filter_eval: t must be >= 0");
  if (t <= 1.0) return f.plateau;
  if (t >= 2.0) return 0.0;
  const double u = t - 1.0;
  double acc = 0.0;
  for (size_t j = f.transition.size(); j-- > 0;) acc = acc * u + f.transition[j];
  return acc;
}

double forward_diff(const Filter& f, int L, int s, int ell) {
  if (L < 1) throw std::domain_error("forward_diff: L must be >= 1");
  if (s < 1) throw std::domain_error("forward_diff: s must be >= 1");
  if (ell < 0) throw std::domain_error("forward_diff: ell must be >= 0");
  double acc = 0.0;
  double sign = 1.0;
  for (int j = 0; j <= s; ++j) {
    acc += sign * detail::binomial(s, j) * filter_eval(f, static_cast<double>(ell + j) / L);
    sign = -sign;
  }
  return acc;
}

}  // namespace rieloc
