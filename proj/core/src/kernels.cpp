#include "rieloc/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace rieloc {

namespace {

using detail::KahanSum;

double weight_prefactor(const JacobiParams& p) {
  return 1.0 / (std::exp2(p.alpha + p.beta + 1.0) * std::tgamma(p.alpha + 1.0));
}

// Recurrence P_l = (A_l t + B_l) P_{l-1} + C_l P_{l-2} with the divisions
// folded into the coefficients; built once per (params, degree) and shared
// across all evaluation points of a quadrature pass.
struct RecurrenceCoeffs {
  double a, b;
  std::vector<double> A, B, C;

  RecurrenceCoeffs(const JacobiParams& p, int ell_max) : a(p.alpha), b(p.beta) {
    const size_t n = ell_max >= 2 ? static_cast<size_t>(ell_max) + 1 : 0;
    A.resize(n);
    B.resize(n);
    C.resize(n);
    for (int l = 2; l <= ell_max; ++l) {
      const double den = 2.0 * l * (l + a + b) * (2 * l + a + b - 2);
      A[static_cast<size_t>(l)] = (2 * l + a + b - 1) * (2 * l + a + b) * (2 * l + a + b - 2) / den;
      B[static_cast<size_t>(l)] = (2 * l + a + b - 1) * (a * a - b * b) / den;
      C[static_cast<size_t>(l)] = -2.0 * (l + a - 1) * (l + b - 1) * (2 * l + a + b) / den;
    }
  }

  double first(double t) const { return (a + 1) + (a + b + 2) * (t - 1) / 2; }

  double terminal(int ell, double t) const {
    if (ell == 0) return 1.0;
    double prev = 1.0, cur = first(t);
    for (int l = 2; l <= ell; ++l) {
      const double next =
          (A[static_cast<size_t>(l)] * t + B[static_cast<size_t>(l)]) * cur + C[static_cast<size_t>(l)] * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }

  void batch_into(int ell_max, double t, double* out) const {
    out[0] = 1.0;
    if (ell_max == 0) return;
    out[1] = first(t);
    for (int l = 2; l <= ell_max; ++l) {
      out[l] = (A[static_cast<size_t>(l)] * t + B[static_cast<size_t>(l)]) * out[l - 1] +
               C[static_cast<size_t>(l)] * out[l - 2];
    }
  }
};

// Direct kernel sum with per-degree damping (1 for Fourier, g(ell/L) for filtered).
double weighted_sum(std::span<const double> w, std::span<const double> P) {
  KahanSum s;
  for (size_t i = 0; i < w.size(); ++i) s.add(w[i] * P[i]);
  return s.value();
}

}  // namespace

std::vector<double> dirichlet_weights(const JacobiParams& p, int ell_max) {
  const double a = p.alpha, b = p.beta;
  const double pref = weight_prefactor(p);
  std::vector<double> w(static_cast<size_t>(ell_max) + 1);
  for (int ell = 0; ell <= ell_max; ++ell) {
    const double l = static_cast<double>(ell);
    // w_ell = (2l+a+b+1) G(l+a+b+1) / (2^{a+b+1} G(a+1) G(l+b+1))
    w[static_cast<size_t>(ell)] = pref * (2 * l + a + b + 1) * gamma_ratio_shifted(l + b + 1.0, a);
  }
  return w;
}

double dirichlet_direct(const JacobiParams& p, int L, double t) {
  if (L < 0) throw std::domain_error("dirichlet_direct: L must be >= 0");
  const auto w = dirichlet_weights(p, L);
  const auto P = jacobi_batch(p, L, t);
  return weighted_sum(w, P);
}

double dirichlet_closed(const JacobiParams& p, int L, double t) {
  if (L < 0) throw std::domain_error("dirichlet_closed: L must be >= 0");
  const double l = static_cast<double>(L);
  const double ratio = gamma_ratio_shifted(l + p.beta + 1.0, p.alpha + 1.0);
  return weight_prefactor(p) * ratio * detail::jacobi_terminal({p.alpha + 1.0, p.beta}, L, t);
}

double sphere_kernel_constant(SphereDim dim) {
  if (dim.d < 2) throw std::domain_error("sphere_kernel_constant: d must be >= 2");
  return detail::unit_sphere_area(dim.d) / detail::unit_sphere_area(dim.d - 1);
}

double sphere_dirichlet(SphereDim dim, int L, double t) {
  return sphere_kernel_constant(dim) * dirichlet_closed(dim.jacobi(), L, t);
}

double filtered_direct(const JacobiParams& p, const Filter& f, int L, double t) {
  if (L < 1) throw std::domain_error("filtered_direct: L must be >= 1");
  const int m = 2 * L - 1;
  auto w = dirichlet_weights(p, m);
  for (int ell = 0; ell <= m; ++ell) {
    w[static_cast<size_t>(ell)] *= filter_eval(f, static_cast<double>(ell) / L);
  }
  const auto P = jacobi_batch(p, m, t);
  return weighted_sum(w, P);
}

double sphere_filtered(SphereDim dim, const Filter& f, int L, double t) {
  return sphere_kernel_constant(dim) * filtered_direct(dim.jacobi(), f, L, t);
}

SbpCoefficients sbp_coefficients(const JacobiParams& p, const Filter& f, int L, int k) {
  if (L < 1) throw std::domain_error("sbp_coefficients: L must be >= 1");
  if (k < 1) throw std::domain_error("sbp_coefficients: k must be >= 1");

  const double r = p.alpha + p.beta;
  // A_1 on [0, 2L-1+k]; entries past 2L-1 are exact zeros and feed the recursion.
  const int pad = 2 * L - 1 + k;
  std::vector<double> acc(static_cast<size_t>(pad) + 2, 0.0);
  for (int ell = 0; ell <= pad; ++ell) {
    acc[static_cast<size_t>(ell)] =
        filter_eval(f, static_cast<double>(ell) / L) - filter_eval(f, static_cast<double>(ell + 1) / L);
  }
  for (int kk = 2; kk <= k; ++kk) {
    for (int ell = 0; ell <= pad - kk; ++ell) {
      acc[static_cast<size_t>(ell)] = acc[static_cast<size_t>(ell)] / (2.0 * ell + r + kk) -
                                      acc[static_cast<size_t>(ell) + 1] / (2.0 * (ell + 1) + r + kk);
    }
  }

  SbpCoefficients out;
  out.k = k;
  out.ell_min = std::max(0, L - k + 1);
  out.ell_max = 2 * L - 1;
  out.values.assign(acc.begin() + out.ell_min, acc.begin() + out.ell_max + 1);
  return out;
}

double filtered_sbp(const JacobiParams& p, const Filter& f, int L, int k, double t) {
  if (k < 1) throw std::domain_error("filtered_sbp: k must be >= 1");
  if (k > f.kappa + 3) {
    throw std::invalid_argument("filtered_sbp: k must be <= kappa + 3 for the summation-by-parts ladder");
  }
  const auto A = sbp_coefficients(p, f, L, k);
  const JacobiParams raised{p.alpha + k, p.beta};
  const auto P = jacobi_batch(raised, A.ell_max, t);

  KahanSum s;
  for (int ell = A.ell_min; ell <= A.ell_max; ++ell) {
    const double l = static_cast<double>(ell);
    // G(ell+a+k+b+1) / G(ell+b+1)
    const double ratio = gamma_ratio_shifted(l + p.beta + 1.0, p.alpha + k);
    s.add(A.at(ell) * ratio * P[static_cast<size_t>(ell)]);
  }
  return weight_prefactor(p) * s.value();
}

double kernel_value(const KernelSpec& spec, double t) {
  const double v[1] = {t};
  return kernel_values(spec, std::span<const double>(v, 1))[0];
}

std::vector<double> kernel_values(const KernelSpec& spec, std::span<const double> t,
                                  std::vector<double>* abs_scale) {
  const bool on_sphere = std::holds_alternative<SphereDim>(spec.params);
  const JacobiParams p =
      on_sphere ? std::get<SphereDim>(spec.params).jacobi() : std::get<JacobiParams>(spec.params);
  const double scale = on_sphere ? sphere_kernel_constant(std::get<SphereDim>(spec.params)) : 1.0;

  std::vector<double> out(t.size());
  if (abs_scale) abs_scale->assign(t.size(), 0.0);

  if (spec.kind == KernelKind::fourier) {
    const int L = spec.degree;
    const double amp =
        scale * weight_prefactor(p) * gamma_ratio_shifted(L + p.beta + 1.0, p.alpha + 1.0);
    const RecurrenceCoeffs rec{{p.alpha + 1.0, p.beta}, L};
    for (size_t i = 0; i < t.size(); ++i) {
      if (std::abs(t[i]) > 1.0) throw std::domain_error("kernel_values: |t| must be <= 1");
      out[i] = amp * rec.terminal(L, t[i]);
      if (abs_scale) (*abs_scale)[i] = std::abs(out[i]);
    }
    return out;
  }

  if (!spec.filter) throw std::invalid_argument("kernel_values: filtered spec carries no filter");
  const int L = spec.degree;
  const int m = 2 * L - 1;
  auto w = dirichlet_weights(p, m);
  for (int ell = 0; ell <= m; ++ell) {
    w[static_cast<size_t>(ell)] *= filter_eval(*spec.filter, static_cast<double>(ell) / L);
  }
  const RecurrenceCoeffs rec{p, m};
  std::vector<double> P(static_cast<size_t>(m) + 1);
  for (size_t i = 0; i < t.size(); ++i) {
    if (std::abs(t[i]) > 1.0) throw std::domain_error("kernel_values: |t| must be <= 1");
    rec.batch_into(m, t[i], P.data());
    KahanSum s;
    double mass = 0.0;
    for (size_t j = 0; j < w.size(); ++j) {
      const double term = w[j] * P[j];
      s.add(term);
      mass += std::abs(term);
    }
    out[i] = scale * s.value();
    if (abs_scale) (*abs_scale)[i] = scale * mass;
  }
  return out;
}

}  // namespace rieloc
