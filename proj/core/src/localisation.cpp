#include "rieloc/localisation.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace rieloc {

namespace {

constexpr double kPi = std::numbers::pi;
using detail::KahanSum;

std::shared_ptr<const QuadratureRule> canonical_rule(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }

  auto rule = std::make_shared<QuadratureRule>();
  rule->a = -1.0;
  rule->b = 1.0;
  rule->nodes.assign(static_cast<size_t>(n), 0.0);
  rule->weights.assign(static_cast<size_t>(n), 0.0);

  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-flavoured initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * (1.0 + std::abs(x))) {
        converged = true;
        if (it < 99) {  // one polishing step
          double q0 = 1.0, q1 = 0.0;
          for (int j = 0; j < n; ++j) {
            const double q2 = q1;
            q1 = q0;
            q0 = ((2 * j + 1) * x * q1 - j * q2) / (j + 1);
          }
          pp = n * (x * q0 - q1) / (x * x - 1.0);
          x -= q0 / pp;
        }
        break;
      }
    }
    if (!converged) throw std::runtime_error("gauss_nodes: Newton iteration stalled");
    rule->nodes[static_cast<size_t>(i)] = -x;
    rule->nodes[static_cast<size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule->weights[static_cast<size_t>(i)] = w;
    rule->weights[static_cast<size_t>(n - 1 - i)] = w;
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, rule);
  return it->second;
}

// One quadrature pass; fills the signed sum and the weighted conditioning mass.
struct PassResult {
  double value = 0.0;
  double noise_mass = 0.0;
};

// The batch evaluator fills values and, optionally, a per-node conditioning
// scale (sum of |term| over any inner series); when absent, |value| is used.
struct BatchValues {
  std::vector<double> values;
  std::vector<double> scale;  // may be empty
};

template <typename BatchEval>
PassResult apply_rule(const QuadratureRule& r, BatchEval&& f_at_nodes) {
  const BatchValues fv = f_at_nodes(r.nodes);
  KahanSum s;
  double mass = 0.0;
  for (size_t i = 0; i < fv.values.size(); ++i) {
    s.add(r.weights[i] * fv.values[i]);
    const double sc = fv.scale.empty() ? std::abs(fv.values[i]) : fv.scale[i];
    mass += std::abs(r.weights[i]) * sc;
  }
  return {s.value(), mass};
}

// Doubling loop shared by all integrals in this module. Convergence means
// |I_{2n} - I_n| <= rel_tol * |I_{2n}|, floored at the rounding level of the
// evaluation itself: eps * noise_degree * (weighted conditioning mass).
// Rounding in a length-m recurrence grows linearly in m, so differences at
// that level carry no information and further refinement cannot help.
template <typename BatchEval>
double integrate_batched(BatchEval&& f_at_nodes, double a, double b, int n0, double rel_tol,
                         double noise_degree) {
  if (!(a < b)) {
    if (a == b) return 0.0;
    throw std::domain_error("integrate: requires a <= b");
  }
  const int max_refinements = 6;
  // Composite rule: ceil(n/64) panels of the cached 64-point rule. Assembly
  // is O(n); a single n-point rule would cost O(n^2) in node finding at the
  // degrees the kernel sweeps reach.
  auto mapped = [&](int n) {
    constexpr int panel_n = 64;
    // below one panel use a direct n-point rule, otherwise doubling n would
    // rebuild the identical composite and compare an integral with itself
    const int panels = n <= panel_n ? 1 : (n + panel_n - 1) / panel_n;
    const int pts = n <= panel_n ? n : panel_n;
    const auto base = canonical_rule(pts);
    QuadratureRule r;
    r.a = a;
    r.b = b;
    r.nodes.resize(static_cast<size_t>(panels) * pts);
    r.weights.resize(static_cast<size_t>(panels) * pts);
    const double width = (b - a) / panels;
    for (int pnl = 0; pnl < panels; ++pnl) {
      const double lo = a + pnl * width;
      const double mid = lo + width / 2, halfw = width / 2;
      for (int i = 0; i < pts; ++i) {
        r.nodes[static_cast<size_t>(pnl) * pts + i] = mid + halfw * base->nodes[static_cast<size_t>(i)];
        r.weights[static_cast<size_t>(pnl) * pts + i] = halfw * base->weights[static_cast<size_t>(i)];
      }
    }
    return apply_rule(r, f_at_nodes);
  };

  int n = n0;
  PassResult prev = mapped(n);
  for (int step = 0; step < max_refinements; ++step) {
    n *= 2;
    const PassResult cur = mapped(n);
    const double floor =
        std::numeric_limits<double>::epsilon() * std::max(16.0, noise_degree) * cur.noise_mass;
    if (std::abs(cur.value - prev.value) <= std::max(rel_tol * std::abs(cur.value), floor)) {
      return cur.value;
    }
    prev = cur;
  }
  throw std::runtime_error("integrate: doubling check failed to converge");
}

auto pointwise(const std::function<double(double)>& f) {
  return [f](const std::vector<double>& xs) {
    BatchValues out;
    out.values.resize(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) out.values[i] = f(xs[i]);
    return out;
  };
}

}  // namespace

QuadratureRule gauss_nodes(int n, double a, double b) {
  if (n < 1) throw std::domain_error("gauss_nodes: n must be >= 1");
  if (!(a < b)) throw std::domain_error("gauss_nodes: requires a < b");
  const auto base = canonical_rule(n);
  QuadratureRule r;
  r.a = a;
  r.b = b;
  const double mid = (a + b) / 2, halfw = (b - a) / 2;
  r.nodes.resize(base->nodes.size());
  r.weights.resize(base->weights.size());
  for (size_t i = 0; i < base->nodes.size(); ++i) {
    r.nodes[i] = mid + halfw * base->nodes[i];
    r.weights[i] = halfw * base->weights[i];
  }
  return r;
}

double integrate_doubling(const std::function<double(double)>& f, double a, double b, int n0,
                          double rel_tol) {
  return integrate_batched(pointwise(f), a, b, n0, rel_tol, 16.0);
}

ZonalFunction ZonalFunction::one() {
  ZonalFunction z;
  z.profile = [](double) { return 1.0; };
  z.constant_one = true;
  return z;
}

ZonalFunction ZonalFunction::of(std::function<double(double)> profile) {
  ZonalFunction z;
  z.profile = std::move(profile);
  return z;
}

CapConfig::CapConfig(double delta_, SphereDim dim_) : delta(delta_), dim(dim_) {
  if (!(delta >= 0.0) || !(delta < kPi)) {
    throw std::domain_error("CapConfig: delta must lie in [0, pi)");
  }
}

double translate_zonal(SphereDim d, const ZonalFunction& F, double theta, double psi) {
  if (d.d < 2) throw std::domain_error("translate_zonal: d must be >= 2");
  if (!(theta >= 0.0) || !(theta <= kPi) || !(psi >= 0.0) || !(psi <= kPi)) {
    throw std::domain_error("translate_zonal: theta and psi must lie in [0, pi]");
  }
  if (F.constant_one) return 1.0;
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(psi), sp = std::sin(psi);
  if (psi == 0.0 || theta == 0.0 || theta == kPi) {
    // latitude circle degenerates to a point in the profile argument
    return F(cp * ct);
  }
  const double ratio = detail::unit_sphere_area(d.d - 2) / detail::unit_sphere_area(d.d - 1);
  const int dm2 = d.d - 2;
  auto integrand = [&](double phi) {
    const double arg = cp * ct + sp * st * std::cos(phi);
    const double s = dm2 == 0 ? 1.0 : std::pow(std::sin(phi), dm2);
    return F(arg) * s;
  };
  return ratio * integrate_doubling(integrand, 0.0, kPi, 128);
}

double local_convolution(SphereDim d, const KernelSpec& kernel, const ZonalFunction& F, double delta,
                         double psi) {
  if (d.d < 2) throw std::domain_error("local_convolution: d must be >= 2");
  if (!(delta >= 0.0) || !(delta < kPi)) {
    throw std::domain_error("local_convolution: delta must lie in [0, pi)");
  }
  const double ratio = detail::unit_sphere_area(d.d - 1) / detail::unit_sphere_area(d.d);
  const int dm1 = d.d - 1;

  // Batched integrand in the colatitude variable: v_L(cos theta) is a
  // trigonometric polynomial there, so Gauss-Legendre converges spectrally
  // once n exceeds the kernel degree.
  auto nodes_eval = [&](const std::vector<double>& thetas) {
    std::vector<double> t(thetas.size());
    for (size_t i = 0; i < thetas.size(); ++i) t[i] = std::cos(thetas[i]);
    BatchValues out;
    out.values = kernel_values(kernel, t, &out.scale);
    for (size_t i = 0; i < thetas.size(); ++i) {
      double translated = 1.0;
      if (!F.constant_one) {
        translated = (psi == 0.0) ? F(t[i]) : translate_zonal(d, F, thetas[i], psi);
      }
      const double extra = translated * std::pow(std::sin(thetas[i]), dm1);
      out.values[i] *= extra;
      out.scale[i] *= std::abs(extra);
    }
    return out;
  };

  const int n0 = std::max(256, 2 * kernel.degree + 64);
  return ratio * integrate_batched(nodes_eval, delta, kPi, n0, 1e-9, 2.0 * kernel.degree + 16.0);
}

double circle_local_convolution(int L, double delta, const std::function<double(double)>& profile) {
  if (L < 0) throw std::domain_error("circle_local_convolution: L must be >= 0");
  if (!(delta > 0.0) || !(delta < kPi)) {
    throw std::domain_error("circle_local_convolution: delta must lie in (0, pi)");
  }
  auto integrand = [&](double phi) {
    return std::sin((L + 0.5) * phi) / std::sin(phi / 2) * profile(phi);
  };
  const int n0 = std::max(256, 2 * L + 64);
  // the phase (L+1/2) phi loses ~eps L phi through argument reduction
  return integrate_batched(pointwise(integrand), delta, kPi, n0, 1e-9, L + 16.0) / kPi;
}

double sup_norm_over_colatitude(SphereDim d, const KernelSpec& kernel, const ZonalFunction& F,
                                double delta, int grid_n) {
  if (grid_n < 2) throw std::domain_error("sup_norm_over_colatitude: grid_n must be >= 2");
  if (F.constant_one) return std::abs(local_convolution(d, kernel, F, delta, 0.0));
  double best = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    const double psi = std::min(kPi, kPi * i / (grid_n - 1));
    best = std::max(best, std::abs(local_convolution(d, kernel, F, delta, psi)));
  }
  return best;
}

}  // namespace rieloc
