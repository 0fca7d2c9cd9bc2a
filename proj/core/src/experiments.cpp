#include "rieloc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rieloc/csv.hpp"
#include "rieloc/kernels.hpp"

namespace rieloc {

namespace {

constexpr double kPi = std::numbers::pi;

double lower_bound_phase(SphereDim d, double delta, int L) {
  return (L + d.d / 2.0) * delta - (d.d + 1) * kPi / 4;
}

// Envelope sampling: per geometric anchor, the largest |value| over one
// phase period of degrees ending at the anchor. Raw single-degree sampling
// is corrupted whenever an anchor lands near a zero of the oscillatory
// factor; the per-period maximum tracks the envelope the rate statements
// are about.
template <typename Value>
DecayRun envelope_run(const SweepConfig& sweep, int period, const std::vector<int>* admissible,
                      Value&& value_at) {
  if (sweep.L_min < 1 || sweep.L_max < sweep.L_min) {
    throw std::invalid_argument("decay run: bad L range");
  }
  DecayRun run;
  int last_recorded = 0;
  for (int anchor : geometric_levels(sweep.L_min, sweep.L_max, sweep.ratio)) {
    int lo = std::max(1, anchor - period + 1);
    std::vector<int> candidates;
    for (int grow = 0; grow < 8 && candidates.empty(); ++grow) {
      for (int l = lo; l <= anchor; ++l) {
        if (!admissible || std::binary_search(admissible->begin(), admissible->end(), l)) {
          candidates.push_back(l);
        }
      }
      lo = std::max(1, lo - period);
    }
    if (candidates.empty()) continue;

    double best = 0.0;
    int best_l = candidates.front();
    for (int l : candidates) {
      const double v = value_at(l);
      if (std::abs(v) >= std::abs(best)) {
        best = v;
        best_l = l;
      }
    }
    if (best_l == last_recorded) continue;  // windows can overlap at small L
    last_recorded = best_l;
    run.samples.emplace_back(static_cast<double>(best_l), best);
  }
  run.fit = decay_fit(run.samples);
  return run;
}

}  // namespace

DecayFit decay_fit(const std::vector<std::pair<double, double>>& points) {
  std::vector<std::pair<double, double>> usable;
  for (const auto& [l, v] : points) {
    if (l > 0.0 && v != 0.0 && std::isfinite(v)) usable.emplace_back(l, v);
  }
  if (usable.size() < 5) {
    throw std::invalid_argument("decay_fit: need at least 5 points with nonzero value");
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [l, v] : usable) {
    const double x = std::log(l), y = std::log(std::abs(v));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(usable.size());
  const double denom = n * sxx - sx * sx;
  DecayFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;

  double ss_res = 0, ss_tot = 0;
  const double ymean = sy / n;
  for (const auto& [l, v] : usable) {
    const double x = std::log(l), y = std::log(std::abs(v));
    const double r = y - (fit.slope * x + fit.intercept);
    ss_res += r * r;
    ss_tot += (y - ymean) * (y - ymean);
  }
  fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  fit.points = std::move(usable);
  return fit;
}

Subsequence select_subsequence(SphereDim d, double delta, double xi, int L_max) {
  if (!(delta > 0.0) || !(delta < kPi / 2)) {
    throw std::domain_error("select_subsequence: delta must lie in (0, pi/2)");
  }
  if (!(xi > 0.0) || !(xi < kPi / 4)) {
    throw std::domain_error("select_subsequence: xi must lie in (0, pi/4)");
  }
  Subsequence out;
  out.xi = xi;
  const double threshold = std::sin(xi);
  for (int L = 1; L <= L_max; ++L) {
    const double phase = lower_bound_phase(d, delta, L);
    if (std::abs(std::sin(phase)) > threshold) {
      out.levels.push_back(L);
      out.period.push_back(static_cast<long long>(std::floor((phase - xi) / kPi)));
    }
  }
  if (out.levels.empty()) {
    throw std::runtime_error("select_subsequence: no admissible degree below L_max");
  }
  return out;
}

std::vector<int> geometric_levels(int L_min, int L_max, double ratio) {
  if (L_min < 1 || L_max < L_min || !(ratio > 1.0)) {
    throw std::invalid_argument("geometric_levels: bad sweep parameters");
  }
  std::vector<int> out{L_min};
  while (out.back() < L_max) {
    const int next = std::max(out.back() + 1, static_cast<int>(std::lround(out.back() * ratio)));
    out.push_back(std::min(next, L_max));
  }
  return out;
}

DecayRun run_fourier_decay(SphereDim d, double delta, const SweepConfig& sweep, bool use_subsequence,
                           double xi) {
  if (!(delta > 0.0) || !(delta < kPi)) {
    throw std::domain_error("run_fourier_decay: delta must lie in (0, pi)");
  }
  const int period = static_cast<int>(std::ceil(kPi / delta));
  const auto one = ZonalFunction::one();
  auto value_at = [&](int L) {
    return local_convolution(d, KernelSpec::fourier(d, L), one, delta, 0.0);
  };
  if (!use_subsequence) return envelope_run(sweep, period, nullptr, value_at);
  const Subsequence sel = select_subsequence(d, delta, xi, sweep.L_max);
  return envelope_run(sweep, period, &sel.levels, value_at);
}

DecayRun run_filtered_decay(SphereDim d, double delta, int kappa, const SweepConfig& sweep) {
  if (!(delta > 0.0) || !(delta < kPi)) {
    throw std::domain_error("run_filtered_decay: delta must lie in (0, pi)");
  }
  // the filtered bracket mixes phases of frequency delta and 2 delta
  const int period = static_cast<int>(std::ceil(2 * kPi / delta));
  const Filter f = hermite_filter(kappa);
  const auto one = ZonalFunction::one();
  auto value_at = [&](int L) {
    return local_convolution(d, KernelSpec::filtered(d, f, L), one, delta, 0.0);
  };
  return envelope_run(sweep, period, nullptr, value_at);
}

DecayRun run_circle_decay(double delta, const SweepConfig& sweep) {
  if (!(delta > 0.0) || !(delta < kPi)) {
    throw std::domain_error("run_circle_decay: delta must lie in (0, pi)");
  }
  const int period = static_cast<int>(std::ceil(kPi / delta));
  auto value_at = [&](int L) {
    return circle_local_convolution(L, delta, [](double) { return 1.0; });
  };
  return envelope_run(sweep, period, nullptr, value_at);
}

void write_decay_csv(std::ostream& os, const DecayRun& run) {
  os << "L,value\n";
  for (const auto& [l, v] : run.samples) {
    csv::write_row(os, std::vector<double>{l, v});
  }
}

}  // namespace rieloc
