#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "rieloc/filters.hpp"
#include "rieloc/localisation.hpp"
#include "rieloc/special_functions.hpp"

namespace rieloc {

/// Least-squares fit of log|value| against log L.
struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::vector<std::pair<double, double>> points;  ///< (L, value) pairs used
};

/// Fit over points with value != 0; requires at least 5 usable points,
/// else throws std::invalid_argument.
DecayFit decay_fit(const std::vector<std::pair<double, double>>& points);

/// Degrees passing the lower-bound phase test
///   |sin((L + d/2) delta - (d+1) pi/4)| > sin(xi),
/// grouped by the period interval the phase falls into.
struct Subsequence {
  double xi = 0.0;
  std::vector<int> levels;
  std::vector<long long> period;  ///< period index per level
};

/// All admissible L <= L_max. Requires 0 < delta < pi/2, 0 < xi < pi/4;
/// throws std::runtime_error if no degree qualifies.
Subsequence select_subsequence(SphereDim d, double delta, double xi, int L_max);

/// Geometric degree sweep: L_min, then round(ratio * previous), capped at
/// L_max (always included). Default ratio sqrt(2).
std::vector<int> geometric_levels(int L_min, int L_max, double ratio = 1.4142135623730951);

struct SweepConfig {
  int L_min = 64;
  int L_max = 2048;
  double ratio = 1.4142135623730951;
};

/// A decay experiment's output: the sampled (L, value) rows and the fit.
/// Values are signed; fits use |value|.
struct DecayRun {
  DecayFit fit;
  std::vector<std::pair<double, double>> samples;
};

/// |V_L^delta(1)| decay for the Fourier kernel on S^d. Each geometric anchor
/// samples the oscillation envelope: the largest |V_L| over one phase period
/// of degrees ending at the anchor (restricted to the admissible subsequence
/// when use_subsequence is set, matching the lower-bound statement).
/// Expected slope (d-3)/2.
DecayRun run_fourier_decay(SphereDim d, double delta, const SweepConfig& sweep, bool use_subsequence,
                           double xi = 0.39269908169872414);

/// Same protocol for the filtered kernel with the Hermite filter of class
/// kappa. Expected slope -(kappa - d/2 + 5/2).
DecayRun run_filtered_decay(SphereDim d, double delta, int kappa, const SweepConfig& sweep);

/// Circle Dirichlet kernel with f = 1. Expected slope -1.
DecayRun run_circle_decay(double delta, const SweepConfig& sweep);

/// Emit samples as CSV with header "L,value" (17 significant digits).
void write_decay_csv(std::ostream& os, const DecayRun& run);

}  // namespace rieloc
