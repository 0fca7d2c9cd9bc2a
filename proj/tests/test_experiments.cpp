#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "rieloc/csv.hpp"
#include "rieloc/experiments.hpp"
#include "rieloc/kernels.hpp"

using namespace rieloc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("decay_fit recovers exact power laws") {
  std::vector<std::pair<double, double>> pts;
  for (int L : {8, 16, 32, 64, 128, 256}) {
    pts.emplace_back(L, std::pow(static_cast<double>(L), -1.5));
  }
  const auto fit = decay_fit(pts);
  CHECK(std::abs(fit.slope + 1.5) < 1e-12);
  CHECK(fit.r2 == doctest::Approx(1.0));

  std::vector<std::pair<double, double>> flat;
  for (int L : {8, 16, 32, 64, 128}) flat.emplace_back(L, 7.0);
  CHECK(std::abs(decay_fit(flat).slope) < 1e-12);
}

TEST_CASE("decay_fit on an oscillatory growth fixture") {
  std::vector<std::pair<double, double>> pts;
  for (double L = 64; L <= 8192; L *= 1.3) {
    pts.emplace_back(L, std::sqrt(L) * (2.0 + std::sin(L)));
  }
  const auto fit = decay_fit(pts);
  CHECK(std::abs(fit.slope - 0.5) < 0.1);
}

TEST_CASE("decay_fit input validation") {
  std::vector<std::pair<double, double>> few = {{8, 1.0}, {16, 0.5}, {32, 0.25}, {64, 0.125}};
  CHECK_THROWS_AS(decay_fit(few), std::invalid_argument);
  // zero values are dropped before the count check
  std::vector<std::pair<double, double>> zeros = {{8, 1.0}, {16, 0.0}, {32, 0.25}, {64, 0.125},
                                                  {128, 0.06}, {256, 0.0}};
  CHECK_THROWS_AS(decay_fit(zeros), std::invalid_argument);
}

TEST_CASE("geometric_levels") {
  const auto levels = geometric_levels(64, 2048);
  CHECK(levels.front() == 64);
  CHECK(levels.back() == 2048);
  for (size_t i = 1; i < levels.size(); ++i) {
    CHECK(levels[i] > levels[i - 1]);
    if (i + 1 < levels.size()) {
      CHECK(levels[i] <= static_cast<int>(std::ceil(levels[i - 1] * 1.5)));
    }
  }
}

TEST_CASE("select_subsequence membership matches the phase test") {
  const SphereDim d3{3};
  const double delta = kPi / 4, xi = kPi / 8;
  const auto sel = select_subsequence(d3, delta, xi, 200);
  size_t idx = 0;
  for (int L = 1; L <= 200; ++L) {
    const bool member = idx < sel.levels.size() && sel.levels[idx] == L;
    const double phase = (L + 1.5) * delta - kPi;
    const bool expect = std::abs(std::sin(phase)) > std::sin(xi);
    CHECK(member == expect);
    if (member) ++idx;
  }
  CHECK(idx == sel.levels.size());
}

TEST_CASE("selected degrees appear in every period window") {
  const SphereDim d4{4};
  const double delta = kPi / 4, xi = kPi / 8;
  const auto sel = select_subsequence(d4, delta, xi, 400);
  const int window = static_cast<int>(std::ceil(kPi / delta)) + 1;
  for (int start = 10; start + window <= 400; start += window) {
    bool any = false;
    for (int L : sel.levels) {
      if (L >= start && L < start + window) {
        any = true;
        break;
      }
    }
    CHECK(any);
  }
  // period indices are non-decreasing
  for (size_t i = 1; i < sel.period.size(); ++i) CHECK(sel.period[i] >= sel.period[i - 1]);
}

TEST_CASE("small xi admits almost every degree") {
  const auto sel = select_subsequence(SphereDim{3}, 0.7, 1e-3, 500);
  CHECK(static_cast<double>(sel.levels.size()) > 0.99 * 500 * (1 - 2e-3 / kPi) - 5);
}

TEST_CASE("select_subsequence signals an empty result") {
  CHECK_THROWS_AS(select_subsequence(SphereDim{3}, 0.3, kPi / 4 - 1e-9, 1), std::runtime_error);
  CHECK_THROWS_AS(select_subsequence(SphereDim{3}, 2.0, kPi / 8, 100), std::domain_error);
}

TEST_CASE("decay CSV round-trips at full precision") {
  DecayRun run;
  run.samples = {{64.0, -0.12345678901234567}, {91.0, 3.3306690738754696e-16},
                 {128.0, 1.0 / 3.0}, {181.0, -2.0 / 7.0}, {256.0, 1e-300}};
  std::ostringstream os;
  write_decay_csv(os, run);

  std::istringstream is(os.str());
  std::string header, line;
  std::getline(is, header);
  CHECK(header == "L,value");
  size_t row = 0;
  while (std::getline(is, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    const double L = std::strtod(line.substr(0, comma).c_str(), nullptr);
    const double v = std::strtod(line.substr(comma + 1).c_str(), nullptr);
    CHECK(L == run.samples[row].first);
    CHECK(v == run.samples[row].second);
    ++row;
  }
  CHECK(row == run.samples.size());
}

TEST_CASE("circle decay smoke run") {
  const auto run = run_circle_decay(kPi / 3, SweepConfig{32, 512});
  CHECK(run.fit.slope == doctest::Approx(-1.0).epsilon(0.15));
  CHECK(run.samples.size() >= 5);
}

TEST_CASE("fourier decay smoke run, d = 2") {
  const auto run = run_fourier_decay(SphereDim{2}, kPi / 3, SweepConfig{32, 512}, false);
  CHECK(std::abs(run.fit.slope + 0.5) < 0.2);
}

TEST_CASE("fourier lower-bound smoke run, d = 3 subsequence") {
  const auto run = run_fourier_decay(SphereDim{3}, kPi / 4, SweepConfig{32, 512}, true);
  CHECK(std::abs(run.fit.slope) < 0.2);
  for (const auto& [l, v] : run.samples) CHECK(std::abs(v) > 0.0);
}

TEST_CASE("filtered decay smoke run, d = 2 kappa = 1") {
  const auto run = run_filtered_decay(SphereDim{2}, kPi / 3, 1, SweepConfig{32, 362});
  CHECK(run.fit.slope < -2.5 + 0.4);
}

TEST_CASE("filtering restores localisation where the Fourier case fails") {
  // matched d = 3, delta = pi/4: the Fourier values stay bounded below on
  // the admissible subsequence while the filtered ones decay
  const SphereDim d3{3};
  const double delta = kPi / 4;
  const Filter f = hermite_filter(1);
  const auto sel = select_subsequence(d3, delta, kPi / 8, 512);
  const auto one = ZonalFunction::one();
  std::vector<double> ratios;
  for (int target : {64, 128, 256, 512}) {
    int L = target;
    while (!std::binary_search(sel.levels.begin(), sel.levels.end(), L)) --L;
    const double fourier = local_convolution(d3, KernelSpec::fourier(d3, L), one, delta, 0.0);
    const double filtered = local_convolution(d3, KernelSpec::filtered(d3, f, L), one, delta, 0.0);
    ratios.push_back(std::abs(filtered) / std::abs(fourier));
  }
  CHECK(ratios.back() < 0.2 * ratios.front());
  CHECK(ratios.back() < 1e-3);
}

TEST_CASE("slopes are stable on the upper half of the sweep") {
  const auto full = run_circle_decay(kPi / 3, SweepConfig{64, 2048});
  const auto upper = run_circle_decay(kPi / 3, SweepConfig{362, 2048});
  CHECK(std::abs(full.fit.slope - upper.fit.slope) <= 0.1);
}
