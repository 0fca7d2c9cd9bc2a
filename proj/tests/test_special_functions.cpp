#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "rieloc/localisation.hpp"
#include "rieloc/special_functions.hpp"

using namespace rieloc;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Independent Gauss-Jacobi oracle via Golub-Welsch: nodes and weights for
// the weight (1-t)^a (1+t)^b, exact for polynomials of degree <= 2n-1.
// Valid for a+b > -1 (our oracle cases stay away from the removable
// a+b = -1 corner).
struct GaussJacobiRule {
  std::vector<double> nodes, weights;
};

GaussJacobiRule gauss_jacobi_oracle(int n, double a, double b) {
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  T(0, 0) = (b - a) / (a + b + 2);
  for (int k = 1; k < n; ++k) {
    const double s = 2 * k + a + b;
    T(k, k) = (b * b - a * a) / (s * (s + 2));
    const double off2 = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1));
    T(k, k - 1) = T(k - 1, k) = std::sqrt(off2);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(T);
  const double mu0 = std::exp2(a + b + 1) * std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) -
                                                     std::lgamma(a + b + 2));
  GaussJacobiRule rule;
  for (int i = 0; i < n; ++i) {
    rule.nodes.push_back(eig.eigenvalues()(i));
    const double q = eig.eigenvectors()(0, i);
    rule.weights.push_back(mu0 * q * q);
  }
  return rule;
}
}  // namespace

TEST_CASE("JacobiParams rejects exponents at or near -1") {
  CHECK_THROWS_AS(JacobiParams(-1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(JacobiParams(0.0, -1.0 + 1e-7), std::domain_error);
  CHECK_NOTHROW(JacobiParams(-0.5, -0.25));
}

TEST_CASE("gamma_ratio basic values") {
  CHECK(gamma_ratio(1.0, 0.0, 5) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(gamma_ratio(0.0, 0.0, 17) == 1.0);
  // Gamma(102.5)/Gamma(101), high-precision oracle
  CHECK(rel_err(gamma_ratio(2.5, 1.0, 100), 1018.8007081577363264) < 1e-13);
}

TEST_CASE("gamma_ratio stays accurate at L = 1e6") {
  CHECK(rel_err(gamma_ratio(2.5, 1.0, 1000000), 1000001875.0005078124) < 1e-12);
  CHECK(rel_err(gamma_ratio(0.3, -0.2, 1000000), 999.9997749999903125) < 1e-12);
}

TEST_CASE("gamma_ratio domain errors") {
  CHECK_THROWS_AS(gamma_ratio(-6.0, 0.0, 5), std::domain_error);
  CHECK_THROWS_AS(gamma_ratio(0.0, -5.0, 5), std::domain_error);
}

TEST_CASE("gamma_ratio approaches L^{a-b}") {
  for (auto [a, b] : {std::pair{2.5, 1.0}, std::pair{0.3, -0.2}}) {
    for (long long L : {100LL, 1000LL, 10000LL}) {
      const double r = gamma_ratio(a, b, L) / std::pow(static_cast<double>(L), a - b);
      CHECK(std::abs(r - 1.0) * static_cast<double>(L) < 10.0);
    }
  }
}

TEST_CASE("jacobi_eval low-degree values") {
  CHECK(jacobi_eval({0.0, 0.0}, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(jacobi_eval({1.5, -0.25}, 0, 0.77) == 1.0);
  // hypergeometric-series oracle value
  CHECK(rel_err(jacobi_eval({0.5, -0.25}, 7, 0.3), -0.085090921197178959846) < 1e-13);
}

TEST_CASE("jacobi_eval reflection symmetry") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> ts(-1.0, 1.0);
  for (auto [a, b] : {std::pair{0.5, -0.25}, std::pair{1.5, 0.0}, std::pair{0.0, 0.75}}) {
    const JacobiParams pab{a, b}, pba{b, a};
    for (int trial = 0; trial < 25; ++trial) {
      const double t = ts(rng);
      const int ell = 1 + static_cast<int>(rng() % 100);
      const double lhs = jacobi_eval(pab, ell, -t);
      const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
      const double rhs = sign * jacobi_eval(pba, ell, t);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("jacobi_at_one values and recurrence consistency") {
  CHECK(jacobi_at_one({0.0, 0.0}, 9) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(jacobi_at_one({1.0, 0.0}, 3) == doctest::Approx(4.0).epsilon(1e-14));
  for (double a : {-0.5 + 1e-6, 0.0, 0.5, 1.5}) {
    for (double b : {-0.5 + 1e-6, 0.0, 0.5, 1.5}) {
      const JacobiParams p{a, b};
      for (int ell : {1, 7, 50, 200, 500}) {
        CHECK(rel_err(jacobi_eval(p, ell, 1.0), jacobi_at_one(p, ell)) < 1e-11);
      }
    }
  }
}

TEST_CASE("norm_const closed values") {
  CHECK(norm_const({0.0, 0.0}, 0) == doctest::Approx(2.0).epsilon(1e-14));
  for (int ell : {1, 4, 19}) {
    CHECK(norm_const({0.0, 0.0}, ell) == doctest::Approx(2.0 / (2 * ell + 1)).epsilon(1e-13));
  }
  CHECK(rel_err(norm_const({0.5, -0.25}, 3), 0.33951683675690697445) < 1e-13);
  CHECK(rel_err(norm_const({1.5, 0.0}, 5), 0.45254833995939041562) < 1e-13);
}

TEST_CASE("norm_const against Gauss-Jacobi quadrature") {
  for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{0.5, -0.25}, std::pair{1.5, 0.0}}) {
    const JacobiParams p{a, b};
    const auto rule = gauss_jacobi_oracle(31, a, b);  // exact through degree 61
    for (int ell : {0, 1, 5, 17, 30}) {
      double got = 0.0;
      for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double P = jacobi_eval(p, ell, rule.nodes[i]);
        got += rule.weights[i] * P * P;
      }
      CHECK(rel_err(got, norm_const(p, ell)) < 1e-9);
    }
  }
}

TEST_CASE("orthogonality under the weight, via gauss_nodes") {
  // polynomial weights: the n-point rule is exact for the full integrand
  for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{1.0, 0.0}, std::pair{2.0, 1.0}}) {
    const JacobiParams p{a, b};
    const auto rule = gauss_nodes(24, -1.0, 1.0);
    std::vector<std::vector<double>> P(static_cast<size_t>(rule.size()));
    for (int i = 0; i < rule.size(); ++i) P[static_cast<size_t>(i)] = jacobi_batch(p, 20, rule.nodes[static_cast<size_t>(i)]);
    for (int ell = 0; ell <= 20; ++ell) {
      for (int m = ell + 1; m <= 20; ++m) {
        double acc = 0.0;
        for (int i = 0; i < rule.size(); ++i) {
          const double t = rule.nodes[static_cast<size_t>(i)];
          acc += rule.weights[static_cast<size_t>(i)] * P[static_cast<size_t>(i)][static_cast<size_t>(ell)] *
                 P[static_cast<size_t>(i)][static_cast<size_t>(m)] * std::pow(1 - t, a) * std::pow(1 + t, b);
        }
        CHECK(std::abs(acc) <= 1e-9 * std::sqrt(norm_const(p, ell) * norm_const(p, m)));
      }
    }
  }
}

TEST_CASE("orthogonality with fractional exponents") {
  const JacobiParams p{0.5, -0.25};
  const auto rule = gauss_jacobi_oracle(21, 0.5, -0.25);
  for (auto [ell, m] : {std::pair{0, 1}, std::pair{2, 5}, std::pair{3, 11}, std::pair{7, 20}}) {
    double got = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      got += rule.weights[i] * jacobi_eval(p, ell, rule.nodes[i]) * jacobi_eval(p, m, rule.nodes[i]);
    }
    CHECK(std::abs(got) <= 1e-9 * std::sqrt(norm_const(p, ell) * norm_const(p, m)));
  }
}

TEST_CASE("dim_harmonic") {
  for (int ell : {0, 1, 2, 9, 40}) {
    CHECK(dim_harmonic(SphereDim{2}, ell) == doctest::Approx(2.0 * ell + 1).epsilon(1e-13));
  }
  CHECK(dim_harmonic(SphereDim{3}, 2) == doctest::Approx(9.0).epsilon(1e-13));
  for (int d : {2, 3, 4, 5, 6}) CHECK(dim_harmonic(SphereDim{d}, 0) == doctest::Approx(1.0));
}

TEST_CASE("sphere_area") {
  CHECK(sphere_area(SphereDim{1}) == doctest::Approx(2 * kPi).epsilon(1e-14));
  CHECK(sphere_area(SphereDim{2}) == doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(sphere_area(SphereDim{3}) == doctest::Approx(2 * kPi * kPi).epsilon(1e-14));
}

TEST_CASE("Chebyshev identity: normalised (-1/2,-1/2) polynomials are cos(l theta)") {
  const JacobiParams p{-0.5, -0.5};
  for (int ell : {1, 3, 10, 31}) {
    for (double theta : {0.3, 1.1, 2.4}) {
      const double got = jacobi_eval(p, ell, std::cos(theta)) / jacobi_at_one(p, ell);
      CHECK(got == doctest::Approx(std::cos(ell * theta)).epsilon(1e-11));
    }
  }
}
