#include <doctest/doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fho/errors.hpp"
#include "fho/hermite.hpp"
#include "fho/oracles.hpp"
#include "fho/schrodinger.hpp"

using namespace fho;

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
}

TEST_CASE("hermite polynomial values") {
  CHECK(hermite_poly(0, 0.37) == 1.0);
  CHECK(hermite_poly(2, 1.0) == doctest::Approx(2.0));
  CHECK(hermite_poly(3, 1.0) == doctest::Approx(-4.0));
  CHECK(hermite_poly(5, 0.5) == doctest::Approx(32 * 0.03125 - 160 * 0.125 + 120 * 0.5));
  CHECK_THROWS_AS(hermite_poly(-1, 0.0), DomainError);
}

TEST_CASE("generating function partial sums") {
  CHECK(generating_function_partial(0.0, 0.0, 0) == 1.0);
  CHECK(generating_function_partial(1.0, 0.1, 30) == doctest::Approx(std::exp(0.19)).epsilon(1e-12));
  CHECK(generating_function_partial(-0.5, 0.3, 40) == doctest::Approx(std::exp(-0.39)).epsilon(1e-12));
}

TEST_CASE("property: recurrence matches generating-function coefficients") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xs(-3.0, 3.0);
  for (int i = 0; i < 40; ++i) {
    const double x = xs(rng);
    for (int n = 0; n <= 15; ++n) {
      const double oracle = oracles::generating_function_coefficient(n, x);
      CHECK(std::abs(hermite_poly(n, x) - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
    }
  }
}

TEST_CASE("complex Gaussian integral") {
  using C = std::complex<double>;
  CHECK(std::abs(gaussian_integral(C(0, 0)) - kSqrtPi) < 1e-15);
  CHECK(std::abs(gaussian_integral(C(2, 0)) - kSqrtPi * std::exp(1.0)) < 1e-14);
  CHECK(std::abs(gaussian_integral(C(0, 2)) - kSqrtPi * std::exp(-1.0)) < 1e-15);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    C z(3.5 * u(rng), 3.5 * u(rng));
    const auto oracle = oracles::gaussian_integral_quadrature(z);
    CHECK(std::abs(gaussian_integral(z) - oracle) <= 1e-10 * std::max(1.0, std::abs(oracle)));
  }
}

TEST_CASE("eigenstate values") {
  CHECK(eigenstate({1.0, 1.0}, 0, 0.0) == doctest::Approx(std::pow(std::numbers::pi, -0.25)));
  CHECK(eigenstate({1.0, 1.0}, 1, 0.0) == 0.0);
  CHECK(eigenstate({2.0, 3.0}, 0, 0.5) ==
        doctest::Approx(std::pow(6.0 / std::numbers::pi, 0.25) * std::exp(-0.75)));
  CHECK_THROWS_AS(eigenstate({1.0, 0.0}, 0, 0.0), DomainError);
  CHECK_THROWS_AS(eigenstate({1.0, 1.0}, -2, 0.0), DomainError);
}

TEST_CASE("high eigenstates stay finite far out") {
  const OscillatorParams p{1.0, 1.0};
  for (int n : {50, 150, 300}) {
    const double v = eigenstate(p, n, 30.0);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) < 1.0);
  }
  const auto all = eigenstates_upto(p, 40, 1.3);
  REQUIRE(all.size() == 41);
  for (int n = 0; n <= 40; n += 7) CHECK(all[n] == doctest::Approx(eigenstate(p, n, 1.3)));
}

TEST_CASE("Gauss-Hermite rules") {
  const auto& one = gauss_hermite_rule(1);
  CHECK(one.nodes[0] == 0.0);
  CHECK(one.weights[0] == doctest::Approx(kSqrtPi));

  const auto& two = gauss_hermite_rule(2);
  CHECK(two.nodes[0] == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(two.nodes[1] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(two.weights[0] == doctest::Approx(kSqrtPi / 2));
  CHECK(two.weights[1] == doctest::Approx(kSqrtPi / 2));

  // exact for polynomial degree <= 2n - 1
  const auto& ten = gauss_hermite_rule(10);
  double m4 = 0.0;
  for (std::size_t i = 0; i < ten.nodes.size(); ++i) m4 += ten.weights[i] * std::pow(ten.nodes[i], 4);
  CHECK(m4 == doctest::Approx(0.75 * kSqrtPi).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_hermite_rule(0), DomainError);
  CHECK_THROWS_AS(gauss_hermite_rule(201), DomainError);
}

TEST_CASE("property: orthonormality by Gauss-Hermite quadrature") {
  const OscillatorParams p{1.0, 1.0};
  const auto& rule = gauss_hermite_rule(30);
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; m <= 12; ++m) {
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = rule.nodes[i];
        sum += rule.weights[i] * std::exp(y * y) * eigenstate(p, n, y) * eigenstate(p, m, y);
      }
      CHECK(std::abs(sum - (n == m ? 1.0 : 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("energies and their grid Rayleigh quotients") {
  CHECK(eigen_energy({1.0, 1.0}, 0) == 0.5);
  CHECK(eigen_energy({1.0, 2.0}, 3) == 7.0);
  for (int n = 0; n < 5; ++n) CHECK(eigen_energy({1.0, 1.0}, n + 1) - eigen_energy({1.0, 1.0}, n) == 1.0);

  for (const OscillatorParams p : {OscillatorParams{1.0, 1.0}, OscillatorParams{1.0, 2.0}}) {
    const auto grid = GridSpec::default_for(p);
    for (int n : {0, 3}) {
      const auto psi = eigenstate_wave(p, grid, n);
      CHECK(moving_energy(p, psi) == doctest::Approx(eigen_energy(p, n)).epsilon(1e-10));
    }
  }
}
