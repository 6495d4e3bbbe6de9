#include <doctest/doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fho/classical.hpp"
#include "fho/errors.hpp"
#include "fho/oracles.hpp"

using namespace fho;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Eigen::Matrix2d& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("propagator examples") {
  CHECK(max_abs(propagator({1.0, 3.0}, 0.0) - Eigen::Matrix2d::Identity()) == 0.0);

  Eigen::Matrix2d expected;
  expected << 0.0, 2.0 / kPi, -kPi / 2.0, 0.0;
  CHECK(max_abs(propagator({1.0, kPi / 2.0}, 1.0) - expected) < 1e-15);

  expected << 1.0, 1.5, 0.0, 1.0;
  CHECK(max_abs(propagator({2.0, 0.0}, 3.0) - expected) < 1e-15);
  CHECK(max_abs(propagator({2.0, 1e-8}, 3.0) - expected) < 1e-14);
}

TEST_CASE("small omega t branch is continuous") {
  const OscillatorParams p{1.3, 1.0};
  for (double t : {0.999e-6, 1.001e-6}) {
    const auto u = propagator(p, t);
    CHECK(u(0, 1) == doctest::Approx(std::sin(t) / 1.3).epsilon(1e-15));
  }
}

TEST_CASE("propagator satisfies dU/dt = H0 U with the mass-corrected generator") {
  const OscillatorParams p{2.5, 1.7};
  const double t = 0.8;
  const double h = 1e-6;
  const Eigen::Matrix2d du = (propagator(p, t + h) - propagator(p, t - h)) / (2 * h);
  CHECK(max_abs(du - generator(p) * propagator(p, t)) < 1e-8);
  CHECK(generator(p)(0, 1) == doctest::Approx(1.0 / 2.5));
  CHECK(generator(p)(1, 0) == doctest::Approx(-2.5 * 1.7 * 1.7));
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(propagator({0.0, 1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(propagator({1.0, -1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(propagator({1.0, 1.0}, std::nan("")), DomainError);
  CHECK_THROWS_AS(evolve({1.0, 1.0}, {}, ForcingSpec::zero(), -1.0), DomainError);
  CHECK_THROWS_AS(laboratory_ellipse({1.0, 0.0}, 1.0, 1.0), DomainError);
}

TEST_CASE("evolve examples") {
  for (double w : {0.5, 1.0, 3.0}) {
    const auto z = evolve({1.7, w}, {1.0, 0.0}, ForcingSpec::zero(), 2 * kPi / w);
    CHECK(z.x == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(z.p) < 1e-13);
  }
  const auto z = evolve({1.0, 1.0}, {}, ForcingSpec::constant(1.0), kPi);
  CHECK(z.x == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(z.p) < 1e-12);

  const OscillatorParams p{1.0, 1.0};
  const auto sin_force = ForcingSpec::sinusoid(1.0, 2.0);
  const auto a = evolve(p, {0.3, -0.2}, sin_force, 1.7, 1e-12);
  const auto b = oracles::rk_evolve(p, {0.3, -0.2}, sin_force, 1.7);
  CHECK(std::abs(a.x - b.x) < 1e-8);
  CHECK(std::abs(a.p - b.p) < 1e-8);
}

TEST_CASE("nonhomogeneous examples") {
  const auto zero = nonhomogeneous({2.0, 1.0}, ForcingSpec::zero(), 4.2);
  CHECK(zero.x == 0.0);
  CHECK(zero.p == 0.0);

  const auto z = nonhomogeneous({1.0, 1.0}, ForcingSpec::constant(1.0), kPi / 2.0);
  CHECK(z.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(z.p == doctest::Approx(1.0).epsilon(1e-12));

  const auto s = nonhomogeneous({1.0, 1.0}, ForcingSpec::sinusoid(1.0, 2.0), 2.0, 1e-12);
  const auto o = oracles::rk_evolve({1.0, 1.0}, {}, ForcingSpec::sinusoid(1.0, 2.0), 2.0);
  CHECK(std::abs(s.x - o.x) < 1e-10);
  CHECK(std::abs(s.p - o.p) < 1e-10);
}

TEST_CASE("pulse forcing against the ODE oracle at general mass") {
  const OscillatorParams p{2.0, 0.7};
  const auto pulse = ForcingSpec::pulse(1.5, 0.4, 2.2);
  for (double t : {0.3, 1.0, 2.2, 5.0}) {
    const auto a = evolve(p, {0.1, 0.4}, pulse, t, 1e-12);
    const auto b = oracles::rk_evolve(p, {0.1, 0.4}, pulse, t);
    CHECK(std::abs(a.x - b.x) < 1e-9);
    CHECK(std::abs(a.p - b.p) < 1e-9);
  }
}

TEST_CASE("quadratic invariant examples") {
  CHECK(quadratic_invariant({1.0, 2.0}, {1.0, 0.0}) == doctest::Approx(2.0));
  CHECK(quadratic_invariant({1.0, 1.0}, {0.0, 3.0}) == doctest::Approx(4.5));
  CHECK(quadratic_invariant({2.0, 3.0}, {1.0, 2.0}) == doctest::Approx(10.0));
}

TEST_CASE("laboratory ellipse examples") {
  const auto origin = laboratory_ellipse({1.0, 1.0}, 1.0, 0.0);
  CHECK(origin.x == 0.0);
  CHECK(origin.p == 0.0);
  const auto half = laboratory_ellipse({1.0, 1.0}, 1.0, kPi);
  CHECK(half.x == doctest::Approx(2.0));
  CHECK(std::abs(half.p) < 1e-15);

  const OscillatorParams p{1.0, 2.0 * kPi};
  const auto q = laboratory_ellipse(p, 1.0, 0.25);
  CHECK(q.x == doctest::Approx(1.0 / (4.0 * kPi * kPi)).epsilon(1e-14));
  CHECK(q.p == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
  const auto n = nonhomogeneous(p, ForcingSpec::constant(1.0), 0.25, 1e-12);
  CHECK(std::abs(n.x - q.x) < 1e-12);
  CHECK(std::abs(n.p - q.p) < 1e-12);
}

TEST_CASE("laboratory ellipse at mass != 1 matches the quadrature route") {
  const OscillatorParams p{3.0, 1.3};
  for (double t : {0.2, 1.0, 4.0}) {
    const auto closed = laboratory_ellipse(p, 0.8, t);
    const auto quad = nonhomogeneous(p, ForcingSpec::constant(0.8), t, 1e-12);
    CHECK(std::abs(closed.x - quad.x) < 1e-12);
    CHECK(std::abs(closed.p - quad.p) < 1e-12);
  }
}

TEST_CASE("property: group law, symplecticity and conjugation invariance") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> time(-20.0, 20.0);
  for (double m : {1.0, 2.5}) {
    for (double w : {0.0, 0.5, 1.0, 2 * kPi}) {
      const OscillatorParams p{m, w};
      const auto q = quadratic_form(p);
      for (int i = 0; i < 200; ++i) {
        const double t = time(rng);
        const double s = time(rng);
        const auto ut = propagator(p, t);
        CHECK(max_abs(propagator(p, t + s) - ut * propagator(p, s)) < 1e-11);
        CHECK(std::abs(ut(0, 0) * ut(1, 1) - ut(0, 1) * ut(1, 0) - 1.0) < 1e-12);
        CHECK(max_abs(ut.transpose() * q * ut - q) < 1e-11);
      }
    }
  }
}

TEST_CASE("trajectory samples agree with direct evolution and export the invariant") {
  const OscillatorParams p{1.5, 0.8};
  const auto spec = ForcingSpec::sinusoid(0.7, 1.1, 0.2);
  const std::vector<double> times{0.0, 0.5, 1.5, 4.0, 10.0};
  const auto traj = trajectory(p, {0.2, -0.1}, spec, times, 1e-12);
  REQUIRE(traj.size() == times.size());
  for (const auto& s : traj) {
    const auto direct = evolve(p, {0.2, -0.1}, spec, s.t, 1e-12);
    CHECK(std::abs(s.z.x - direct.x) < 1e-11);
    CHECK(std::abs(s.z.p - direct.p) < 1e-11);
    CHECK(quadratic_invariant(p, s.z - s.z_nh) ==
          doctest::Approx(quadratic_invariant(p, {0.2, -0.1})).epsilon(1e-10));
  }

  std::ostringstream csv;
  write_trajectory_csv(csv, p, traj);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "t,x,p,x_nh,p_nh,invariant");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 5);

  CHECK_THROWS_AS(trajectory(p, {}, spec, std::vector<double>{1.0, 0.5}), DomainError);
}
