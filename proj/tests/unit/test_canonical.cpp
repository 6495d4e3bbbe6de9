#include <doctest/doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fho/canonical.hpp"
#include "fho/errors.hpp"
#include "fho/oracles.hpp"

using namespace fho;

namespace {

constexpr double kPi = std::numbers::pi;

CanonicalFrame unit_constant_frame(double t_max = 2 * kPi) {
  return CanonicalFrame::build({1.0, 1.0}, ForcingSpec::constant(1.0), t_max, 65);
}

}  // namespace

TEST_CASE("frame starts at rest") {
  const auto frame = CanonicalFrame::build({2.0, 0.7}, ForcingSpec::sinusoid(1.0, 1.3), 5.0, 17);
  const auto s = frame.at(0.0);
  CHECK(s.x_nh == 0.0);
  CHECK(s.xdot_nh == 0.0);
  CHECK(s.gauge == 0.0);
}

TEST_CASE("zero forcing gives the identity frame") {
  const auto frame = CanonicalFrame::build({1.0, 1.0}, ForcingSpec::zero(), 3.0, 9);
  for (double t : {0.0, 1.1, 3.0}) {
    const auto s = frame.at(t);
    CHECK(s.x_nh == 0.0);
    CHECK(s.xdot_nh == 0.0);
    CHECK(s.gauge == 0.0);
    CHECK(theta(frame, 1.7, t) == 0.0);
    CHECK(theta_prime(frame, -0.4, t) == 0.0);
    CHECK(f1(frame, 1.5, 0.4, t) == doctest::Approx(1.5 * 0.4));
    const auto z = to_moving(frame, {0.3, -0.8}, t);
    CHECK(z.x == 0.3);
    CHECK(z.p == -0.8);
  }
}

TEST_CASE("gauge for unit constant forcing") {
  const auto frame = unit_constant_frame();
  const auto s = frame.at(kPi);
  CHECK(s.x_nh == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(s.xdot_nh) < 1e-12);
  // integrand reduces to sin^2
  CHECK(s.gauge == doctest::Approx(kPi / 2).epsilon(1e-12));
  for (double t : {0.3, 1.0, 2.5, 5.0}) {
    CHECK(frame.at(t).gauge == doctest::Approx(t / 2 - std::sin(2 * t) / 4).epsilon(1e-11));
  }
}

TEST_CASE("sinusoid frame against the ODE oracle") {
  const OscillatorParams p{1.0, 1.0};
  const auto spec = ForcingSpec::sinusoid(1.0, 2.0);
  const auto frame = CanonicalFrame::build(p, spec, 1.0, 9);
  const auto a = frame.at(1.0);
  const auto b = oracles::rk_frame(p, spec, 1.0);
  CHECK(std::abs(a.x_nh - b.x_nh) < 1e-11);
  CHECK(std::abs(a.xdot_nh - b.xdot_nh) < 1e-11);
  CHECK(std::abs(a.gauge - b.gauge) < 1e-11);
}

TEST_CASE("phases and generating functions") {
  const auto frame = unit_constant_frame();
  const double g_half = frame.at(kPi / 2).gauge;
  CHECK(theta(frame, 2.0, kPi / 2) == doctest::Approx((2.0 - 1.0) * 1.0 + g_half).epsilon(1e-12));
  CHECK(theta_prime(frame, 0.0, kPi / 2) == doctest::Approx(-1.0 + g_half).epsilon(1e-12));
  CHECK(f2(frame, 1.0, 0.0, kPi) == doctest::Approx(kPi / 2).epsilon(1e-11));

  for (double t : {0.4, 1.9, 4.4}) {
    const auto s = frame.at(t);
    CHECK(theta(frame, s.x_nh, t) == doctest::Approx(s.gauge));
    CHECK(theta_prime(frame, -s.x_nh, t) == doctest::Approx(s.gauge));
    CHECK(f1(frame, s.x_nh, 0.77, t) == doctest::Approx(s.gauge));
  }
}

TEST_CASE("moving-frame coordinates") {
  const auto frame = unit_constant_frame();
  const auto z = to_moving(frame, {2.0, 0.0}, kPi);
  CHECK(std::abs(z.x) < 1e-12);
  CHECK(std::abs(z.p) < 1e-12);
  const PhaseState lab{0.4, -1.2};
  const auto back = to_lab(frame, to_moving(frame, lab, 1.3), 1.3);
  CHECK(back.x == doctest::Approx(lab.x));
  CHECK(back.p == doctest::Approx(lab.p));
}

TEST_CASE("times outside the frame are domain errors") {
  const auto frame = unit_constant_frame(1.0);
  CHECK_THROWS_AS(frame.at(-0.1), DomainError);
  CHECK_THROWS_AS(frame.at(1.1), DomainError);
  CHECK_THROWS_AS(frame.interpolate(1.1), DomainError);
  CHECK_THROWS_AS(theta(frame, 0.0, 2.0), DomainError);
  CHECK_THROWS_AS(CanonicalFrame::build({1.0, 1.0}, ForcingSpec::zero(), 1.0, 1), DomainError);
}

TEST_CASE("interpolation tracks the exact frame") {
  const auto frame =
      CanonicalFrame::build({1.5, 1.2}, ForcingSpec::sinusoid(0.8, 0.6, 0.1), 10.0, 401);
  for (double t : {0.013, 2.71, 6.6, 9.99}) {
    const auto e = frame.at(t);
    const auto i = frame.interpolate(t);
    CHECK(std::abs(e.x_nh - i.x_nh) < 1e-7);
    CHECK(std::abs(e.xdot_nh - i.xdot_nh) < 1e-7);
    CHECK(std::abs(e.gauge - i.gauge) < 1e-7);
  }
}

TEST_CASE("property: Newton, gauge and transformation-law residuals at m = 1 and m = 2") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double m : {1.0, 2.0}) {
    const OscillatorParams p{m, 1.3};
    for (const auto& spec : {ForcingSpec::constant(0.9), ForcingSpec::sinusoid(1.2, 0.7, 0.5),
                             ForcingSpec::pulse(1.0, 2.0, 4.0)}) {
      const auto frame = CanonicalFrame::build(p, spec, 8.0, 33);
      for (int i = 0; i < 20; ++i) {
        const double t = 0.1 + 7.8 * unit(rng);
        if (std::abs(t - 2.0) < 1e-3 || std::abs(t - 4.0) < 1e-3) continue;
        const double h = 1e-5 * std::max(1.0, t);
        const auto s = frame.at(t);
        const auto lo = frame.at(t - h);
        const auto hi = frame.at(t + h);
        const double k = spec(t);

        const double acc = (hi.xdot_nh - lo.xdot_nh) / (2 * h);
        CHECK(std::abs(m * acc + m * 1.69 * s.x_nh - k) < 1e-6);

        const double gdot = (hi.gauge - lo.gauge) / (2 * h);
        const double rate = 0.5 * m * s.xdot_nh * s.xdot_nh - 0.5 * m * 1.69 * s.x_nh * s.x_nh + s.x_nh * k;
        CHECK(std::abs(gdot - rate) < 1e-6);

        const double x = 4 * unit(rng) - 2;
        const double eta = 4 * unit(rng) - 2;
        const double df1 = (f1(frame, x, eta, t + h) - f1(frame, x, eta, t - h)) / (2 * h);
        const PhaseState lab{x, eta + s.p_nh(m)};
        const double lhs = moving_hamiltonian(p, {x - s.x_nh, eta});
        CHECK(std::abs(lhs - lab_hamiltonian(p, spec, lab, t) - df1) < 1e-6);
      }
    }
  }
}

TEST_CASE("frame CSV export") {
  const auto frame = CanonicalFrame::build({1.0, 1.0}, ForcingSpec::constant(1.0), 1.0, 5);
  std::ostringstream out;
  write_frame_csv(out, frame);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "t,x_nh,xdot_nh,G");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 5);
}
