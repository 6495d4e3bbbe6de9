#include <doctest/doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "fho/errors.hpp"
#include "fho/forcing.hpp"

using namespace fho;

TEST_CASE("evaluate each variant") {
  CHECK(evaluate(ForcingSpec::zero(), 3.7) == 0.0);
  CHECK(evaluate(ForcingSpec::constant(2.0), 5.0) == 2.0);
  CHECK(std::abs(evaluate(ForcingSpec::sinusoid(1.0, std::numbers::pi), 0.5)) < 1e-15);

  const auto pulse = ForcingSpec::pulse(3.0, 1.0, 2.0);
  CHECK(pulse(0.999) == 0.0);
  CHECK(pulse(1.0) == 3.0);
  CHECK(pulse(1.999) == 3.0);
  CHECK(pulse(2.0) == 0.0);

  const auto tab = ForcingSpec::tabulated({{0.0, 0.0}, {1.0, 2.0}, {3.0, -2.0}});
  CHECK(tab(0.5) == doctest::Approx(1.0));
  CHECK(tab(2.0) == doctest::Approx(0.0));
  CHECK(tab(-1.0) == 0.0);
  CHECK(tab(4.0) == 0.0);
}

TEST_CASE("non-finite time is a domain error") {
  CHECK_THROWS_AS(evaluate(ForcingSpec::constant(1.0), std::nan("")), DomainError);
  CHECK_THROWS_AS(evaluate(ForcingSpec::zero(), std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("invalid specs are rejected at construction") {
  CHECK_THROWS_AS(ForcingSpec::constant(std::nan("")), DomainError);
  CHECK_THROWS_AS(ForcingSpec::pulse(1.0, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(ForcingSpec::tabulated({{1.0, 0.0}, {0.5, 1.0}}), DomainError);
  CHECK_THROWS_AS(ForcingSpec::tabulated({}), DomainError);
}

TEST_CASE("abs_integral examples") {
  CHECK(abs_integral(ForcingSpec::zero(), 10.0) == 0.0);
  CHECK(abs_integral(ForcingSpec::constant(2.0), 3.0) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(abs_integral(ForcingSpec::sinusoid(1.0, 2.0 * std::numbers::pi), 1.0) ==
        doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-9));
  CHECK(abs_integral(ForcingSpec::pulse(-2.0, 1.0, 1.5), 3.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("breakpoints lie strictly inside the window") {
  const auto pulse = ForcingSpec::pulse(1.0, 1.0, 2.0);
  CHECK(pulse.breakpoints(0.0, 3.0) == std::vector<double>{1.0, 2.0});
  CHECK(pulse.breakpoints(1.0, 1.5).empty());
  CHECK(ForcingSpec::sinusoid(1.0, 1.0).breakpoints(0.0, 10.0).empty());
}

TEST_CASE("json round trip") {
  for (const auto& spec : {ForcingSpec::zero(), ForcingSpec::constant(1.5),
                           ForcingSpec::sinusoid(1.0, 2.0, 0.3), ForcingSpec::pulse(1.0, 0.5, 1.5),
                           ForcingSpec::tabulated({{0.0, 1.0}, {2.0, 3.0}})}) {
    const nlohmann::json j = spec;
    const auto back = j.get<ForcingSpec>();
    for (double t : {0.0, 0.7, 1.2, 1.9}) CHECK(back(t) == spec(t));
  }
  CHECK_THROWS_AS(nlohmann::json({{"type", "wobble"}}).get<ForcingSpec>(), DomainError);
}
