#pragma once

// Reference computations that share no code path with the closed forms and
// quadratures they check. Used by the test suites and by `fho verify`.

#include <complex>
#include <functional>

#include "fho/canonical.hpp"
#include "fho/classical.hpp"
#include "fho/forcing.hpp"

namespace fho::oracles {

struct OdeTolerance {
  double abs = 1e-13;
  double rel = 1e-13;
};

/// Integrates Hamilton's equations x' = p/m, p' = -m w^2 x + k(t) together
/// with G' = m xdot^2/2 - m w^2 x^2/2 + x k with an adaptive Runge-Kutta-
/// Fehlberg 7(8) stepper, restarting at every forcing breakpoint.
struct OdeState {
  PhaseState z;
  double gauge = 0.0;
};
OdeState rk_integrate(const OscillatorParams& params, PhaseState z0, const ForcingSpec& spec,
                      double t, OdeTolerance tol = {});

inline PhaseState rk_evolve(const OscillatorParams& params, PhaseState z0, const ForcingSpec& spec,
                            double t, OdeTolerance tol = {}) {
  return rk_integrate(params, z0, spec, t, tol).z;
}

/// Frame values (x_nh, xdot_nh, G) at t from the ODE route.
FrameSample rk_frame(const OscillatorParams& params, const ForcingSpec& spec, double t,
                     OdeTolerance tol = {});

/// Integral of a complex function over [a, b] by recursive 61-point
/// Gauss-Kronrod quadrature (Boost.Math), real and imaginary parts separately.
/// The relative tolerance applies per part, so a part that integrates to zero
/// recurses to max_depth.
std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, double tol = 1e-13,
                                       unsigned max_depth = 8);

/// Integral of exp(z x - x^2) over the real line by direct quadrature on a
/// window centred at Re(z)/2 wide enough for the Gaussian to vanish.
std::complex<double> gaussian_integral_quadrature(std::complex<double> z);

/// |<Psi_m, D Psi_n>|^2 for a coherent displacement with |beta|^2 = lambda,
/// from the associated-Laguerre formula
/// (n_<! / n_>!) lambda^{|m-n|} e^{-lambda} [L_{n_<}^{|m-n|}(lambda)]^2.
double laguerre_transition_probability(int n, int m, double lambda);

/// n! times the coefficient of u^n in the Taylor series of exp(2xu - u^2),
/// from the product of the two exponential series.
double generating_function_coefficient(int n, double x);

}  // namespace fho::oracles
