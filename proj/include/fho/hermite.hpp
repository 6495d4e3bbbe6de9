#pragma once

#include <complex>
#include <vector>

#include "fho/classical.hpp"

namespace fho {

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_poly(int n, double x);

/// Partial sum of the generating function: sum_{n<=N} u^n H_n(x) / n!.
double generating_function_partial(double x, double u, int N);

/// Closed form of the integral of exp(z x - x^2) over the real line:
/// sqrt(pi) exp(z^2 / 4).
std::complex<double> gaussian_integral(std::complex<double> z);

/// Normalized oscillator eigenfunction
/// Psi_n(x) = (2^n n!)^{-1/2} (m w / pi)^{1/4} H_n(sqrt(m w) x) exp(-m w x^2 / 2).
/// Uses the normalized recurrence with log-magnitude rescaling, so large n
/// and large |x| neither overflow nor lose the Gaussian tail. Requires w > 0.
double eigenstate(const OscillatorParams& params, int n, double x);

/// Psi_0(x) ... Psi_{n_max}(x) in one recurrence pass.
std::vector<double> eigenstates_upto(const OscillatorParams& params, int n_max, double x);

/// E_n = w (n + 1/2), hbar = 1.
double eigen_energy(const OscillatorParams& params, int n);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for weight exp(-x^2), exact for polynomial degree
/// <= 2 order - 1. Nodes from the symmetric tridiagonal (Golub-Welsch)
/// eigenproblem, polished by Newton steps on the orthonormal recurrence;
/// weights from w_i = 1 / (n p_{n-1}(x_i)^2). Order must lie in [1, 200].
/// Rules are cached; the returned reference stays valid for the program's
/// lifetime.
const QuadratureRule& gauss_hermite_rule(int order);

}  // namespace fho
