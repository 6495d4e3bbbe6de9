#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "fho/canonical.hpp"
#include "fho/classical.hpp"
#include "fho/forcing.hpp"

namespace fho {

using Complex = std::complex<double>;

/// Uniform periodic grid x_j = x_min + j dx, dx = (x_max - x_min) / points,
/// plus the time step used by the evolution routines.
struct GridSpec {
  double x_min = -12.0;
  double x_max = 12.0;
  std::size_t points = 1024;
  double dt = 1e-3;

  /// x_min < x_max, points >= 64 and a power of two, dt > 0.
  void validate() const;
  double dx() const { return (x_max - x_min) / static_cast<double>(points); }
  double x(std::size_t j) const { return x_min + static_cast<double>(j) * dx(); }
  /// Spacing of the conjugate momentum grid, 2 pi / (points dx).
  double dp() const;

  /// [-12, 12] / sqrt(m w), 1024 points, dt = 1e-3.
  static GridSpec default_for(const OscillatorParams& params);

  bool operator==(const GridSpec&) const = default;
};

class WaveFunction {
 public:
  WaveFunction(GridSpec grid, std::vector<Complex> values);

  static WaveFunction sample(const GridSpec& grid, const std::function<Complex(double)>& f);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t j) const { return values_[j]; }

  /// sum |psi_j|^2 dx
  double norm_squared() const;
  double norm() const;
  WaveFunction normalized() const;

 private:
  GridSpec grid_;
  std::vector<Complex> values_;
};

/// Oscillator eigenfunction Psi_n sampled on the grid.
WaveFunction eigenstate_wave(const OscillatorParams& params, const GridSpec& grid, int n);

/// Discrete version of Psi(p) = (2 pi)^{-1/2} int exp(-i p x) Psi(x) dx on the
/// centred conjugate grid p_k = (k - N/2) dp. Unitary in the grid norm. The
/// result is a WaveFunction whose grid coordinate is momentum.
WaveFunction momentum_representation(const WaveFunction& psi);

/// Band-limited translation psi(x - shift).
WaveFunction translate(const WaveFunction& psi, double shift);

/// d psi / dx by spectral differentiation.
WaveFunction spectral_derivative(const WaveFunction& psi);

/// K psi with K = -(1/2m) d^2/dx^2 + m w^2 x^2 / 2 (spectral kinetic term).
WaveFunction apply_moving_hamiltonian(const OscillatorParams& params, const WaveFunction& psi);

/// <psi, K psi>
double moving_energy(const OscillatorParams& params, const WaveFunction& psi);
/// <psi, H(t) psi> with H(t) = K - x k(t).
double lab_energy(const OscillatorParams& params, const ForcingSpec& spec, const WaveFunction& psi,
                  double t);

/// Probability in the outer 5% of the grid on either side, relative to the norm.
double edge_weight(const WaveFunction& psi);

/// Called after each `every` steps (and at the final time) with the current state.
using EvolutionObserver = std::function<void(double t, const WaveFunction& psi)>;

/// Solves i d psi/dt = [-(1/2m) d^2/dx^2 + m w^2 x^2/2 - x k(t)] psi by Strang
/// splitting: half potential step, spectral kinetic step, half potential step,
/// with k evaluated at the midpoint of each step. Steps never straddle a
/// forcing breakpoint: each interval between breakpoints gets its own step,
/// grid().dt shortened uniformly so that it divides the interval. Throws BoundaryError if the
/// state develops weight near the grid edge.
WaveFunction evolve_lab(const OscillatorParams& params, const ForcingSpec& spec,
                        const WaveFunction& psi0, double t_final,
                        const EvolutionObserver& observer = {}, std::size_t every = 0);

/// evolve_lab with k = 0: evolution under the free oscillator K.
WaveFunction evolve_moving(const OscillatorParams& params, const WaveFunction& phi0,
                           double t_final, const EvolutionObserver& observer = {},
                           std::size_t every = 0);

/// (U_F1 phi)(x) = exp(i theta(x, t)) phi(x - x_nh(t)); moving -> laboratory.
WaveFunction apply_uf1(const CanonicalFrame& frame, const WaveFunction& phi, double t);
/// (U_F2 psi)(xi) = exp(i theta'(xi, t)) psi(xi + x_nh(t)); laboratory -> moving.
WaveFunction apply_uf2(const CanonicalFrame& frame, const WaveFunction& psi, double t);

/// sum conj(psi1) psi2 dx. Throws DomainError on grid mismatch.
Complex overlap(const WaveFunction& psi1, const WaveFunction& psi2);

/// Grid norm of psi1 - psi2.
double distance(const WaveFunction& psi1, const WaveFunction& psi2);

/// min over gamma of || psi1 - exp(i gamma) psi2 ||, the distance with the
/// global phase quotiented out.
double phase_aligned_distance(const WaveFunction& psi1, const WaveFunction& psi2);

/// CSV with header x,re,im,abs2.
void write_state_csv(std::ostream& out, const WaveFunction& psi);

}  // namespace fho
