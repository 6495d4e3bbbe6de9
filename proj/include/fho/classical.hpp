#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "fho/forcing.hpp"

namespace fho {

/// Mass and angular frequency shared by the forced and the free oscillator.
/// omega == 0 is the free-particle limit.
struct OscillatorParams {
  double mass = 1.0;
  double omega = 1.0;

  /// Throws DomainError unless mass > 0 and omega >= 0 (both finite).
  void validate() const;
};

struct PhaseState {
  double x = 0.0;
  double p = 0.0;

  Eigen::Vector2d vec() const { return {x, p}; }
  static PhaseState from(const Eigen::Vector2d& v) { return {v[0], v[1]}; }

  friend PhaseState operator+(PhaseState a, PhaseState b) { return {a.x + b.x, a.p + b.p}; }
  friend PhaseState operator-(PhaseState a, PhaseState b) { return {a.x - b.x, a.p - b.p}; }
};

/// Symplectic 2x2 flow matrix of the unforced oscillator acting on (x, p).
using PropagatorMatrix = Eigen::Matrix2d;

/// U(t) = [[cos wt, sin(wt)/(m w)], [-m w sin wt, cos wt]].
/// The (0,1) entry switches to its Taylor series for |wt| < 1e-6, which also
/// covers the free particle (omega == 0): U(t) = [[1, t/m], [0, 1]].
PropagatorMatrix propagator(const OscillatorParams& params, double t);

/// Generator of the homogeneous flow, dU/dt = generator * U.
Eigen::Matrix2d generator(const OscillatorParams& params);

/// Matrix Q of the conserved quadratic form <z, Q z> = m w^2 x^2/2 + p^2/(2m).
Eigen::Matrix2d quadratic_form(const OscillatorParams& params);

/// Duhamel integral over [t0, t1]: integral of U(t1 - s) (0, k(s)) ds.
PhaseState duhamel(const OscillatorParams& params, const ForcingSpec& spec, double t0,
                   double t1, double tol = 1e-10);

/// Full solution z(t) = U(t) z0 + integral_0^t U(t - s) (0, k(s)) ds.
PhaseState evolve(const OscillatorParams& params, PhaseState z0, const ForcingSpec& spec,
                  double t, double tol = 1e-10);

/// Particular solution with zero initial conditions, z_nh(t).
PhaseState nonhomogeneous(const OscillatorParams& params, const ForcingSpec& spec, double t,
                          double tol = 1e-10);

double quadratic_invariant(const OscillatorParams& params, PhaseState z);

/// Closed-form z_nh(t) for a constant force K:
/// (K (1 - cos wt)/(m w^2), K sin(wt)/w). Requires omega > 0.
PhaseState laboratory_ellipse(const OscillatorParams& params, double K, double t);

struct TrajectorySample {
  double t = 0.0;
  PhaseState z;
  PhaseState z_nh;
};

/// Samples z(t) and z_nh(t) at increasing, non-negative times. Each sample is
/// advanced from the previous one with the group law
/// z(t') = U(t' - t) z(t) + integral_t^t' U(t' - s)(0, k(s)) ds,
/// so long trajectories never integrate over more than one sampling interval.
std::vector<TrajectorySample> trajectory(const OscillatorParams& params, PhaseState z0,
                                         const ForcingSpec& spec, std::span<const double> times,
                                         double tol = 1e-10);

/// CSV with header t,x,p,x_nh,p_nh,invariant. The invariant column is the
/// quadratic form evaluated on z - z_nh.
void write_trajectory_csv(std::ostream& out, const OscillatorParams& params,
                          std::span<const TrajectorySample> samples);

}  // namespace fho
