#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "fho/classical.hpp"
#include "fho/forcing.hpp"

namespace fho {

/// Moving-frame data at one instant: the non-homogeneous solution and the
/// gauge term G(t) of the generating function.
struct FrameSample {
  double t = 0.0;
  double x_nh = 0.0;
  double xdot_nh = 0.0;
  double gauge = 0.0;

  double p_nh(double mass) const { return mass * xdot_nh; }
};

/// The canonical frame moving with z_nh(t) over [0, t_max].
///
/// G(t) = integral_0^t [m xdot^2/2 - m w^2 x^2/2 + x k] ds makes the
/// transformed Hamiltonian the free oscillator K = eta^2/(2m) + m w^2 xi^2/2.
/// Samples on a uniform grid are cached at build time; at() evaluates exactly
/// by integrating forward from the nearest preceding grid node, interpolate()
/// uses cubic Hermite interpolation between nodes.
class CanonicalFrame {
 public:
  static CanonicalFrame build(const OscillatorParams& params, const ForcingSpec& spec,
                              double t_max, std::size_t grid_points, double tol = 1e-12);

  const OscillatorParams& params() const noexcept { return params_; }
  const ForcingSpec& forcing() const noexcept { return spec_; }
  double t_max() const noexcept { return t_max_; }
  double tol() const noexcept { return tol_; }
  std::span<const FrameSample> samples() const noexcept { return samples_; }

  /// Throws DomainError for t outside [0, t_max].
  FrameSample at(double t) const;
  FrameSample interpolate(double t) const;

 private:
  CanonicalFrame(OscillatorParams params, ForcingSpec spec, double t_max, double tol)
      : params_(params), spec_(std::move(spec)), t_max_(t_max), tol_(tol) {}

  std::size_t node_below(double t) const;
  FrameSample advance(const FrameSample& from, double t) const;

  OscillatorParams params_;
  ForcingSpec spec_;
  double t_max_ = 0.0;
  double tol_ = 1e-12;
  std::vector<FrameSample> samples_;
};

/// Phase of U_F1: (x - x_nh) m xdot_nh + G.
double theta(const CanonicalFrame& frame, double x, double t);
/// Phase of U_F2: -(xi + x_nh) m xdot_nh + G.
double theta_prime(const CanonicalFrame& frame, double xi, double t);

/// F1(x, eta, t) = (x - x_nh)(eta + m xdot_nh) + G.
double f1(const CanonicalFrame& frame, double x, double eta, double t);
/// F2(xi, p, t) = (xi + x_nh)(p - m xdot_nh) + G.
double f2(const CanonicalFrame& frame, double xi, double p, double t);

/// Laboratory (x, p) -> moving (xi, eta) = (x - x_nh, p - m xdot_nh).
PhaseState to_moving(const CanonicalFrame& frame, PhaseState z_lab, double t);
PhaseState to_lab(const CanonicalFrame& frame, PhaseState z_moving, double t);

/// Laboratory Hamiltonian H(x, p, t) and moving-frame Hamiltonian K(xi, eta).
double lab_hamiltonian(const OscillatorParams& params, const ForcingSpec& spec, PhaseState z,
                       double t);
double moving_hamiltonian(const OscillatorParams& params, PhaseState zeta);

/// CSV with header t,x_nh,xdot_nh,G over the cached grid.
void write_frame_csv(std::ostream& out, const CanonicalFrame& frame);

}  // namespace fho
