#include "fho/classical.hpp"

#include <cmath>
#include <ostream>

#include "fho/errors.hpp"
#include "fho/format.hpp"
#include "fho/quadrature.hpp"

namespace fho {

namespace {

void require_finite_time(double t, const char* where) {
  if (!std::isfinite(t)) throw DomainError(std::string(where) + ": non-finite time");
}

}  // namespace

void OscillatorParams::validate() const {
  if (!std::isfinite(mass) || !(mass > 0.0)) throw DomainError("oscillator: mass must be > 0");
  if (!std::isfinite(omega) || omega < 0.0) throw DomainError("oscillator: omega must be >= 0");
}

PropagatorMatrix propagator(const OscillatorParams& params, double t) {
  params.validate();
  require_finite_time(t, "propagator");
  const double m = params.mass;
  const double w = params.omega;
  const double phase = w * t;

  double sin_over_mw;
  if (std::abs(phase) < 1e-6) {
    // sin(wt)/(m w) = (t/m)(1 - (wt)^2/6 + ...)
    sin_over_mw = t / m * (1.0 - phase * phase / 6.0);
  } else {
    sin_over_mw = std::sin(phase) / (m * w);
  }
  const double c = std::cos(phase);
  PropagatorMatrix u;
  u << c, sin_over_mw, -m * w * std::sin(phase), c;
  return u;
}

Eigen::Matrix2d generator(const OscillatorParams& params) {
  params.validate();
  Eigen::Matrix2d h;
  h << 0.0, 1.0 / params.mass, -params.mass * params.omega * params.omega, 0.0;
  return h;
}

Eigen::Matrix2d quadratic_form(const OscillatorParams& params) {
  params.validate();
  Eigen::Matrix2d q = Eigen::Matrix2d::Zero();
  q(0, 0) = 0.5 * params.mass * params.omega * params.omega;
  q(1, 1) = 0.5 / params.mass;
  return q;
}

PhaseState duhamel(const OscillatorParams& params, const ForcingSpec& spec, double t0, double t1,
                   double tol) {
  params.validate();
  require_finite_time(t0, "duhamel");
  require_finite_time(t1, "duhamel");
  if (spec.is_zero() || t0 == t1) return {};

  auto integrand = [&](double s) {
    const double k = spec(s);
    const auto u = propagator(params, t1 - s);
    return quad::Values<2>{u(0, 1) * k, u(1, 1) * k};
  };
  const auto cuts = spec.breakpoints(std::min(t0, t1), std::max(t0, t1));
  const auto v = quad::integrate<2>(integrand, t0, t1, cuts, {.tol = tol});
  return {v[0], v[1]};
}

PhaseState evolve(const OscillatorParams& params, PhaseState z0, const ForcingSpec& spec, double t,
                  double tol) {
  require_finite_time(t, "evolve");
  if (t < 0.0) throw DomainError("evolve: requires t >= 0");
  const auto homogeneous = PhaseState::from(propagator(params, t) * z0.vec());
  return homogeneous + duhamel(params, spec, 0.0, t, tol);
}

PhaseState nonhomogeneous(const OscillatorParams& params, const ForcingSpec& spec, double t,
                          double tol) {
  return evolve(params, PhaseState{}, spec, t, tol);
}

double quadratic_invariant(const OscillatorParams& params, PhaseState z) {
  params.validate();
  const double m = params.mass;
  const double w = params.omega;
  return 0.5 * m * w * w * z.x * z.x + 0.5 * z.p * z.p / m;
}

PhaseState laboratory_ellipse(const OscillatorParams& params, double K, double t) {
  params.validate();
  require_finite_time(t, "laboratory_ellipse");
  if (params.omega == 0.0) throw DomainError("laboratory_ellipse: degenerate at omega = 0");
  const double w = params.omega;
  return {K * (1.0 - std::cos(w * t)) / (params.mass * w * w), K * std::sin(w * t) / w};
}

std::vector<TrajectorySample> trajectory(const OscillatorParams& params, PhaseState z0,
                                         const ForcingSpec& spec, std::span<const double> times,
                                         double tol) {
  params.validate();
  std::vector<TrajectorySample> out;
  out.reserve(times.size());
  double t_prev = 0.0;
  PhaseState z = z0;
  PhaseState z_nh{};
  for (double t : times) {
    require_finite_time(t, "trajectory");
    if (t < t_prev) throw DomainError("trajectory: times must be non-negative and increasing");
    if (t > t_prev) {
      const auto u = propagator(params, t - t_prev);
      const auto forced = duhamel(params, spec, t_prev, t, tol);
      z = PhaseState::from(u * z.vec()) + forced;
      z_nh = PhaseState::from(u * z_nh.vec()) + forced;
      t_prev = t;
    }
    out.push_back({t, z, z_nh});
  }
  return out;
}

void write_trajectory_csv(std::ostream& out, const OscillatorParams& params,
                          std::span<const TrajectorySample> samples) {
  out << "t,x,p,x_nh,p_nh,invariant\n";
  for (const auto& s : samples) {
    csv_row(out, {s.t, s.z.x, s.z.p, s.z_nh.x, s.z_nh.p,
                  quadratic_invariant(params, s.z - s.z_nh)});
  }
}

}  // namespace fho
