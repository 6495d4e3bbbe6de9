#include "fho/canonical.hpp"

#include <cmath>
#include <ostream>

#include "fho/errors.hpp"
#include "fho/format.hpp"
#include "fho/quadrature.hpp"

namespace fho {

namespace {

double gauge_rate(const OscillatorParams& params, double x, double p, double k) {
  const double m = params.mass;
  const double w = params.omega;
  return 0.5 * p * p / m - 0.5 * m * w * w * x * x + x * k;
}

}  // namespace

CanonicalFrame CanonicalFrame::build(const OscillatorParams& params, const ForcingSpec& spec,
                                     double t_max, std::size_t grid_points, double tol) {
  params.validate();
  if (!std::isfinite(t_max) || !(t_max > 0.0)) throw DomainError("build_frame: t_max must be > 0");
  if (grid_points < 2) throw DomainError("build_frame: grid_points must be >= 2");

  CanonicalFrame frame(params, spec, t_max, tol);
  frame.samples_.reserve(grid_points);
  frame.samples_.push_back(FrameSample{});
  const double step = t_max / static_cast<double>(grid_points - 1);
  for (std::size_t i = 1; i < grid_points; ++i) {
    const double t = i + 1 == grid_points ? t_max : step * static_cast<double>(i);
    frame.samples_.push_back(frame.advance(frame.samples_.back(), t));
  }
  return frame;
}

FrameSample CanonicalFrame::advance(const FrameSample& from, double t) const {
  const double m = params_.mass;
  const PhaseState z0{from.x_nh, m * from.xdot_nh};
  if (t == from.t) return from;

  auto state_at = [&](double s) {
    return PhaseState::from(propagator(params_, s - from.t) * z0.vec()) +
           duhamel(params_, spec_, from.t, s, tol_);
  };
  const auto z = state_at(t);

  double gauge = from.gauge;
  if (!spec_.is_zero()) {
    auto rate = [&](double s) {
      const auto zs = state_at(s);
      return gauge_rate(params_, zs.x, zs.p, spec_(s));
    };
    const auto cuts = spec_.breakpoints(std::min(from.t, t), std::max(from.t, t));
    // The rate is a difference of terms of size term_scale, so its relative
    // accuracy degrades where they cancel.
    auto terms = [&](PhaseState zs, double k) {
      const double w = params_.omega;
      return 0.5 * zs.p * zs.p / m + 0.5 * m * w * w * zs.x * zs.x + std::abs(zs.x * k);
    };
    const double term_scale = std::max(terms(z0, spec_(from.t)), terms(z, spec_(t)));
    gauge += quad::integrate_scalar(
        rate, from.t, t, cuts, {.tol = tol_, .abs_tol = tol_ * std::abs(t - from.t) * term_scale});
  }
  return FrameSample{t, z.x, z.p / m, gauge};
}

std::size_t CanonicalFrame::node_below(double t) const {
  const double step = t_max_ / static_cast<double>(samples_.size() - 1);
  auto i = static_cast<std::size_t>(std::floor(t / step));
  if (i >= samples_.size() - 1) i = samples_.size() - 2;
  while (i > 0 && samples_[i].t > t) --i;
  return i;
}

FrameSample CanonicalFrame::at(double t) const {
  if (!std::isfinite(t) || t < 0.0 || t > t_max_) {
    throw DomainError("canonical frame: t outside [0, t_max]");
  }
  const auto i = node_below(t);
  if (samples_[i].t == t) return samples_[i];
  if (samples_[i + 1].t == t) return samples_[i + 1];
  return advance(samples_[i], t);
}

FrameSample CanonicalFrame::interpolate(double t) const {
  if (!std::isfinite(t) || t < 0.0 || t > t_max_) {
    throw DomainError("canonical frame: t outside [0, t_max]");
  }
  const auto i = node_below(t);
  const auto& a = samples_[i];
  const auto& b = samples_[i + 1];
  const double h = b.t - a.t;
  const double s = (t - a.t) / h;
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);

  const double m = params_.mass;
  const double w2 = params_.omega * params_.omega;
  // Time derivatives at the nodes from the equations of motion.
  auto accel = [&](const FrameSample& f) { return (spec_(f.t) - m * w2 * f.x_nh) / m; };
  auto grate = [&](const FrameSample& f) {
    return gauge_rate(params_, f.x_nh, m * f.xdot_nh, spec_(f.t));
  };
  auto hermite = [&](double ya, double da, double yb, double db) {
    return h00 * ya + h10 * h * da + h01 * yb + h11 * h * db;
  };
  return FrameSample{t, hermite(a.x_nh, a.xdot_nh, b.x_nh, b.xdot_nh),
                     hermite(a.xdot_nh, accel(a), b.xdot_nh, accel(b)),
                     hermite(a.gauge, grate(a), b.gauge, grate(b))};
}

double theta(const CanonicalFrame& frame, double x, double t) {
  const auto f = frame.at(t);
  return (x - f.x_nh) * f.p_nh(frame.params().mass) + f.gauge;
}

double theta_prime(const CanonicalFrame& frame, double xi, double t) {
  const auto f = frame.at(t);
  return -(xi + f.x_nh) * f.p_nh(frame.params().mass) + f.gauge;
}

double f1(const CanonicalFrame& frame, double x, double eta, double t) {
  const auto f = frame.at(t);
  return (x - f.x_nh) * (eta + f.p_nh(frame.params().mass)) + f.gauge;
}

double f2(const CanonicalFrame& frame, double xi, double p, double t) {
  const auto f = frame.at(t);
  return (xi + f.x_nh) * (p - f.p_nh(frame.params().mass)) + f.gauge;
}

PhaseState to_moving(const CanonicalFrame& frame, PhaseState z_lab, double t) {
  const auto f = frame.at(t);
  return {z_lab.x - f.x_nh, z_lab.p - f.p_nh(frame.params().mass)};
}

PhaseState to_lab(const CanonicalFrame& frame, PhaseState z_moving, double t) {
  const auto f = frame.at(t);
  return {z_moving.x + f.x_nh, z_moving.p + f.p_nh(frame.params().mass)};
}

double lab_hamiltonian(const OscillatorParams& params, const ForcingSpec& spec, PhaseState z,
                       double t) {
  const double m = params.mass;
  const double w = params.omega;
  return 0.5 * z.p * z.p / m + 0.5 * m * w * w * z.x * z.x - z.x * spec(t);
}

double moving_hamiltonian(const OscillatorParams& params, PhaseState zeta) {
  return quadratic_invariant(params, zeta);
}

void write_frame_csv(std::ostream& out, const CanonicalFrame& frame) {
  out << "t,x_nh,xdot_nh,G\n";
  for (const auto& s : frame.samples()) csv_row(out, {s.t, s.x_nh, s.xdot_nh, s.gauge});
}

}  // namespace fho
