#include "fho/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <boost/numeric/odeint.hpp>

#include "fho/errors.hpp"

namespace fho::oracles {

namespace odeint = boost::numeric::odeint;

OdeState rk_integrate(const OscillatorParams& params, PhaseState z0, const ForcingSpec& spec,
                      double t, OdeTolerance tol) {
  params.validate();
  if (!std::isfinite(t) || t < 0.0) throw DomainError("rk_integrate: requires finite t >= 0");
  using State = std::array<double, 3>;
  const double m = params.mass;
  const double w2 = params.omega * params.omega;

  State y{z0.x, z0.p, 0.0};
  if (t == 0.0) return {z0, 0.0};

  // Within a segment the force is smooth; evaluate it from inside the segment
  // so a jump at the right edge is never sampled.
  std::vector<double> cuts{0.0};
  for (double b : spec.breakpoints(0.0, t)) cuts.push_back(b);
  cuts.push_back(t);

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    auto force = [&](double s) {
      // Clamp to the open segment so one-sided limits are used at its ends.
      const double eps = 1e-12 * (hi - lo);
      return spec(std::clamp(s, lo + eps, hi - eps));
    };
    auto system = [&](const State& s, State& ds, double time) {
      const double k = force(time);
      const double x = s[0];
      const double p = s[1];
      ds[0] = p / m;
      ds[1] = -m * w2 * x + k;
      ds[2] = 0.5 * p * p / m - 0.5 * m * w2 * x * x + x * k;
    };
    auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(tol.abs, tol.rel);
    odeint::integrate_adaptive(stepper, system, y, lo, hi, std::min(1e-3, hi - lo));
  }
  return {{y[0], y[1]}, y[2]};
}

FrameSample rk_frame(const OscillatorParams& params, const ForcingSpec& spec, double t,
                     OdeTolerance tol) {
  const auto s = rk_integrate(params, PhaseState{}, spec, t, tol);
  return {t, s.z.x, s.z.p / params.mass, s.gauge};
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, double tol, unsigned max_depth) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double re = GK::integrate([&](double x) { return f(x).real(); }, a, b, max_depth, tol);
  const double im = GK::integrate([&](double x) { return f(x).imag(); }, a, b, max_depth, tol);
  return {re, im};
}

std::complex<double> gaussian_integral_quadrature(std::complex<double> z) {
  // e^{zx - x^2} = e^{(Re z)^2/4} e^{-(x - Re z/2)^2} e^{i Im z x}
  const double centre = 0.5 * z.real();
  const double half_width = 12.0;
  auto f = [z](double x) { return std::exp(z * x - x * x); };
  // Half-unit panels: the 61-point rule resolves |Im z| <= 5 on each to
  // round-off, so the adaptive recursion never has to engage.
  std::complex<double> sum(0.0, 0.0);
  const int panels = 48;
  const double h = 2.0 * half_width / panels;
  for (int i = 0; i < panels; ++i) {
    const double lo = centre - half_width + i * h;
    sum += integrate_complex(f, lo, lo + h);
  }
  return sum;
}

double laguerre_transition_probability(int n, int m, double lambda) {
  const int lo = std::min(n, m);
  const int hi = std::max(n, m);
  const int d = hi - lo;
  const double l = boost::math::laguerre(static_cast<unsigned>(lo), static_cast<unsigned>(d), lambda);
  const double log_ratio = std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0);
  const double log_pow = d == 0 ? 0.0 : d * std::log(lambda);
  return std::exp(log_ratio + log_pow - lambda) * l * l;
}

double generating_function_coefficient(int n, double x) {
  // Cauchy product of the series of e^{2xu} and e^{-u^2}:
  // [u^n] = sum_j (2x)^{n-2j} / (n-2j)! * (-1)^j / j!
  double sum = 0.0;
  for (int j = 0; 2 * j <= n; ++j) {
    const double term = std::pow(2.0 * x, n - 2 * j) / std::tgamma(n - 2 * j + 1.0) /
                        std::tgamma(j + 1.0);
    sum += (j % 2 == 0) ? term : -term;
  }
  return std::tgamma(n + 1.0) * sum;
}

}  // namespace fho::oracles
