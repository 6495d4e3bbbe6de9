#include "fho/schrodinger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <ostream>

#include "fft.hpp"
#include "fho/errors.hpp"
#include "fho/format.hpp"
#include "fho/hermite.hpp"

namespace fho {

namespace {

constexpr double kEdgeFraction = 0.05;
constexpr double kEdgeTolerance = 1e-10;
constexpr std::size_t kBoundaryCheckEvery = 64;

void require_same_grid(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.grid() == b.grid())) throw DomainError("wavefunction: grid mismatch");
}

void check_boundary(const WaveFunction& psi, const char* where) {
  const double w = edge_weight(psi);
  if (w > kEdgeTolerance) {
    throw BoundaryError(std::string(where) + ": weight " + format_double(w) +
                        " within 5% of the grid boundary");
  }
}

// Applies multiplier(p_k) to the spectrum of psi, with p_k the signed
// angular wavenumbers of the grid.
template <class Multiplier>
std::vector<Complex> spectral_filter(const WaveFunction& psi, Multiplier&& multiplier) {
  const std::size_t n = psi.size();
  detail::Fft fft(n);
  auto buf = fft.buffer();
  std::copy(psi.values().begin(), psi.values().end(), buf.begin());
  fft.forward();
  const double dp = psi.grid().dp();
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    buf[k] *= multiplier(static_cast<double>(detail::signed_index(k, n)) * dp, k) * inv_n;
  }
  fft.backward();
  return {buf.begin(), buf.end()};
}

using Potential = std::function<double(double x, double t)>;

// Steps are laid out separately on each interval between consecutive
// breakpoints, so the midpoint force never straddles a jump or kink of k.
WaveFunction split_operator(const OscillatorParams& params, const Potential& potential,
                            const WaveFunction& psi0, double t_final,
                            const std::vector<double>& breakpoints,
                            const EvolutionObserver& observer, std::size_t every) {
  params.validate();
  const auto& grid = psi0.grid();
  grid.validate();
  if (!std::isfinite(t_final) || t_final < 0.0) {
    throw DomainError("evolve: t_final must be finite and >= 0");
  }
  check_boundary(psi0, "evolve");
  if (t_final == 0.0) {
    if (observer) observer(0.0, psi0);
    return psi0;
  }

  std::vector<double> edges{0.0};
  for (double b : breakpoints) {
    if (b > 0.0 && b < t_final) edges.push_back(b);
  }
  edges.push_back(t_final);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const std::size_t n = grid.points;
  detail::Fft fft(n);
  auto buf = fft.buffer();
  std::copy(psi0.values().begin(), psi0.values().end(), buf.begin());

  const double dp = grid.dp();
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<Complex> kinetic(n);
  std::vector<double> xs(n);
  for (std::size_t j = 0; j < n; ++j) xs[j] = grid.x(j);

  std::vector<Complex> half_potential(n);
  auto snapshot = [&] { return WaveFunction(grid, {buf.begin(), buf.end()}); };

  std::size_t global_step = 0;
  for (std::size_t seg = 0; seg + 1 < edges.size(); ++seg) {
    const double t0 = edges[seg];
    const double length = edges[seg + 1] - t0;
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(length / grid.dt - 1e-9)));
    const double dt = length / static_cast<double>(steps);
    for (std::size_t k = 0; k < n; ++k) {
      const double p = static_cast<double>(detail::signed_index(k, n)) * dp;
      kinetic[k] = std::polar(inv_n, -0.5 * p * p / params.mass * dt);
    }

    for (std::size_t step = 0; step < steps; ++step) {
      const double t_mid = t0 + (static_cast<double>(step) + 0.5) * dt;
      for (std::size_t j = 0; j < n; ++j) {
        half_potential[j] = std::polar(1.0, -0.5 * dt * potential(xs[j], t_mid));
        buf[j] *= half_potential[j];
      }
      fft.forward();
      for (std::size_t k = 0; k < n; ++k) buf[k] *= kinetic[k];
      fft.backward();
      for (std::size_t j = 0; j < n; ++j) buf[j] *= half_potential[j];

      ++global_step;
      const bool last = seg + 2 == edges.size() && step + 1 == steps;
      if (last || global_step % kBoundaryCheckEvery == 0) check_boundary(snapshot(), "evolve");
      if (observer && every > 0 && (global_step % every == 0 || last)) {
        const double t = step + 1 == steps ? edges[seg + 1] : t0 + static_cast<double>(step + 1) * dt;
        observer(t, snapshot());
      }
    }
  }
  return snapshot();
}

}  // namespace

void GridSpec::validate() const {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw DomainError("grid: requires x_min < x_max");
  }
  if (points < 64 || !std::has_single_bit(points)) {
    throw DomainError("grid: points must be a power of two >= 64");
  }
  if (!std::isfinite(dt) || !(dt > 0.0)) throw DomainError("grid: dt must be > 0");
}

double GridSpec::dp() const {
  return 2.0 * std::numbers::pi / (static_cast<double>(points) * dx());
}

GridSpec GridSpec::default_for(const OscillatorParams& params) {
  params.validate();
  if (!(params.omega > 0.0)) throw DomainError("grid: default grid requires omega > 0");
  const double half_width = 12.0 / std::sqrt(params.mass * params.omega);
  return GridSpec{-half_width, half_width, 1024, 1e-3};
}

WaveFunction::WaveFunction(GridSpec grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.points) throw DomainError("wavefunction: size does not match grid");
}

WaveFunction WaveFunction::sample(const GridSpec& grid, const std::function<Complex(double)>& f) {
  grid.validate();
  std::vector<Complex> v(grid.points);
  for (std::size_t j = 0; j < grid.points; ++j) v[j] = f(grid.x(j));
  return WaveFunction(grid, std::move(v));
}

double WaveFunction::norm_squared() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return s * grid_.dx();
}

double WaveFunction::norm() const { return std::sqrt(norm_squared()); }

WaveFunction WaveFunction::normalized() const {
  const double nrm = norm();
  if (!(nrm > 0.0)) throw DomainError("wavefunction: cannot normalize the zero state");
  auto v = values_;
  for (auto& c : v) c /= nrm;
  return WaveFunction(grid_, std::move(v));
}

WaveFunction eigenstate_wave(const OscillatorParams& params, const GridSpec& grid, int n) {
  return WaveFunction::sample(grid, [&](double x) { return Complex(eigenstate(params, n, x)); });
}

WaveFunction momentum_representation(const WaveFunction& psi) {
  const auto& grid = psi.grid();
  grid.validate();
  const std::size_t n = grid.points;
  detail::Fft fft(n);
  auto buf = fft.buffer();
  std::copy(psi.values().begin(), psi.values().end(), buf.begin());
  fft.forward();

  const double dp = grid.dp();
  const double scale = grid.dx() / std::sqrt(2.0 * std::numbers::pi);
  std::vector<Complex> out(n);
  for (std::size_t c = 0; c < n; ++c) {
    // Centred index c <-> signed frequency c - n/2 <-> DFT bin (c + n/2) mod n.
    const double p = (static_cast<double>(c) - static_cast<double>(n / 2)) * dp;
    const std::size_t k = (c + n / 2) % n;
    out[c] = scale * std::polar(1.0, -p * grid.x_min) * buf[k];
  }
  const double half = static_cast<double>(n / 2) * dp;
  return WaveFunction(GridSpec{-half, half, n, grid.dt}, std::move(out));
}

WaveFunction translate(const WaveFunction& psi, double shift) {
  if (!std::isfinite(shift)) throw DomainError("translate: non-finite shift");
  if (shift == 0.0) return psi;
  auto v = spectral_filter(psi, [shift](double p, std::size_t) { return std::polar(1.0, -p * shift); });
  return WaveFunction(psi.grid(), std::move(v));
}

WaveFunction spectral_derivative(const WaveFunction& psi) {
  const std::size_t n = psi.size();
  auto v = spectral_filter(psi, [n](double p, std::size_t k) {
    return k == n / 2 ? Complex(0.0) : Complex(0.0, p);
  });
  return WaveFunction(psi.grid(), std::move(v));
}

WaveFunction apply_moving_hamiltonian(const OscillatorParams& params, const WaveFunction& psi) {
  params.validate();
  const double m = params.mass;
  auto v = spectral_filter(psi, [m](double p, std::size_t) { return Complex(0.5 * p * p / m); });
  const double c = 0.5 * m * params.omega * params.omega;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double x = psi.grid().x(j);
    v[j] += c * x * x * psi[j];
  }
  return WaveFunction(psi.grid(), std::move(v));
}

double moving_energy(const OscillatorParams& params, const WaveFunction& psi) {
  return overlap(psi, apply_moving_hamiltonian(params, psi)).real();
}

double lab_energy(const OscillatorParams& params, const ForcingSpec& spec, const WaveFunction& psi,
                  double t) {
  const double k = spec(t);
  double coupling = 0.0;
  for (std::size_t j = 0; j < psi.size(); ++j) coupling += psi.grid().x(j) * std::norm(psi[j]);
  return moving_energy(params, psi) - k * coupling * psi.grid().dx();
}

double edge_weight(const WaveFunction& psi) {
  const std::size_t n = psi.size();
  const auto band = static_cast<std::size_t>(std::ceil(kEdgeFraction * static_cast<double>(n)));
  double edge = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double w = std::norm(psi[j]);
    total += w;
    if (j < band || j >= n - band) edge += w;
  }
  return total > 0.0 ? edge / total : 0.0;
}

WaveFunction evolve_lab(const OscillatorParams& params, const ForcingSpec& spec,
                        const WaveFunction& psi0, double t_final, const EvolutionObserver& observer,
                        std::size_t every) {
  const double c = 0.5 * params.mass * params.omega * params.omega;
  auto potential = [&spec, c](double x, double t) { return c * x * x - x * spec(t); };
  const auto cuts = std::isfinite(t_final) && t_final > 0.0 ? spec.breakpoints(0.0, t_final)
                                                            : std::vector<double>{};
  return split_operator(params, potential, psi0, t_final, cuts, observer, every);
}

WaveFunction evolve_moving(const OscillatorParams& params, const WaveFunction& phi0,
                           double t_final, const EvolutionObserver& observer, std::size_t every) {
  const double c = 0.5 * params.mass * params.omega * params.omega;
  auto potential = [c](double x, double) { return c * x * x; };
  return split_operator(params, potential, phi0, t_final, {}, observer, every);
}

WaveFunction apply_uf1(const CanonicalFrame& frame, const WaveFunction& phi, double t) {
  const auto f = frame.at(t);
  const double p_nh = f.p_nh(frame.params().mass);
  check_boundary(phi, "apply_uf1");
  const auto shifted = translate(phi, f.x_nh);
  std::vector<Complex> v(shifted.values().begin(), shifted.values().end());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double x = phi.grid().x(j);
    v[j] *= std::polar(1.0, (x - f.x_nh) * p_nh + f.gauge);
  }
  WaveFunction out(phi.grid(), std::move(v));
  check_boundary(out, "apply_uf1");
  return out;
}

WaveFunction apply_uf2(const CanonicalFrame& frame, const WaveFunction& psi, double t) {
  const auto f = frame.at(t);
  const double p_nh = f.p_nh(frame.params().mass);
  check_boundary(psi, "apply_uf2");
  const auto shifted = translate(psi, -f.x_nh);
  std::vector<Complex> v(shifted.values().begin(), shifted.values().end());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double xi = psi.grid().x(j);
    v[j] *= std::polar(1.0, -(xi + f.x_nh) * p_nh + f.gauge);
  }
  WaveFunction out(psi.grid(), std::move(v));
  check_boundary(out, "apply_uf2");
  return out;
}

Complex overlap(const WaveFunction& psi1, const WaveFunction& psi2) {
  require_same_grid(psi1, psi2);
  Complex s(0.0, 0.0);
  for (std::size_t j = 0; j < psi1.size(); ++j) s += std::conj(psi1[j]) * psi2[j];
  return s * psi1.grid().dx();
}

double distance(const WaveFunction& psi1, const WaveFunction& psi2) {
  require_same_grid(psi1, psi2);
  double s = 0.0;
  for (std::size_t j = 0; j < psi1.size(); ++j) s += std::norm(psi1[j] - psi2[j]);
  return std::sqrt(s * psi1.grid().dx());
}

double phase_aligned_distance(const WaveFunction& psi1, const WaveFunction& psi2) {
  const Complex ov = overlap(psi2, psi1);
  const Complex phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex(1.0);
  double s = 0.0;
  for (std::size_t j = 0; j < psi1.size(); ++j) s += std::norm(psi1[j] - phase * psi2[j]);
  return std::sqrt(s * psi1.grid().dx());
}

void write_state_csv(std::ostream& out, const WaveFunction& psi) {
  out << "x,re,im,abs2\n";
  for (std::size_t j = 0; j < psi.size(); ++j) {
    csv_row(out, {psi.grid().x(j), psi[j].real(), psi[j].imag(), std::norm(psi[j])});
  }
}

}  // namespace fho
