#include "fho/app/sampling.hpp"

#include <cmath>

#include "fho/hermite.hpp"

namespace fho::app {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

ForcingSpec random_forcing(Rng& rng, double t_max, double scale) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      return ForcingSpec::constant(uniform(rng, -scale, scale));
    case 1:
      return ForcingSpec::sinusoid(uniform(rng, -scale, scale), uniform(rng, 0.2, 3.0),
                                   uniform(rng, -3.0, 3.0));
    case 2: {
      const double on = uniform(rng, 0.0, 0.5 * t_max);
      const double off = uniform(rng, on + 0.05 * t_max, t_max);
      return ForcingSpec::pulse(uniform(rng, -scale, scale), on, off);
    }
    default: {
      std::vector<std::pair<double, double>> samples;
      const int count = std::uniform_int_distribution<int>(2, 8)(rng);
      double t = uniform(rng, 0.0, 0.2 * t_max);
      for (int i = 0; i < count; ++i) {
        samples.emplace_back(t, uniform(rng, -scale, scale));
        t += uniform(rng, 0.05, 0.3) * t_max;
      }
      return ForcingSpec::tabulated(std::move(samples));
    }
  }
}

WaveFunction random_superposition(Rng& rng, const OscillatorParams& params, const GridSpec& grid,
                                  int n_max) {
  std::vector<Complex> coeffs;
  for (int n = 0; n <= n_max; ++n) coeffs.emplace_back(uniform(rng, -1, 1), uniform(rng, -1, 1));
  return WaveFunction::sample(grid,
                              [&](double x) {
                                const auto psi = eigenstates_upto(params, n_max, x);
                                Complex v(0.0, 0.0);
                                for (int n = 0; n <= n_max; ++n) v += coeffs[n] * psi[n];
                                return v;
                              })
      .normalized();
}

bool near_breakpoint(const ForcingSpec& spec, double t, double margin) {
  return !spec.breakpoints(t - margin, t + margin).empty();
}

}  // namespace fho::app
