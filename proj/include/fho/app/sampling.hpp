#pragma once

// Seeded generators for randomized checks. Everything is driven by an
// explicit std::mt19937_64 so runs are reproducible.

#include <random>
#include <vector>

#include "fho/classical.hpp"
#include "fho/forcing.hpp"
#include "fho/schrodinger.hpp"

namespace fho::app {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);

/// One of constant, sinusoid, pulse or tabulated, with amplitudes of order
/// `scale` and features inside [0, t_max].
ForcingSpec random_forcing(Rng& rng, double t_max, double scale = 1.0);

/// Normalized superposition of Psi_0 .. Psi_{n_max} with random complex
/// coefficients.
WaveFunction random_superposition(Rng& rng, const OscillatorParams& params, const GridSpec& grid,
                                  int n_max);

/// True if any forcing breakpoint lies within `margin` of t.
bool near_breakpoint(const ForcingSpec& spec, double t, double margin);

}  // namespace fho::app
