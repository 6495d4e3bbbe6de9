#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "fho/canonical.hpp"

namespace fho {

/// Dimensionless displacement of the moving frame:
/// a = sqrt(m w) x_nh, b = xdot_nh sqrt(m / w).
struct DisplacementParams {
  double a = 0.0;
  double b = 0.0;

  static DisplacementParams from_sample(const OscillatorParams& params, const FrameSample& s);
  static DisplacementParams from_frame(const CanonicalFrame& frame, double t);

  /// Mean of the ground-state excitation distribution, (a^2 + b^2) / 2.
  double lambda() const { return 0.5 * (a * a + b * b); }
};

/// <Psi_m, Psi_n(t)> up to the global phase exp(-i E_n t) exp(-i G(t)), in the
/// convention of the overlap integral
///   C(m,n) int H_m(x+a) H_n(x) exp(-i x b) exp(-(x+a)^2/2 - x^2/2) dx,
///   C(m,n) = (2^{m+n} m! n! pi)^{-1/2}.
/// Closed form: the coefficient of u^n v^m in
///   sqrt(pi) exp(2uv + v(a - ib) - u(a + ib) - (a^2 + b^2)/4 + iab/2),
/// a finite sum over k <= min(n, m). Factorials and powers are handled in
/// log space and the alternating sum in extended precision, so large n, m
/// neither overflow nor lose more than a few digits to cancellation.
std::complex<double> overlap_amplitude(int n, int m, DisplacementParams d);

struct OverlapOracleResult {
  std::complex<double> value;
  int order = 0;
  /// Set when order < n + m + 10.
  bool accuracy_warning = false;
};

/// The same overlap integral by direct Gauss-Hermite quadrature after
/// completing the square (x -> y - a/2).
OverlapOracleResult overlap_quadrature_oracle(int n, int m, DisplacementParams d, int order);

double transition_probability(int n, int m, DisplacementParams d);
double transition_probability(int n, int m, const CanonicalFrame& frame, double t);

struct TransitionRow {
  int n = 0;
  double t = 0.0;
  double lambda = 0.0;
  std::vector<double> probabilities;  // indexed by m
  int truncation_m = 0;               // last m included
  double tail_bound = 0.0;            // 1 - sum of probabilities, clamped at 0
};

/// P_{n,m} for m = 0, 1, ... until the cumulative sum exceeds 1 - tail_tol.
/// Throws NumericError if that has not happened by m = 500.
TransitionRow probability_row(int n, DisplacementParams d, double tail_tol);
TransitionRow probability_row(int n, const CanonicalFrame& frame, double t, double tail_tol);

/// |<Psi_0, Psi_0(t)>|^2 = exp(-(a^2 + b^2)/2).
double ground_state_survival(DisplacementParams d);
double ground_state_survival(const CanonicalFrame& frame, double t);

void to_json(nlohmann::json& j, const TransitionRow& row);

/// Long-format rows `t,n,m,P` (header written by the caller).
void write_transition_rows_csv(std::ostream& out, const TransitionRow& row);

}  // namespace fho
