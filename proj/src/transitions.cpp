#include "fho/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "fho/errors.hpp"
#include "fho/format.hpp"
#include "fho/hermite.hpp"

namespace fho {

namespace {

using cplx = std::complex<double>;

constexpr int kMaxRowLength = 500;

void require_quantum_numbers(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("transitions: quantum numbers must be >= 0");
}

double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

}  // namespace

DisplacementParams DisplacementParams::from_sample(const OscillatorParams& params,
                                                   const FrameSample& s) {
  params.validate();
  if (!(params.omega > 0.0)) throw DomainError("displacement: requires omega > 0");
  const double m = params.mass;
  const double w = params.omega;
  return {std::sqrt(m * w) * s.x_nh, s.xdot_nh * std::sqrt(m / w)};
}

DisplacementParams DisplacementParams::from_frame(const CanonicalFrame& frame, double t) {
  return from_sample(frame.params(), frame.at(t));
}

std::complex<double> overlap_amplitude(int n, int m, DisplacementParams d) {
  require_quantum_numbers(n, m);
  const cplx alpha(d.a, -d.b);
  if (alpha == cplx(0.0, 0.0)) return n == m ? cplx(1.0, 0.0) : cplx(0.0, 0.0);

  // A = sqrt(n! m! / 2^{n+m}) e^{c} sum_k 2^k alpha^{m-k} (-conj alpha)^{n-k}
  //                                     / (k! (m-k)! (n-k)!)
  // Every term carries alpha^{m-n} |alpha|^{2(min-k)} up to the sign
  // (-1)^{n-k}, so the sum is real after pulling out the phase (m-n) arg alpha.
  // Term magnitudes t_k are accumulated as logs relative to t_0 and the
  // alternating sum is formed in extended precision.
  const int lo = std::min(n, m);
  const int hi = std::max(n, m);
  const long double r = static_cast<long double>(d.a) * d.a + static_cast<long double>(d.b) * d.b;
  const long double log_r = std::log(r);

  std::vector<long double> rel(lo + 1, 0.0L);
  for (int k = 0; k < lo; ++k) {
    rel[k + 1] = rel[k] + std::log(2.0L * (hi - k) * (lo - k) / (static_cast<long double>(k + 1) * r));
  }
  const long double peak = *std::max_element(rel.begin(), rel.end());
  long double sum = 0.0L;
  for (int k = 0; k <= lo; ++k) {
    const long double term = std::exp(rel[k] - peak);
    sum += ((n - k) % 2 == 0) ? term : -term;
  }
  if (sum == 0.0L) return {0.0, 0.0};

  long double log_mag = 0.5L * (std::lgamma(static_cast<long double>(n) + 1) +
                                std::lgamma(static_cast<long double>(m) + 1) -
                                (n + m) * std::numbers::ln2_v<long double>);
  log_mag += 0.5L * (hi - lo) * log_r;                   // |alpha|^{|m-n|}
  log_mag += lo * log_r - std::lgamma(static_cast<long double>(hi) + 1) -
             std::lgamma(static_cast<long double>(lo) + 1);  // t_0
  log_mag += peak + std::log(std::abs(sum)) - 0.25L * r;
  const double phase = (m - n) * std::arg(alpha) + 0.5 * d.a * d.b + (sum < 0 ? std::numbers::pi : 0.0);
  return std::polar(static_cast<double>(std::exp(log_mag)), phase);
}

OverlapOracleResult overlap_quadrature_oracle(int n, int m, DisplacementParams d, int order) {
  require_quantum_numbers(n, m);
  const auto& rule = gauss_hermite_rule(order);
  // -(x+a)^2/2 - x^2/2 = -(x + a/2)^2 - a^2/4; with y = x + a/2 the integrand
  // becomes H_m(y + a/2) H_n(y - a/2) exp(-i b (y - a/2)) exp(-a^2/4) e^{-y^2}.
  const double half_a = 0.5 * d.a;
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = rule.nodes[i];
    const double poly = hermite_poly(m, y + half_a) * hermite_poly(n, y - half_a);
    sum += rule.weights[i] * poly * std::exp(cplx(0.0, -d.b * (y - half_a)));
  }
  const double log_c =
      -0.5 * ((n + m) * std::numbers::ln2 + log_factorial(n) + log_factorial(m) +
              std::log(std::numbers::pi));
  const cplx value = sum * std::exp(log_c - 0.25 * d.a * d.a);
  return {value, order, order < n + m + 10};
}

double transition_probability(int n, int m, DisplacementParams d) {
  return std::norm(overlap_amplitude(n, m, d));
}

double transition_probability(int n, int m, const CanonicalFrame& frame, double t) {
  return transition_probability(n, m, DisplacementParams::from_frame(frame, t));
}

TransitionRow probability_row(int n, DisplacementParams d, double tail_tol) {
  if (n < 0) throw DomainError("probability_row: n must be >= 0");
  if (!(tail_tol > 0.0)) throw DomainError("probability_row: tail_tol must be > 0");
  TransitionRow row;
  row.n = n;
  row.lambda = d.lambda();
  double cumulative = 0.0;
  for (int m = 0; m <= kMaxRowLength; ++m) {
    const double p = transition_probability(n, m, d);
    row.probabilities.push_back(p);
    cumulative += p;
    row.truncation_m = m;
    if (cumulative > 1.0 - tail_tol) {
      row.tail_bound = std::max(0.0, 1.0 - cumulative);
      return row;
    }
  }
  throw NumericError("probability_row: no convergence before m = 500", cumulative);
}

TransitionRow probability_row(int n, const CanonicalFrame& frame, double t, double tail_tol) {
  auto row = probability_row(n, DisplacementParams::from_frame(frame, t), tail_tol);
  row.t = t;
  return row;
}

double ground_state_survival(DisplacementParams d) { return std::exp(-d.lambda()); }

double ground_state_survival(const CanonicalFrame& frame, double t) {
  return ground_state_survival(DisplacementParams::from_frame(frame, t));
}

void to_json(nlohmann::json& j, const TransitionRow& row) {
  j = {{"n", row.n},
       {"t", row.t},
       {"lambda", row.lambda},
       {"probabilities", row.probabilities},
       {"truncation_m", row.truncation_m},
       {"tail_bound", row.tail_bound}};
}

void write_transition_rows_csv(std::ostream& out, const TransitionRow& row) {
  for (std::size_t m = 0; m < row.probabilities.size(); ++m) {
    csv_row(out, {row.t, static_cast<double>(row.n), static_cast<double>(m), row.probabilities[m]});
  }
}

}  // namespace fho
