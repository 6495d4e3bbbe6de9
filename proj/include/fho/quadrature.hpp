#pragma once

// Adaptive quadrature used throughout the library. Integrands may be
// vector-valued (std::array<double, N>); error control is on the max norm.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "fho/errors.hpp"

namespace fho::quad {

template <std::size_t N>
using Values = std::array<double, N>;

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae in
// decreasing order; the last is the centre).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::size_t N>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  Values<N> value{};
  Values<N> abs_value{};
  double error = 0.0;

  bool operator<(const Panel& other) const { return error < other.error; }
};

template <std::size_t N, class F>
Panel<N> kronrod_panel(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<Values<N>, 15> samples;
  samples[7] = f(centre);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    samples[j] = f(centre - dx);
    samples[14 - j] = f(centre + dx);
  }

  Panel<N> panel;
  panel.a = a;
  panel.b = b;
  for (std::size_t c = 0; c < N; ++c) {
    double kronrod = kKronrodWeights[7] * samples[7][c];
    double gauss = kGaussWeights[3] * samples[7][c];
    double res_abs = kKronrodWeights[7] * std::abs(samples[7][c]);
    for (std::size_t j = 0; j < 7; ++j) {
      const double pair = samples[j][c] + samples[14 - j][c];
      kronrod += kKronrodWeights[j] * pair;
      res_abs += kKronrodWeights[j] * (std::abs(samples[j][c]) + std::abs(samples[14 - j][c]));
      if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    const double mean = 0.5 * kronrod;
    double res_asc = kKronrodWeights[7] * std::abs(samples[7][c] - mean);
    for (std::size_t j = 0; j < 7; ++j) {
      res_asc += kKronrodWeights[j] *
                 (std::abs(samples[j][c] - mean) + std::abs(samples[14 - j][c] - mean));
    }

    const double h = std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    res_asc *= h;
    res_abs *= h;
    if (res_asc != 0.0 && err != 0.0) {
      err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
      err = std::max(50.0 * eps * res_abs, err);
    }
    panel.value[c] = kronrod * half;
    panel.abs_value[c] = res_abs;
    panel.error = std::max(panel.error, err);
  }
  return panel;
}

template <std::size_t N>
double max_norm(const Values<N>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace detail

struct KronrodOptions {
  double tol = 1e-10;
  std::size_t max_panels = 20000;
  /// Absolute error accepted regardless of tol; use when f is a difference of
  /// larger terms and its relative accuracy is limited.
  double abs_tol = 0.0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of a vector-valued f
/// over [a, b]. Interior breakpoints split the initial partition so that
/// discontinuities of f never fall inside a panel. Convergence is declared
/// when the summed error estimate drops below tol * max(|I|, integral of |f|),
/// component-wise in the max norm. Throws NumericError on non-convergence.
template <std::size_t N, class F>
Values<N> integrate(F&& f, double a, double b, std::span<const double> breakpoints = {},
                    KronrodOptions options = {}) {
  Values<N> total{};
  if (a == b) return total;
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate: non-finite integration limits");
  }
  const double sign = b > a ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);

  std::vector<double> cuts{lo};
  for (double p : breakpoints) {
    if (p > lo && p < hi) cuts.push_back(p);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<detail::Panel<N>> panels;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    panels.push(detail::kronrod_panel<N>(f, cuts[i], cuts[i + 1]));
  }

  auto summarize = [&](Values<N>& value, Values<N>& abs_value) {
    value.fill(0.0);
    abs_value.fill(0.0);
    double err = 0.0;
    auto copy = panels;
    while (!copy.empty()) {
      const auto& p = copy.top();
      for (std::size_t c = 0; c < N; ++c) {
        value[c] += p.value[c];
        abs_value[c] += p.abs_value[c];
      }
      err += p.error;
      copy.pop();
    }
    return err;
  };

  // Running sums are updated incrementally while refining; the returned
  // value is re-summed from the final panel set.
  Values<N> value{};
  Values<N> abs_value{};
  double error = summarize(value, abs_value);

  while (true) {
    // Error estimates below a few ulps of the absolute integral are round-off.
    const double scale = detail::max_norm(abs_value);
    const double target = std::max({options.tol * std::max(detail::max_norm(value), scale),
                                    50.0 * std::numeric_limits<double>::epsilon() * scale,
                                    options.abs_tol});
    if (error <= target) break;
    if (panels.size() >= options.max_panels) {
      summarize(value, abs_value);
      for (auto& v : value) v *= sign;
      throw NumericError("integrate: no convergence after " +
                             std::to_string(panels.size()) + " panels",
                         value[0]);
    }
    const auto worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel cannot be split further in double precision.
      break;
    }
    panels.pop();
    const auto left = detail::kronrod_panel<N>(f, worst.a, mid);
    const auto right = detail::kronrod_panel<N>(f, mid, worst.b);
    for (std::size_t c = 0; c < N; ++c) {
      value[c] += left.value[c] + right.value[c] - worst.value[c];
      abs_value[c] += left.abs_value[c] + right.abs_value[c] - worst.abs_value[c];
    }
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  summarize(total, abs_value);
  for (auto& v : total) v *= sign;
  return total;
}

/// Scalar convenience overload.
template <class F>
double integrate_scalar(F&& f, double a, double b, std::span<const double> breakpoints = {},
                        KronrodOptions options = {}) {
  auto wrapped = [&f](double s) { return Values<1>{f(s)}; };
  return integrate<1>(wrapped, a, b, breakpoints, options)[0];
}

namespace detail {

struct SimpsonState {
  double total = 0.0;
  bool exhausted = false;
};

template <class F>
double simpson_recurse(F& f, double a, double fa, double m, double fm, double b, double fb,
                       double whole, double eps, int depth, SimpsonState& state) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0 || !(lm > a && rm < b)) {
    state.exhausted = true;
    return left + right + delta / 15.0;
  }
  return simpson_recurse(f, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth - 1, state) +
         simpson_recurse(f, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth - 1, state);
}

}  // namespace detail

/// Adaptive Simpson quadrature with interval bisection (Lyness acceptance
/// test). `tol` is relative to a coarse estimate of the integral, falling
/// back to absolute when that estimate vanishes. Each piece of the partition
/// defined by `breakpoints` is refined independently.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol,
                        std::span<const double> breakpoints = {}, int max_depth = 48) {
  if (a == b) return 0.0;
  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Coarse composite estimate sets the scale for the relative tolerance.
  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    constexpr int pieces = 16;
    const double h = (cuts[i + 1] - cuts[i]) / pieces;
    for (int j = 0; j < pieces; ++j) {
      const double x0 = cuts[i] + j * h;
      const double x1 = j + 1 == pieces ? std::nextafter(cuts[i + 1], cuts[i]) : x0 + h;
      scale += std::abs(h / 6.0 * (f(x0) + 4.0 * f(x0 + 0.5 * h) + f(x1)));
    }
  }
  const double eps_total = scale > 0.0 ? tol * scale : tol;

  detail::SimpsonState state;
  const double full = cuts.back() - cuts.front();
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo);
    const double fmid = f(mid);
    // Left limit at the upper end, so a jump located exactly at a breakpoint
    // is attributed to the piece it belongs to.
    const double fhi = f(std::nextafter(hi, lo));
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    const double eps = eps_total * (hi - lo) / full;
    state.total += detail::simpson_recurse(f, lo, flo, mid, fmid, hi, fhi, whole, eps,
                                           max_depth, state);
  }
  if (state.exhausted) {
    throw NumericError("adaptive_simpson: recursion depth exhausted", state.total);
  }
  return state.total;
}

}  // namespace fho::quad
