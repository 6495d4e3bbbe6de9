#include "fho/hermite.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "fho/errors.hpp"

namespace fho {

namespace {

constexpr double kRescaleAbove = 1e150;

// p_0 of the orthonormal Hermite family with respect to exp(-x^2).
const double kPiQuarterInv = std::pow(std::numbers::pi, -0.25);

struct Orthonormal {
  double current = 0.0;   // p_n(x)
  double previous = 0.0;  // p_{n-1}(x)
};

// Orthonormal recurrence p_{k+1} = sqrt(2/(k+1)) x p_k - sqrt(k/(k+1)) p_{k-1}
// without rescaling; adequate for |x| <~ 25 and n <= 200.
Orthonormal orthonormal_hermite(int n, double x) {
  Orthonormal p{kPiQuarterInv, 0.0};
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * p.current -
                        std::sqrt(static_cast<double>(k) / (k + 1)) * p.previous;
    p.previous = p.current;
    p.current = next;
  }
  return p;
}

void require_positive_frequency(const OscillatorParams& params) {
  params.validate();
  if (!(params.omega > 0.0)) throw DomainError("eigenstate: requires omega > 0");
}

}  // namespace

double hermite_poly(int n, double x) {
  if (n < 0) throw DomainError("hermite_poly: n must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double generating_function_partial(double x, double u, int N) {
  if (N < 0) throw DomainError("generating_function_partial: N must be >= 0");
  // c_n = u^n H_n(x) / n! obeys c_{n+1} = (2xu c_n - 2u^2 c_{n-1}) / (n+1).
  double prev = 0.0;
  double cur = 1.0;
  double sum = 1.0;
  for (int n = 0; n < N; ++n) {
    const double next = (2.0 * x * u * cur - 2.0 * u * u * prev) / (n + 1);
    prev = cur;
    cur = next;
    sum += cur;
  }
  return sum;
}

std::complex<double> gaussian_integral(std::complex<double> z) {
  return std::sqrt(std::numbers::pi) * std::exp(z * z / 4.0);
}

std::vector<double> eigenstates_upto(const OscillatorParams& params, int n_max, double x) {
  require_positive_frequency(params);
  if (n_max < 0) throw DomainError("eigenstate: n must be >= 0");
  const double mw = params.mass * params.omega;
  const double y = std::sqrt(mw) * x;

  // Log of the common factor (m w)^{1/4} pi^{-1/4} exp(-y^2/2); the recurrence
  // runs on values divided by exp(log_scale) and is rescaled when it grows.
  const double log_front = 0.25 * std::log(mw) - 0.25 * std::log(std::numbers::pi) - 0.5 * y * y;
  double log_scale = 0.0;
  double prev = 0.0;
  double cur = 1.0;

  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  auto emit = [&](int n) {
    if (cur == 0.0) {
      out[n] = 0.0;
      return;
    }
    const double log_mag = std::log(std::abs(cur)) + log_scale + log_front;
    out[n] = std::copysign(std::exp(log_mag), cur);
  };
  emit(0);
  for (int k = 0; k < n_max; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * y * cur -
                        std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleAbove) {
      prev /= kRescaleAbove;
      cur /= kRescaleAbove;
      log_scale += std::log(kRescaleAbove);
    }
    emit(k + 1);
  }
  return out;
}

double eigenstate(const OscillatorParams& params, int n, double x) {
  return eigenstates_upto(params, n, x).back();
}

double eigen_energy(const OscillatorParams& params, int n) {
  params.validate();
  if (n < 0) throw DomainError("eigen_energy: n must be >= 0");
  return params.omega * (n + 0.5);
}

const QuadratureRule& gauss_hermite_rule(int order) {
  if (order < 1 || order > 200) throw DomainError("gauss_hermite_rule: order must be in [1, 200]");

  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(order); it != cache.end()) return it->second;

  const auto n = static_cast<Eigen::Index>(order);
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  if (order == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = std::sqrt(std::numbers::pi);
  } else {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (Eigen::Index k = 0; k < n - 1; ++k) sub[k] = std::sqrt(0.5 * static_cast<double>(k + 1));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const auto& eig = solver.eigenvalues();

    for (int i = 0; i < order; ++i) {
      double x = eig[i];
      for (int iter = 0; iter < 8; ++iter) {
        const auto p = orthonormal_hermite(order, x);
        const double dx = p.current / (std::sqrt(2.0 * order) * p.previous);
        x -= dx;
        if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) break;
      }
      rule.nodes[i] = x;
    }
    // Enforce exact symmetry of the rule.
    for (int i = 0; i < order / 2; ++i) {
      const double x = 0.5 * (rule.nodes[order - 1 - i] - rule.nodes[i]);
      rule.nodes[i] = -x;
      rule.nodes[order - 1 - i] = x;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    for (int i = 0; i < order; ++i) {
      const double pm1 = orthonormal_hermite(order, rule.nodes[i]).previous;
      rule.weights[i] = 1.0 / (order * pm1 * pm1);
    }
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

}  // namespace fho
