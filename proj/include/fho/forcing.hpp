#pragma once

#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace fho {

struct ZeroForce {};

struct ConstantForce {
  double K = 0.0;
};

// k(t) = A cos(Omega t + phase)
struct SinusoidForce {
  double A = 0.0;
  double Omega = 0.0;
  double phase = 0.0;
};

// k(t) = K on [t_on, t_off), zero elsewhere.
struct PulseForce {
  double K = 0.0;
  double t_on = 0.0;
  double t_off = 0.0;
};

// Piecewise-linear through (time, force) samples; zero outside the sampled range.
struct TabulatedForce {
  std::vector<std::pair<double, double>> samples;
};

/// Time-dependent, position-independent external force k(t).
///
/// Construction validates the variant's invariants; a constructed spec is
/// immutable and safe to evaluate concurrently.
class ForcingSpec {
 public:
  using Variant = std::variant<ZeroForce, ConstantForce, SinusoidForce, PulseForce, TabulatedForce>;

  ForcingSpec() = default;

  static ForcingSpec zero() { return ForcingSpec(ZeroForce{}); }
  static ForcingSpec constant(double K);
  static ForcingSpec sinusoid(double A, double Omega, double phase = 0.0);
  static ForcingSpec pulse(double K, double t_on, double t_off);
  static ForcingSpec tabulated(std::vector<std::pair<double, double>> samples);

  const Variant& variant() const noexcept { return variant_; }
  bool is_zero() const noexcept { return std::holds_alternative<ZeroForce>(variant_); }

  /// k(t). Throws DomainError for non-finite t.
  double operator()(double t) const;

  /// Points in (t0, t1) where k is not smooth: pulse edges and tabulated nodes.
  std::vector<double> breakpoints(double t0, double t1) const;

 private:
  explicit ForcingSpec(Variant v) : variant_(std::move(v)) {}

  Variant variant_ = ZeroForce{};
};

double evaluate(const ForcingSpec& spec, double t);

/// Integral of |k(s)| over [0, t] by adaptive Simpson quadrature. Used as the
/// local-integrability diagnostic. Throws NumericError (carrying the partial
/// value) if the recursion cannot reach tol.
double abs_integral(const ForcingSpec& spec, double t, double tol = 1e-10);

void to_json(nlohmann::json& j, const ForcingSpec& spec);
void from_json(const nlohmann::json& j, ForcingSpec& spec);

}  // namespace fho
