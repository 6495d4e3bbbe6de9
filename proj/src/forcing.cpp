#include "fho/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fho/errors.hpp"
#include "fho/quadrature.hpp"

namespace fho {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string("forcing: non-finite ") + what);
}

double tabulated_value(const TabulatedForce& tab, double t) {
  const auto& s = tab.samples;
  if (t < s.front().first || t > s.back().first) return 0.0;
  auto it = std::lower_bound(s.begin(), s.end(), t,
                             [](const auto& sample, double v) { return sample.first < v; });
  if (it->first == t) return it->second;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double w = (t - lo.first) / (hi.first - lo.first);
  return lo.second + w * (hi.second - lo.second);
}

}  // namespace

ForcingSpec ForcingSpec::constant(double K) {
  require_finite(K, "K");
  return ForcingSpec(ConstantForce{K});
}

ForcingSpec ForcingSpec::sinusoid(double A, double Omega, double phase) {
  require_finite(A, "A");
  require_finite(Omega, "Omega");
  require_finite(phase, "phase");
  return ForcingSpec(SinusoidForce{A, Omega, phase});
}

ForcingSpec ForcingSpec::pulse(double K, double t_on, double t_off) {
  require_finite(K, "K");
  require_finite(t_on, "t_on");
  require_finite(t_off, "t_off");
  if (!(t_on < t_off)) throw DomainError("forcing: pulse requires t_on < t_off");
  return ForcingSpec(PulseForce{K, t_on, t_off});
}

ForcingSpec ForcingSpec::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw DomainError("forcing: tabulated requires at least 2 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    require_finite(samples[i].first, "sample time");
    require_finite(samples[i].second, "sample force");
    if (i > 0 && !(samples[i].first > samples[i - 1].first)) {
      throw DomainError("forcing: tabulated sample times must be strictly increasing");
    }
  }
  return ForcingSpec(TabulatedForce{std::move(samples)});
}

double ForcingSpec::operator()(double t) const {
  if (!std::isfinite(t)) throw DomainError("forcing: evaluate at non-finite time");
  return std::visit(overloaded{
                        [](const ZeroForce&) { return 0.0; },
                        [](const ConstantForce& c) { return c.K; },
                        [t](const SinusoidForce& s) { return s.A * std::cos(s.Omega * t + s.phase); },
                        [t](const PulseForce& p) { return (t >= p.t_on && t < p.t_off) ? p.K : 0.0; },
                        [t](const TabulatedForce& tab) { return tabulated_value(tab, t); },
                    },
                    variant_);
}

std::vector<double> ForcingSpec::breakpoints(double t0, double t1) const {
  std::vector<double> out;
  auto keep = [&](double p) {
    if (p > t0 && p < t1) out.push_back(p);
  };
  if (const auto* p = std::get_if<PulseForce>(&variant_)) {
    keep(p->t_on);
    keep(p->t_off);
  } else if (const auto* tab = std::get_if<TabulatedForce>(&variant_)) {
    for (const auto& s : tab->samples) keep(s.first);
  }
  return out;
}

double evaluate(const ForcingSpec& spec, double t) { return spec(t); }

double abs_integral(const ForcingSpec& spec, double t, double tol) {
  if (!std::isfinite(t) || t < 0.0) throw DomainError("abs_integral: requires finite t >= 0");
  if (t == 0.0 || spec.is_zero()) return 0.0;
  if (const auto* c = std::get_if<ConstantForce>(&spec.variant())) return std::abs(c->K) * t;

  auto cuts = spec.breakpoints(0.0, t);
  // |A cos(Omega s + phase)| has kinks at the zeros of the cosine.
  if (const auto* s = std::get_if<SinusoidForce>(&spec.variant()); s && s->Omega != 0.0) {
    const double w = std::abs(s->Omega);
    const double ph = s->Omega > 0 ? s->phase : -s->phase;
    const double first = std::ceil((ph - 0.5 * std::numbers::pi) / std::numbers::pi);
    const double last = std::floor((w * t + ph - 0.5 * std::numbers::pi) / std::numbers::pi);
    if (last - first > 1e6) throw DomainError("abs_integral: sinusoid has too many sign changes");
    for (double k = first; k <= last; k += 1.0) {
      cuts.push_back(((k + 0.5) * std::numbers::pi - ph) / w);
    }
  }
  auto integrand = [&spec](double s) { return std::abs(spec(s)); };
  return quad::adaptive_simpson(integrand, 0.0, t, tol, cuts);
}

void to_json(nlohmann::json& j, const ForcingSpec& spec) {
  std::visit(overloaded{
                 [&](const ZeroForce&) { j = {{"type", "zero"}}; },
                 [&](const ConstantForce& c) { j = {{"type", "constant"}, {"K", c.K}}; },
                 [&](const SinusoidForce& s) {
                   j = {{"type", "sinusoid"}, {"A", s.A}, {"Omega", s.Omega}, {"phi", s.phase}};
                 },
                 [&](const PulseForce& p) {
                   j = {{"type", "pulse"}, {"K", p.K}, {"t_on", p.t_on}, {"t_off", p.t_off}};
                 },
                 [&](const TabulatedForce& tab) {
                   auto samples = nlohmann::json::array();
                   for (const auto& [t, k] : tab.samples) samples.push_back({t, k});
                   j = {{"type", "tabulated"}, {"samples", samples}};
                 },
             },
             spec.variant());
}

void from_json(const nlohmann::json& j, ForcingSpec& spec) {
  const auto type = j.at("type").get<std::string>();
  if (type == "zero") {
    spec = ForcingSpec::zero();
  } else if (type == "constant") {
    spec = ForcingSpec::constant(j.at("K").get<double>());
  } else if (type == "sinusoid") {
    spec = ForcingSpec::sinusoid(j.at("A").get<double>(), j.at("Omega").get<double>(),
                                 j.value("phi", 0.0));
  } else if (type == "pulse") {
    spec = ForcingSpec::pulse(j.at("K").get<double>(), j.at("t_on").get<double>(),
                              j.at("t_off").get<double>());
  } else if (type == "tabulated") {
    std::vector<std::pair<double, double>> samples;
    for (const auto& s : j.at("samples")) {
      if (!s.is_array() || s.size() != 2) throw DomainError("forcing: samples must be [t, k] pairs");
      samples.emplace_back(s[0].get<double>(), s[1].get<double>());
    }
    spec = ForcingSpec::tabulated(std::move(samples));
  } else {
    throw DomainError("forcing: unknown type '" + type + "'");
  }
}

}  // namespace fho
