#ifndef POLYCON_METRICS_HPP
#define POLYCON_METRICS_HPP

// Volume and surface area of the polycon through the shared integral
//   I_n = int_{-pi/2}^{pi/2} dtheta / (1 + e* cos theta)^2.

#include <cmath>
#include <optional>

#include "polycon/core.hpp"
#include "polycon/quadrature.hpp"

namespace polycon {

enum class IntegralMethod { ClosedForm, Quadrature };

inline constexpr double kIntegralTolerance = 1e-12;

namespace detail {

// n > 3 (e* > 1). With c = cos(pi/n) and K = cos(pi/2n - pi/3) cos(pi/2n + pi/3):
//   I_n = (1 - c)/K * [ c/2 - (1 - c)^2 / (4 sqrt K) * log((1 + 2 sqrt K)/(1 - 2 sqrt K)) ]
// K = cos^2(pi/2n) - 3/4 vanishes at n = 3 and lies in (0, 1/4) for n > 3.
inline double hyperbolicIntegral(const PolyconSpec& spec) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double half = pi / (2.0L * spec.n());
  const long double c = std::cos(pi / spec.n());
  const long double k = std::cos(half - pi / 3.0L) * std::cos(half + pi / 3.0L);
  const long double rootK = std::sqrt(k);
  const long double oneMinusC = 1.0L - c;
  const long double logTerm = std::log1p(2.0L * rootK) - std::log1p(-2.0L * rootK);
  const long double bracket = c / 2.0L - oneMinusC * oneMinusC / (4.0L * rootK) * logTerm;
  return static_cast<double>(oneMinusC / k * bracket);
}

}  // namespace detail

inline double integralIn(const PolyconSpec& spec, IntegralMethod method) {
  if (method == IntegralMethod::ClosedForm) {
    switch (spec.n()) {
      case 2: return kPi;
      case 3: return 4.0 / 3.0;
      default: return detail::hyperbolicIntegral(spec);
    }
  }
  const double eStar = projectedEccentricity(spec);
  auto integrand = [eStar](double theta) {
    const double d = 1.0 + eStar * std::cos(theta);
    return 1.0 / (d * d);
  };
  // The integrand is even; integrate the half range to keep the subdivision symmetric.
  return 2.0 * integrateAdaptive(integrand, 0.0, kPi / 2.0, kIntegralTolerance / 2.0).value;
}

/// Closed form for every n >= 2 (exact values at n = 2, 3).
inline double integralIn(const PolyconSpec& spec) {
  return integralIn(spec, IntegralMethod::ClosedForm);
}

inline double volume(const PolyconSpec& spec) {
  const double r = spec.radius();
  return spec.n() * r * r * r / 3.0 * (spec.sinHalfStep() / spec.cosHalfStep()) * integralIn(spec);
}

inline double surfaceArea(const PolyconSpec& spec) {
  const double r = spec.radius();
  return spec.n() * r * r / spec.cosHalfStep() * integralIn(spec);
}

/// Apex-to-base distance of one of the 2n generalised cones that tile the solid.
inline double generalizedConeHeight(const PolyconSpec& spec) {
  return spec.coneHeight() * spec.sinStep();
}

struct MetricReport {
  int n = 0;
  double radius = 0.0;
  std::optional<double> integralClosed;
  double integralQuadrature = 0.0;
  double volume = 0.0;
  double surfaceArea = 0.0;
  double generalizedConeHeight = 0.0;

  std::optional<double> discrepancy() const {
    if (!integralClosed) return std::nullopt;
    return *integralClosed - integralQuadrature;
  }
};

inline MetricReport metricReport(const PolyconSpec& spec) {
  MetricReport report;
  report.n = spec.n();
  report.radius = spec.radius();
  report.integralClosed = integralIn(spec, IntegralMethod::ClosedForm);
  report.integralQuadrature = integralIn(spec, IntegralMethod::Quadrature);
  report.volume = volume(spec);
  report.surfaceArea = surfaceArea(spec);
  report.generalizedConeHeight = generalizedConeHeight(spec);
  return report;
}

}  // namespace polycon

#endif  // POLYCON_METRICS_HPP
