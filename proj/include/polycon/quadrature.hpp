#ifndef POLYCON_QUADRATURE_HPP
#define POLYCON_QUADRATURE_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

#include "polycon/error.hpp"

namespace polycon {

struct QuadratureResult {
  double value = 0.0;
  double errorEstimate = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b]. Throws ConvergenceError when
/// the embedded error estimate stays above absTolerance.
template <class F>
QuadratureResult integrateAdaptive(F&& f, double a, double b, double absTolerance) {
  QuadratureResult result;
  // boost terminates on a relative criterion; ask for a tight one and check
  // the absolute estimate afterwards.
  constexpr double relTolerance = 1e-12;
  result.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, 15, relTolerance, &result.errorEstimate);
  if (!std::isfinite(result.value) || result.errorEstimate > absTolerance) {
    throw ConvergenceError("adaptive quadrature did not reach tolerance " +
                           std::to_string(absTolerance));
  }
  return result;
}

}  // namespace polycon

#endif  // POLYCON_QUADRATURE_HPP
