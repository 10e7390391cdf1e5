#pragma once

// Gamma function (Lanczos, g = 7, nine terms) and the upper incomplete gamma
// function at integer order.

#include "factorial_transforms/rational.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace ft {

inline double gamma_support(double x) {
  if (x <= 0.0 && std::floor(x) == x) throw DomainError("gamma: pole at a nonpositive integer");
  if (x < 0.5) {
    // Reflection.
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_support(1.0 - x));
  }
  static constexpr std::array<double, 9> coeffs = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  double z = x - 1.0;
  double series = coeffs[0];
  for (std::size_t i = 1; i < coeffs.size(); ++i) series += coeffs[i] / (z + static_cast<double>(i));
  double t = z + g + 0.5;
  // t^(z+0.5) e^-t split in two halves to postpone overflow near x = 171.
  double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * series;
}

/// Gamma(n, x) = (n-1)! e^-x sum_{k<n} x^k / k!, n >= 1. The closed form is
/// valid for any real x, negative included.
inline double incomplete_gamma_upper(int n, double x) {
  if (n < 1) throw DomainError("incomplete_gamma_upper: order must be a positive integer");
  double term = 1.0;
  double sum = 0.0;
  double fact = 1.0;  // (n-1)!
  for (int k = 0; k < n; ++k) {
    sum += term;
    term *= x / static_cast<double>(k + 1);
    if (k > 0) fact *= static_cast<double>(k);
  }
  return fact * std::exp(-x) * sum;
}

}  // namespace ft
