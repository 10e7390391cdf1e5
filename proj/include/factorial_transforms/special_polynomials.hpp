#pragma once

// Touchard, Z_n, generalized Laguerre and Charlier polynomials.

#include "factorial_transforms/combinatorics.hpp"
#include "factorial_transforms/polynomial.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace ft {

/// T_n(x) = sum_k {n k} x^k, monomial basis.
inline BasisPolynomial touchard(std::size_t n) {
  auto row = stirling_second_row(n);
  std::vector<Rational> coeffs(row.begin(), row.end());
  return BasisPolynomial(Basis::monomial, std::move(coeffs));
}

/// Z_n(x) = sum_k s(n,k) (x)_k with signed Stirling numbers of the first
/// kind, falling basis.
inline BasisPolynomial z_poly(std::size_t n) {
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) coeffs[k] = Rational(stirling_first_signed(n, k));
  return BasisPolynomial(Basis::falling, std::move(coeffs));
}

/// L_n^(alpha)(y) = sum_k binom(n + alpha, n - k) (-y)^k / k!, as a monomial
/// polynomial in y. Valid for any rational alpha, negative included.
inline BasisPolynomial laguerre(std::size_t n, const Rational& alpha) {
  std::vector<Rational> coeffs(n + 1, Rational(0));
  BigInt kfact = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) kfact *= k;
    Rational c = binomial_general(alpha + Rational(n), n - k) / Rational(kfact);
    coeffs[k] = (k % 2 == 0) ? c : Rational(-c);
  }
  return BasisPolynomial(Basis::monomial, std::move(coeffs));
}

/// c_n(x, a) = sum_k binom(n,k) binom(x,k) k! (-a)^(-k), so that
/// a^n c_n(x, -a) = sum_k binom(n,k) (x)_k a^(n-k).
inline Rational charlier(std::size_t n, const Rational& x, const Rational& a) {
  if (a == 0) throw DomainError("charlier: parameter a must be nonzero");
  Rational sum = 0;
  Rational falling = 1;  // (x)_k
  Rational inv = Rational(-1) / a;
  Rational power = 1;  // (-1/a)^k
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      falling *= x - Rational(k - 1);
      power *= inv;
    }
    sum += Rational(binomial(n, k)) * falling * power;
  }
  return sum;
}

/// Floating-point Charlier value with the same normalization.
inline double charlier_value(std::size_t n, double x, double a) {
  if (a == 0.0) throw DomainError("charlier: parameter a must be nonzero");
  double sum = 0.0;
  double falling = 1.0;
  double power = 1.0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      falling *= x - static_cast<double>(k - 1);
      power *= -1.0 / a;
    }
    sum += binomial(n, k).convert_to<double>() * falling * power;
  }
  return sum;
}

/// Partial sum over k < K of a^k/k! c_n(k,a) c_m(k,a).
inline double charlier_orthogonality_sum(std::size_t n, std::size_t m, double a, std::size_t truncation) {
  if (!(a > 0.0)) throw DomainError("charlier_orthogonality_sum: a must be positive");
  if (truncation < 1) throw DomainError("charlier_orthogonality_sum: truncation must be at least 1");
  double sum = 0.0;
  double weight = 1.0;  // a^k / k!
  for (std::size_t k = 0; k < truncation; ++k) {
    if (k > 0) weight *= a / static_cast<double>(k);
    double kd = static_cast<double>(k);
    sum += weight * charlier_value(n, kd, a) * charlier_value(m, kd, a);
  }
  return sum;
}

}  // namespace ft
