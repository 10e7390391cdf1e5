#pragma once

// The falling and rising factorial transforms as exact maps on polynomials,
// plus the binomial transform, binomial convolution, and the product rules
// that only need rational arithmetic.

#include "factorial_transforms/combinatorics.hpp"
#include "factorial_transforms/formal_series.hpp"
#include "factorial_transforms/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace ft {

/// FFT: sum a_n x^n  ->  sum a_n (x)_n.
inline BasisPolynomial fft_poly(const BasisPolynomial& p) {
  return BasisPolynomial(Basis::falling, convert_basis(p, Basis::monomial).coeffs());
}

/// Inverse FFT: sum a_n (x)_n  ->  sum a_n x^n.
inline BasisPolynomial ifft_poly(const BasisPolynomial& p) {
  return BasisPolynomial(Basis::monomial, convert_basis(p, Basis::falling).coeffs());
}

/// RFT: sum a_n x^n  ->  sum a_n x^(n).
inline BasisPolynomial rft_poly(const BasisPolynomial& p) {
  return BasisPolynomial(Basis::rising, convert_basis(p, Basis::monomial).coeffs());
}

/// Inverse RFT: sum a_n x^(n)  ->  sum a_n x^n.
inline BasisPolynomial irft_poly(const BasisPolynomial& p) {
  return BasisPolynomial(Basis::monomial, convert_basis(p, Basis::rising).coeffs());
}

/// Integer-indexed exact sequence n -> f(n).
using ExactSequence = std::function<Rational(std::size_t)>;

/// Samples a polynomial at nonnegative integers.
inline ExactSequence sequence_of(const BasisPolynomial& p) {
  return [p](std::size_t n) { return eval(p, Rational(n)); };
}

/// BT(f)(x) = sum_{n<=x} binom(x,n) f(n), x a nonnegative integer.
inline Rational binomial_transform(const ExactSequence& f, std::size_t x) {
  Rational sum = 0;
  for (std::size_t n = 0; n <= x; ++n) sum += Rational(binomial(x, n)) * f(n);
  return sum;
}

/// BT^-1(f)(x) = sum_{n<=x} binom(x,n) (-1)^(x-n) f(n).
inline Rational inverse_binomial_transform(const ExactSequence& f, std::size_t x) {
  Rational sum = 0;
  for (std::size_t n = 0; n <= x; ++n) {
    Rational term = Rational(binomial(x, n)) * f(n);
    sum += ((x - n) % 2 == 0) ? term : Rational(-term);
  }
  return sum;
}

/// conv(f,g)(x) = sum_{n<=x} binom(x,n) f(x-n) g(n).
inline Rational binomial_convolution(const ExactSequence& f, const ExactSequence& g, std::size_t x) {
  Rational sum = 0;
  for (std::size_t n = 0; n <= x; ++n) sum += Rational(binomial(x, n)) * f(x - n) * g(n);
  return sum;
}

/// h_k = k! [x^k] (sum F(k) x^k/k!)(sum G(k) x^k/k!) for k < order, computed
/// by multiplying the exponential generating functions as power series.
inline std::vector<Rational> egf_product_coeffs(const ExactSequence& F, const ExactSequence& G, std::size_t order) {
  series::Series a(order), b(order);
  BigInt kfact = 1;
  for (std::size_t k = 0; k < order; ++k) {
    if (k > 0) kfact *= k;
    a[k] = F(k) / Rational(kfact);
    b[k] = G(k) / Rational(kfact);
  }
  auto prod = series::multiply(a, b, order);
  kfact = 1;
  for (std::size_t k = 0; k < order; ++k) {
    if (k > 0) kfact *= k;
    prod[k] *= Rational(kfact);
  }
  return prod;
}

/// conv^(n)(F): F convolved with itself n times (conv^(0) = F), tabulated at
/// 0 .. order-1 by repeated binomial convolution.
inline std::vector<Rational> iterated_convolution(const ExactSequence& F, std::size_t n, std::size_t order) {
  std::vector<Rational> base(order), current(order);
  for (std::size_t k = 0; k < order; ++k) base[k] = current[k] = F(k);
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Rational> snapshot = current;
    ExactSequence lhs = [&snapshot](std::size_t i) { return snapshot[i]; };
    ExactSequence rhs = [&base](std::size_t i) { return base[i]; };
    for (std::size_t k = 0; k < order; ++k) current[k] = binomial_convolution(lhs, rhs, k);
  }
  return current;
}

/// FFT^-1(f g) via sum_k D^k F D^k G x^k / k!, where F = FFT^-1 f and
/// G = FFT^-1 g. Result in the monomial basis.
inline BasisPolynomial hadamard_ifft(const BasisPolynomial& f, const BasisPolynomial& g) {
  BasisPolynomial F = ifft_poly(f);
  BasisPolynomial G = ifft_poly(g);
  BasisPolynomial out(Basis::monomial);
  if (F.is_zero() || G.is_zero()) return out;
  std::size_t kmax = static_cast<std::size_t>(std::min(F.degree(), G.degree()));
  BasisPolynomial dF = F, dG = G;
  BigInt kfact = 1;
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (k > 0) {
      dF = derivative(dF);
      dG = derivative(dG);
      kfact *= k;
    }
    BasisPolynomial xk = BasisPolynomial::element(Basis::monomial, k, Rational(1) / Rational(kfact));
    out += multiply(multiply(dF, dG), xk);
  }
  return out;
}

/// n-th power-series coefficient of f from its Taylor source via
/// a_n = FFT(e^-x f)(n) / n!. The chain only needs coefficients up to n.
inline Rational coefficient_extract(const ExactSequence& taylor, std::size_t n) {
  series::Series f(n + 1);
  for (std::size_t k = 0; k <= n; ++k) f[k] = taylor(k);
  auto damped = series::multiply(series::exponential(-1, n + 1), f, n + 1);
  BasisPolynomial g = fft_poly(BasisPolynomial(Basis::monomial, damped));
  return eval(g, Rational(n)) / Rational(factorial(n));
}

inline Rational coefficient_extract(const BasisPolynomial& p, std::size_t n) {
  BasisPolynomial mono = convert_basis(p, Basis::monomial);
  return coefficient_extract([&mono](std::size_t k) { return mono.coeff(k); }, n);
}

}  // namespace ft
