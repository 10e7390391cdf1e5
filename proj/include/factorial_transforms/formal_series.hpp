#pragma once

// Truncated formal power series with rational coefficients. A series of
// order N holds the coefficients of t^0 ... t^(N-1).

#include "factorial_transforms/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace ft::series {

using Series = std::vector<Rational>;

inline Series multiply(const Series& a, const Series& b, std::size_t order) {
  Series out(order, Rational(0));
  for (std::size_t i = 0; i < std::min(a.size(), order); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Series power(const Series& a, std::size_t k, std::size_t order) {
  Series out(order, Rational(0));
  if (order == 0) return out;
  out[0] = 1;
  for (std::size_t i = 0; i < k; ++i) out = multiply(out, a, order);
  return out;
}

/// a / b; requires b[0] != 0.
inline Series divide(const Series& a, const Series& b, std::size_t order) {
  if (b.empty() || b[0] == 0) throw DivisionByZero("series division by a series with zero constant term");
  Series q(order, Rational(0));
  for (std::size_t n = 0; n < order; ++n) {
    Rational acc = n < a.size() ? a[n] : Rational(0);
    for (std::size_t j = 1; j <= n && j < b.size(); ++j) acc -= b[j] * q[n - j];
    q[n] = acc / b[0];
  }
  return q;
}

/// e^(c t)
inline Series exponential(const Rational& c, std::size_t order) {
  Series out(order, Rational(0));
  Rational term = 1;
  for (std::size_t n = 0; n < order; ++n) {
    out[n] = term;
    term *= c / Rational(n + 1);
  }
  return out;
}

/// log(1 + t)
inline Series log1p(std::size_t order) {
  Series out(order, Rational(0));
  for (std::size_t n = 1; n < order; ++n) out[n] = Rational((n % 2 == 1) ? 1 : -1, n);
  return out;
}

/// e^t - 1
inline Series expm1(std::size_t order) {
  Series out = exponential(1, order);
  if (!out.empty()) out[0] = 0;
  return out;
}

/// (1 + t)^a = sum binom(a, j) t^j
inline Series binomial_series(const Rational& a, std::size_t order) {
  Series out(order, Rational(0));
  Rational coeff = 1;
  for (std::size_t j = 0; j < order; ++j) {
    out[j] = coeff;
    coeff *= (a - Rational(j)) / Rational(j + 1);
  }
  return out;
}

}  // namespace ft::series
