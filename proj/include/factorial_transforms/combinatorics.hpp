#pragma once

// Exact combinatorial kernel: Stirling numbers of both kinds, generalized
// binomials, Pochhammer symbols, Bernoulli numbers.
//
// Stirling and Bernoulli tables are memoized process-wide and grown on demand.
// Readers take a shared lock and receive copies, so a concurrent append can
// never expose a partially written row.

#include "factorial_transforms/rational.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <type_traits>
#include <utility>
#include <vector>

namespace ft {

namespace detail {

/// Lower-triangular table whose row n is derived from row n-1.
class TriangularCache {
 public:
  using Row = std::vector<BigInt>;
  using NextRow = std::function<Row(const Row& previous, std::size_t n)>;

  TriangularCache(Row first, NextRow next) : next_(std::move(next)) { rows_.push_back(std::move(first)); }

  Row row(std::size_t n) const {
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      Row next = next_(rows_.back(), rows_.size());
      rows_.push_back(std::move(next));
    }
    return rows_[n];
  }

  BigInt at(std::size_t n, std::size_t k) const {
    if (k > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][k];
    }
    return row(n)[k];
  }

 private:
  mutable std::shared_mutex mutex_;
  mutable std::vector<Row> rows_;
  NextRow next_;
};

inline const TriangularCache& stirling_first_cache() {
  // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
  static const TriangularCache cache({BigInt(1)}, [](const TriangularCache::Row& prev, std::size_t n) {
    TriangularCache::Row row(n + 1, BigInt(0));
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt left = prev[k - 1];
      BigInt up = k < prev.size() ? prev[k] : BigInt(0);
      row[k] = left + BigInt(n - 1) * up;
    }
    return row;
  });
  return cache;
}

inline const TriangularCache& stirling_second_cache() {
  // S(n,k) = k S(n-1,k) + S(n-1,k-1)
  static const TriangularCache cache({BigInt(1)}, [](const TriangularCache::Row& prev, std::size_t n) {
    TriangularCache::Row row(n + 1, BigInt(0));
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt left = prev[k - 1];
      BigInt up = k < prev.size() ? prev[k] : BigInt(0);
      row[k] = BigInt(k) * up + left;
    }
    return row;
  });
  return cache;
}

inline const TriangularCache& binomial_cache() {
  static const TriangularCache cache({BigInt(1)}, [](const TriangularCache::Row& prev, std::size_t n) {
    TriangularCache::Row row(n + 1, BigInt(1));
    for (std::size_t k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
    return row;
  });
  return cache;
}

class BernoulliCache {
 public:
  Rational at(std::size_t n) const {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
      // sum_{k=0}^{m} C(m+1,k) B_k = 0
      std::size_t m = values_.size();
      auto binom_row = binomial_cache().row(m + 1);
      Rational acc = 0;
      for (std::size_t k = 0; k < m; ++k) acc += Rational(binom_row[k]) * values_[k];
      values_.push_back(-acc / Rational(m + 1));
    }
    return values_[n];
  }

 private:
  mutable std::shared_mutex mutex_;
  mutable std::vector<Rational> values_{Rational(1)};
};

inline const BernoulliCache& bernoulli_cache() {
  static const BernoulliCache cache;
  return cache;
}

}  // namespace detail

/// Unsigned Stirling number of the first kind, [n k].
inline BigInt stirling_first_unsigned(std::size_t n, std::size_t k) {
  return detail::stirling_first_cache().at(n, k);
}

/// Signed Stirling number of the first kind, (-1)^(n-k) [n k]; the
/// coefficient of x^k in (x)_n.
inline BigInt stirling_first_signed(std::size_t n, std::size_t k) {
  BigInt c = stirling_first_unsigned(n, k);
  return ((n - k) % 2 == 0) ? c : BigInt(-c);
}

/// Stirling number of the second kind, {n k}.
inline BigInt stirling_second(std::size_t n, std::size_t k) { return detail::stirling_second_cache().at(n, k); }

/// Row [n 0] ... [n n].
inline std::vector<BigInt> stirling_first_row(std::size_t n) { return detail::stirling_first_cache().row(n); }
inline std::vector<BigInt> stirling_second_row(std::size_t n) { return detail::stirling_second_cache().row(n); }

inline BigInt binomial(std::size_t n, std::size_t k) { return detail::binomial_cache().at(n, k); }

inline BigInt factorial(std::size_t n) {
  BigInt result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

/// x(x-1)...(x-n+1)/n! for rational x.
inline Rational binomial_general(const Rational& x, std::size_t n) {
  Rational result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    result *= x - Rational(i);
    result /= Rational(i + 1);
  }
  return result;
}

namespace detail {

template <class T>
bool is_zero_value(const T& v) {
  return v == T(0);
}

}  // namespace detail

/// Falling factorial (x)_n. For n < 0 this is 1/((x+1)(x+2)...(x+|n|)), the
/// extension satisfying (x)_n (x-n)_m = (x)_{n+m} for all integers n, m.
template <class T>
T falling_factorial(const T& x, long n) {
  T result(1);
  if (n >= 0) {
    for (long i = 0; i < n; ++i) result *= x - T(i);
    return result;
  }
  for (long i = 1; i <= -n; ++i) {
    T factor = x + T(i);
    if (detail::is_zero_value(factor)) throw DivisionByZero("falling factorial with negative index hits a zero factor");
    result *= factor;
  }
  return T(1) / result;
}

/// Rising factorial x^(n). For n < 0 this is 1/((x-1)(x-2)...(x-|n|)).
template <class T>
T rising_factorial(const T& x, long n) {
  T result(1);
  if (n >= 0) {
    for (long i = 0; i < n; ++i) result *= x + T(i);
    return result;
  }
  for (long i = 1; i <= -n; ++i) {
    T factor = x - T(i);
    if (detail::is_zero_value(factor)) throw DivisionByZero("rising factorial with negative index hits a zero factor");
    result *= factor;
  }
  return T(1) / result;
}

/// Bernoulli number with B_1 = -1/2.
inline Rational bernoulli(std::size_t n) { return detail::bernoulli_cache().at(n); }

}  // namespace ft
