#pragma once

// Shared plumbing for identity checks: specs, reports, seeded random
// polynomials and exact/numeric tallies.

#include "factorial_transforms/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ft::verify {

enum class Layer { exact, numeric };
enum class Status { pass, fail, error };

inline const char* to_string(Layer l) { return l == Layer::exact ? "exact" : "numeric"; }
inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

/// Seeded generator for random test data. Coefficients are p/q with
/// p in [-9, 9] and q in [1, 9].
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  Rational rational() { return Rational(integer(-9, 9), integer(1, 9)); }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

  /// Degree drawn uniformly from [0, max_degree], coefficients random.
  BasisPolynomial polynomial(std::size_t max_degree, Basis basis = Basis::monomial) {
    std::size_t degree = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
    std::vector<Rational> c(degree + 1);
    for (auto& x : c) x = rational();
    if (c.back() == 0) c.back() = 1;
    return BasisPolynomial(basis, std::move(c));
  }

  Basis basis() { return static_cast<Basis>(integer(0, 2)); }

 private:
  std::mt19937_64 engine_;
};

/// Outcome of running one check body.
struct Outcome {
  std::size_t trials = 0;
  std::size_t mismatches = 0;
  double max_abs_error = 0.0;
  std::string note;
};

/// Accumulates exact comparisons.
class ExactTally {
 public:
  void compare(const Rational& lhs, const Rational& rhs) {
    ++out_.trials;
    if (lhs != rhs) {
      ++out_.mismatches;
      record(to_double(abs(Rational(lhs - rhs))));
    }
  }

  /// Equality as functions (basis-independent).
  void compare(const BasisPolynomial& lhs, const BasisPolynomial& rhs) {
    ++out_.trials;
    BasisPolynomial a = convert_basis(lhs, Basis::monomial);
    BasisPolynomial b = convert_basis(rhs, Basis::monomial);
    if (!(a == b)) {
      ++out_.mismatches;
      record(to_double(max_coefficient_difference(a, b)));
    }
  }

  void expect(bool ok, double error = 1.0) {
    ++out_.trials;
    if (!ok) {
      ++out_.mismatches;
      record(error);
    }
  }

  void note(std::string text) { out_.note = std::move(text); }
  Outcome done() const { return out_; }

 private:
  void record(double err) {
    if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
    out_.max_abs_error = std::max(out_.max_abs_error, err);
  }
  Outcome out_;
};

/// Accumulates floating-point discrepancies.
class NumericTally {
 public:
  void compare(double computed, double expected) {
    ++out_.trials;
    double err = std::fabs(computed - expected);
    if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
    out_.max_abs_error = std::max(out_.max_abs_error, err);
  }

  /// |computed - expected| / max(1, |expected|).
  void compare_scaled(double computed, double expected) {
    ++out_.trials;
    double err = std::fabs(computed - expected) / std::max(1.0, std::fabs(expected));
    if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
    out_.max_abs_error = std::max(out_.max_abs_error, err);
  }

  void note(std::string text) { out_.note = std::move(text); }
  Outcome done() const { return out_; }

 private:
  Outcome out_;
};

struct CheckSpec {
  std::string name;
  Layer layer = Layer::exact;
  std::string description;
  /// Numeric acceptance bound; exact checks use 0.
  double tolerance = 0.0;
  /// Informational checks report a discrepancy and never fail.
  bool informational = false;
  std::function<Outcome(Rng&)> body;
};

struct CheckReport {
  std::string name;
  Layer layer = Layer::exact;
  Status status = Status::error;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  bool informational = false;
  std::string description;
  std::string note;
};

}  // namespace ft::verify
