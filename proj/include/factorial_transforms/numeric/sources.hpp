#pragma once

// Numeric function sources: Taylor coefficients, integer samples, or a
// callable on real arguments, plus the builtin named sources of the CLI.

#include "factorial_transforms/numeric/gamma.hpp"
#include "factorial_transforms/numeric/wide_real.hpp"
#include "factorial_transforms/polynomial.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <regex>
#include <string>

namespace ft {

struct SeriesSource {
  enum class Kind { taylor, integer_samples, callable };

  Kind kind = Kind::taylor;
  /// taylor: n -> a_n; integer_samples: n -> f(n).
  std::function<WideReal(std::size_t)> sequence;
  /// callable: x -> f(x).
  std::function<WideReal(const WideReal&)> function;
  /// Radius of validity of a Taylor source.
  double radius = std::numeric_limits<double>::infinity();
  std::string name;

  WideReal at(std::size_t n) const {
    if (!sequence) throw std::logic_error("source '" + name + "' has no sequence provider");
    return sequence(n);
  }
  WideReal operator()(const WideReal& x) const {
    if (!function) throw std::logic_error("source '" + name + "' has no callable provider");
    return function(x);
  }
};

inline SeriesSource taylor_source(std::function<WideReal(std::size_t)> coeffs,
                                  double radius = std::numeric_limits<double>::infinity(), std::string name = "taylor") {
  SeriesSource s;
  s.kind = SeriesSource::Kind::taylor;
  s.sequence = std::move(coeffs);
  s.radius = radius;
  s.name = std::move(name);
  return s;
}

inline SeriesSource sample_source(std::function<WideReal(std::size_t)> samples, std::string name = "samples") {
  SeriesSource s;
  s.kind = SeriesSource::Kind::integer_samples;
  s.sequence = std::move(samples);
  s.name = std::move(name);
  return s;
}

inline SeriesSource callable_source(std::function<WideReal(const WideReal&)> f, std::string name = "callable") {
  SeriesSource s;
  s.kind = SeriesSource::Kind::callable;
  s.function = std::move(f);
  s.name = std::move(name);
  return s;
}

/// Taylor source of a polynomial (any basis), exact coefficients rounded once.
inline SeriesSource taylor_source(const BasisPolynomial& p) {
  BasisPolynomial mono = convert_basis(p, Basis::monomial);
  return taylor_source([mono](std::size_t n) { return to_wide(mono.coeff(n)); },
                       std::numeric_limits<double>::infinity(), "polynomial");
}

inline SeriesSource sample_source(const BasisPolynomial& p) {
  return sample_source([p](std::size_t n) { return to_wide(eval(p, Rational(n))); }, "polynomial");
}

inline SeriesSource callable_source(const BasisPolynomial& p) {
  return callable_source([p](const WideReal& x) { return eval(p, x); }, "polynomial");
}

/// The views a named source can offer. Absent views are empty.
struct SourceBundle {
  std::string name;
  std::optional<SeriesSource> taylor;
  std::optional<SeriesSource> samples;
  std::optional<SeriesSource> callable;
};

namespace builtin {

namespace detail {
inline WideReal inverse_factorial(std::size_t n) {
  WideReal r = 1;
  for (std::size_t k = 2; k <= n; ++k) r /= WideReal(k);
  return r;
}
}  // namespace detail

/// e^(a x).
inline SourceBundle exp(double a) {
  const WideReal wa(a);
  SourceBundle b{"exp(" + std::to_string(a) + ")", {}, {}, {}};
  b.taylor = taylor_source([wa](std::size_t n) { return pow(wa, static_cast<int>(n)) * detail::inverse_factorial(n); },
                           std::numeric_limits<double>::infinity(), b.name);
  b.samples = sample_source([wa](std::size_t n) { return mp::exp(wa * WideReal(n)); }, b.name);
  b.callable = callable_source([wa](const WideReal& x) { return mp::exp(wa * x); }, b.name);
  return b;
}

/// sin(w x).
inline SourceBundle sin(double w) {
  const WideReal ww(w);
  SourceBundle b{"sin(" + std::to_string(w) + ")", {}, {}, {}};
  b.taylor = taylor_source(
      [ww](std::size_t n) -> WideReal {
        if (n % 2 == 0) return 0;
        WideReal c = pow(ww, static_cast<int>(n)) * detail::inverse_factorial(n);
        return (n % 4 == 1) ? c : WideReal(-c);
      },
      std::numeric_limits<double>::infinity(), b.name);
  b.samples = sample_source([ww](std::size_t n) { return mp::sin(ww * WideReal(n)); }, b.name);
  b.callable = callable_source([ww](const WideReal& x) { return mp::sin(ww * x); }, b.name);
  return b;
}

/// cos(w x).
inline SourceBundle cos(double w) {
  const WideReal ww(w);
  SourceBundle b{"cos(" + std::to_string(w) + ")", {}, {}, {}};
  b.taylor = taylor_source(
      [ww](std::size_t n) -> WideReal {
        if (n % 2 == 1) return 0;
        WideReal c = pow(ww, static_cast<int>(n)) * detail::inverse_factorial(n);
        return (n % 4 == 0) ? c : WideReal(-c);
      },
      std::numeric_limits<double>::infinity(), b.name);
  b.samples = sample_source([ww](std::size_t n) { return mp::cos(ww * WideReal(n)); }, b.name);
  b.callable = callable_source([ww](const WideReal& x) { return mp::cos(ww * x); }, b.name);
  return b;
}

/// The sequence r^n: power-series coefficients of 1/(1 - r x), samples r^n,
/// callable r^x (r > 0).
inline SourceBundle geometric(double r) {
  const WideReal wr(r);
  SourceBundle b{"geometric(" + std::to_string(r) + ")", {}, {}, {}};
  double radius = r == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::fabs(r);
  b.taylor = taylor_source([wr](std::size_t n) { return pow(wr, static_cast<int>(n)); }, radius, b.name);
  b.samples = sample_source([wr](std::size_t n) { return pow(wr, static_cast<int>(n)); }, b.name);
  if (r > 0.0) b.callable = callable_source([wr](const WideReal& x) { return mp::exp(x * mp::log(wr)); }, b.name);
  return b;
}

/// Samples n! = Gamma(n + 1); callable Gamma(x + 1).
inline SourceBundle gamma_samples() {
  SourceBundle b{"gamma-samples", {}, {}, {}};
  b.samples = sample_source(
      [](std::size_t n) {
        WideReal r = 1;
        for (std::size_t k = 2; k <= n; ++k) r *= WideReal(k);
        return r;
      },
      b.name);
  b.callable = callable_source([](const WideReal& x) { return boost::math::tgamma(x + 1); }, b.name);
  return b;
}

}  // namespace builtin

/// Parses "exp(a)", "sin(w)", "cos(w)", "geometric(r)" or "gamma-samples".
inline SourceBundle named_source(const std::string& spec) {
  if (spec == "gamma-samples") return builtin::gamma_samples();
  static const std::regex pattern(R"(^\s*(exp|sin|cos|geometric)\(\s*([^()\s]+)\s*\)\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, pattern)) {
    throw ParseError("unknown source '" + spec + "' (expected exp(a), sin(w), cos(w), geometric(r) or gamma-samples)");
  }
  double parameter = to_double(parse_rational(m[2].str()));
  const std::string family = m[1].str();
  if (family == "exp") return builtin::exp(parameter);
  if (family == "sin") return builtin::sin(parameter);
  if (family == "cos") return builtin::cos(parameter);
  return builtin::geometric(parameter);
}

}  // namespace ft
