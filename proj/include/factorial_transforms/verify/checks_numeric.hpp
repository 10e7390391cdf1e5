#pragma once

// Numeric-layer identity checks against closed forms computed on an
// independent code path.

#include "factorial_transforms/numeric/gamma.hpp"
#include "factorial_transforms/numeric/quadrature.hpp"
#include "factorial_transforms/numeric/sources.hpp"
#include "factorial_transforms/numeric/transforms_numeric.hpp"
#include "factorial_transforms/special_polynomials.hpp"
#include "factorial_transforms/transforms_exact.hpp"
#include "factorial_transforms/verify/check_support.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace ft::verify::numeric_checks {

inline NumericConfig tight(std::size_t truncation = 64) {
  NumericConfig cfg;
  cfg.truncation = truncation;
  cfg.tolerance = 1e-13;
  return cfg;
}

// Taylor sums equal the exact transform for polynomial sources.
inline Outcome newton_taylor_duality(Rng& rng) {
  NumericTally t;
  for (int trial = 0; trial < 30; ++trial) {
    BasisPolynomial p = rng.polynomial(10);
    BasisPolynomial image = fft_poly(p);
    SeriesSource src = taylor_source(p);
    for (long s = 0; s <= 12; ++s) {
      t.compare_scaled(fft_fn(src, static_cast<double>(s), tight()).value, to_double(eval(image, Rational(s))));
    }
    for (double s : {0.5, 2.7}) t.compare_scaled(fft_fn(src, s, tight()).value, eval(image, s));
  }
  return t.done();
}

inline Outcome ifft_series_check(Rng& rng) {
  NumericTally t;
  for (int trial = 0; trial < 20; ++trial) {
    BasisPolynomial p = rng.polynomial(6, Basis::falling);
    BasisPolynomial image = ifft_poly(p);
    SeriesSource src = sample_source(p);
    for (double x : {0.5, 1.0, 2.0}) t.compare_scaled(ifft_fn(src, x, tight(128)).value, eval(image, x));
  }
  return t.done();
}

inline Outcome irft_series_check(Rng& rng) {
  NumericTally t;
  for (int trial = 0; trial < 20; ++trial) {
    BasisPolynomial p = rng.polynomial(6, Basis::rising);
    BasisPolynomial image = irft_poly(p);
    SeriesSource src = callable_source(p);
    for (double x : {0.5, 1.0, 2.0}) t.compare_scaled(irft_fn(src, x, tight(128)).value, eval(image, x));
  }
  return t.done();
}

// Quadrature against the exact rising transform: random polynomials and
// the monomials t^n, n <= 8.
inline Outcome rft_quadrature(Rng& rng) {
  NumericTally t;
  const double points[] = {0.5, 1.5, 2.5, 3.7};
  for (int trial = 0; trial < 20; ++trial) {
    BasisPolynomial p = rng.polynomial(8);
    BasisPolynomial image = rft_poly(p);
    auto f = [&p](double x) { return eval(p, x); };
    for (double s : points) t.compare(rft_fn(f, s).value, eval(image, s));
  }
  for (int n = 0; n <= 8; ++n) {
    auto f = [n](double x) { return std::pow(x, n); };
    for (double s : points) {
      double expected = 1.0;
      for (int i = 0; i < n; ++i) expected *= s + i;
      t.compare(rft_fn(f, s).value, expected);
    }
  }
  return t.done();
}

// Gamma(s) RFT(f)(s) = M(f e^-t)(s).
inline Outcome mellin_consistency(Rng& rng) {
  NumericTally t;
  const double points[] = {0.5, 1.5, 2.5};
  for (int trial = 0; trial < 6; ++trial) {
    BasisPolynomial p = rng.polynomial(5);
    auto f = [&p](double x) { return eval(p, x); };
    for (double s : points) {
      double lhs = rft_fn(f, s).value * gamma_support(s);
      double rhs = mellin_fn([&f](double x) { return f(x) * std::exp(-x); }, s).value;
      t.compare_scaled(lhs, rhs);
    }
  }
  auto decay = [](double x) { return std::exp(-x); };
  auto rational = [](double x) { return 1.0 / (1.0 + x); };
  for (double s : {0.3, 0.7, 1.9}) {
    t.compare_scaled(rft_fn(decay, s).value * gamma_support(s),
                     mellin_fn([](double x) { return std::exp(-2 * x); }, s).value);
    t.compare_scaled(rft_fn(rational, s).value * gamma_support(s),
                     mellin_fn([](double x) { return std::exp(-x) / (1.0 + x); }, s).value);
  }
  return t.done();
}

// int_0^T FFT^-1(r^n)(x) dx = sum r^n with the tail beyond T below 1e-12.
inline Outcome ifft_integral_sum(Rng&) {
  NumericTally t;
  for (double r : {0.5, 1.0 / 3.0}) {
    const double rate = 1.0 - r;
    const double T = std::log(1e12 / rate) / rate;
    SeriesSource src = builtin::geometric(r).samples.value();
    NumericConfig cfg = tight(256);
    auto integrand = [&src, &cfg](double x) { return ifft_fn(src, x, cfg).value; };
    t.compare(quad::tanh_sinh(integrand, 0.0, T, 1e-11).value, 1.0 / (1.0 - r));
  }
  return t.done();
}

inline Outcome charlier_orthogonality(Rng&) {
  NumericTally t;
  const double e = std::exp(1.0);
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::size_t m = 0; m <= 5; ++m) {
      double sum = charlier_orthogonality_sum(n, m, 1.0, 60);
      double expected = n == m ? e * to_double(Rational(factorial(n))) : 0.0;
      t.compare(sum, expected);
    }
  }
  return t.done();
}

// RFT(e^x L(f)) = M(f)(1 - s) for f = e^-t: RFT(e^t / (1 + t))(s) = Gamma(1 - s).
inline Outcome rft_laplace_first_equality(Rng&) {
  NumericTally t;
  for (double s : {0.25, 0.5, 0.75}) {
    double lhs = rft_fn_exp_tilted([](double x) { return 1.0 / (1.0 + x); }, 1.0, s).value;
    t.compare(lhs, gamma_support(1.0 - s));
  }
  return t.done();
}

// Printed final argument M_t(f)(-x-1) against the quadrature value.
inline Outcome rft_laplace_last_argument(Rng&) {
  NumericTally t;
  for (double s : {0.25, 0.5, 0.75}) {
    double lhs = rft_fn_exp_tilted([](double x) { return 1.0 / (1.0 + x); }, 1.0, s).value;
    t.compare(lhs, gamma_support(-s - 1.0));
  }
  t.note("M(e^-t)(-s-1) = Gamma(-s-1) versus the computed Gamma(1-s)");
  return t.done();
}

inline Outcome fractional_derivative_check(Rng&) {
  NumericTally t;
  auto e2 = builtin::exp(2).taylor.value();
  auto e3 = builtin::exp(3).taylor.value();
  auto e1 = builtin::exp(1).taylor.value();
  t.compare(fractional_derivative(e2, 0.5, 0.0, tight()).value, std::sqrt(2.0));
  t.compare(fractional_derivative(e3, 0.5, 0.2, tight()).value, std::sqrt(3.0) * std::exp(0.6));
  t.compare(fractional_derivative(e1, 1.0, 1.0, tight()).value, std::exp(1.0));
  // a^s e^(a t) for a = 1/2, s = 1/3, t = -0.4.
  auto eh = builtin::exp(0.5).taylor.value();
  t.compare(fractional_derivative(eh, 1.0 / 3.0, -0.4, tight()).value, std::pow(0.5, 1.0 / 3.0) * std::exp(-0.2));
  return t.done();
}

inline Outcome fractional_ladder(Rng&) {
  NumericTally t;
  auto e2 = builtin::exp(2).taylor.value();
  NumericConfig cfg = tight();
  SeriesSource half = fractional_derivative_source(e2, 0.5, cfg);
  double twice = fractional_derivative(half, 0.5, 0.0, cfg).value;
  double once = fractional_derivative(e2, 1.0, 0.0, cfg).value;
  t.compare(twice, once);
  return t.done();
}

inline Outcome fractional_difference_check(Rng&) {
  NumericTally t;
  auto power = [](double a) {
    return [a](const WideReal& u) { return mp::exp(u * mp::log(WideReal(a))); };
  };
  NumericConfig cfg = tight();
  t.compare(fractional_difference(power(2.0), 0.5, 0.0, cfg).value, 1.0);
  t.compare(fractional_difference(power(3.0), 1.0, 0.0, cfg).value, 2.0);
  t.compare(fractional_difference(power(2.0), 2.0, 1.0, cfg).value, 2.0);
  // (a-1)^s a^t
  t.compare(fractional_difference(power(1.5), 0.5, 0.3, cfg).value, std::pow(0.5, 0.5) * std::pow(1.5, 0.3));
  return t.done();
}

// FFT^-1((x)_-n) = x^-n (1 - Gamma(n,x)/(n-1)!)
inline Outcome ifft_negative_falling(Rng&) {
  NumericTally t;
  for (long n = 1; n <= 3; ++n) {
    SeriesSource src = sample_source([n](std::size_t k) { return falling_factorial(WideReal(k), -n); });
    double nf = std::tgamma(static_cast<double>(n));
    for (double x : {0.5, 1.0, 2.0}) {
      double expected = std::pow(x, -n) * (1.0 - incomplete_gamma_upper(static_cast<int>(n), x) / nf);
      t.compare(ifft_fn(src, x, tight()).value, expected);
    }
  }
  return t.done();
}

// RFT^-1(x^(-n) rising) = x^-n - Gamma(n,-x)/(n-1)! x^-n
inline Outcome irft_negative_rising(Rng&) {
  NumericTally t;
  for (long n = 1; n <= 3; ++n) {
    SeriesSource src = callable_source([n](const WideReal& s) { return rising_factorial(s, -n); });
    double nf = std::tgamma(static_cast<double>(n));
    for (double x : {0.5, 1.0, 2.0}) {
      double expected = std::pow(x, -n) - incomplete_gamma_upper(static_cast<int>(n), -x) / nf * std::pow(x, -n);
      t.compare(irft_fn(src, x, tight()).value, expected);
    }
  }
  return t.done();
}

// sum_k (-x)^k/k! FFT^-1(f(.+k))(x) FFT^-1(g(.+k))(x) against
// e^-x sum_k (-1)^k Delta^k f(0) Delta^k g(0) x^k / k!.
inline Outcome eq89_discrepancy(Rng& rng) {
  NumericTally t;
  for (int trial = 0; trial < 4; ++trial) {
    BasisPolynomial f = rng.polynomial(3, Basis::falling), g = rng.polynomial(3, Basis::falling);
    for (double x : {0.5, 1.0}) {
      const WideReal wx(x);
      WideReal lhs = 0, weight = 1;
      for (std::size_t k = 0; k < 120; ++k) {
        if (k > 0) weight *= -wx / WideReal(k);
        BasisPolynomial F = ifft_poly(shift(f, Rational(static_cast<long>(k))));
        BasisPolynomial G = ifft_poly(shift(g, Rational(static_cast<long>(k))));
        lhs += weight * eval(F, wx) * eval(G, wx);
      }
      WideReal rhs = 0, term = 1;
      BasisPolynomial df = f, dg = g;
      for (std::size_t k = 0; k < 8; ++k) {
        if (k > 0) {
          term *= -wx / WideReal(k);
          df = forward_difference(df);
          dg = forward_difference(dg);
        }
        rhs += term * to_wide(eval(df, Rational(0)) * eval(dg, Rational(0)));
      }
      rhs *= mp::exp(-wx);
      t.compare(to_double(lhs), to_double(rhs));
    }
  }
  t.note("largest |lhs - rhs| over random cubic f, g at x in {0.5, 1}");
  return t.done();
}

// Partial sums of the rising-factorial Bernoulli series at s = 2.
inline Outcome zeta_partial_sums(Rng&) {
  NumericTally t;
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  auto series = zeta_formal_series(2.0, 30);
  double closest = series.partial_sums.front();
  for (double v : series.partial_sums) {
    if (std::fabs(v - zeta2) < std::fabs(closest - zeta2)) closest = v;
  }
  t.compare(closest, zeta2);
  std::ostringstream msg;
  msg << "s = 2: partial sums N = 1..30 range over [" << *std::min_element(series.partial_sums.begin(), series.partial_sums.end())
      << ", " << *std::max_element(series.partial_sums.begin(), series.partial_sums.end()) << "], closest "
      << closest << " vs zeta(2) = " << zeta2;
  t.note(msg.str());
  return t.done();
}

// RFT(t^a f(t))(s) = Gamma(s+a)/Gamma(s) RFT(f)(s+a), f = e^-t, a = 1.3.
inline Outcome table2_power_weight(Rng&) {
  NumericTally t;
  const double a = 1.3;
  auto f = [](double x) { return std::exp(-x); };
  auto weighted = [a](double x) { return std::pow(x, a) * std::exp(-x); };
  for (double s : {0.7, 1.9}) {
    double lhs = rft_fn(weighted, s).value;
    double rhs = gamma_support(s + a) / gamma_support(s) * rft_fn(f, s + a).value;
    t.compare(lhs, rhs);
  }
  return t.done();
}

// RFT(f(a t))(s) = a^-s RFT(e^((1-1/a) t) f(t))(s), f = e^-t, a = 2.
inline Outcome table2_scaling(Rng&) {
  NumericTally t;
  const double a = 2.0;
  auto scaled = [a](double x) { return std::exp(-a * x); };
  auto tilted = [a](double x) { return std::exp((1.0 - 1.0 / a) * x) * std::exp(-x); };
  for (double s : {0.7, 1.9}) t.compare(rft_fn(scaled, s).value, std::pow(a, -s) * rft_fn(tilted, s).value);
  return t.done();
}

// FFT(e^-x / (1 - x)) = Gamma(x + 1): FFT^-1 of n! samples.
inline Outcome gamma_row(Rng&) {
  NumericTally t;
  SeriesSource src = builtin::gamma_samples().samples.value();
  for (int i = 1; i <= 9; ++i) {
    double x = 0.1 * i;
    t.compare(ifft_fn(src, x, tight()).value, std::exp(-x) / (1.0 - x));
  }
  return t.done();
}

inline SeriesSource shifted_gamma_samples(double offset) {
  return sample_source([offset](std::size_t n) { return boost::math::tgamma(WideReal(n) + WideReal(offset)); });
}

// FFT(Gamma(y+1) e^-x / (1-x)^(y+1)) = Gamma(x + y + 1).
inline Outcome gamma_shift_row(Rng&) {
  NumericTally t;
  for (double y : {0.5, 1.5}) {
    SeriesSource src = shifted_gamma_samples(y + 1.0);
    for (double x : {0.2, 0.5}) {
      t.compare_scaled(ifft_fn(src, x, tight()).value, std::tgamma(y + 1.0) * std::exp(-x) / std::pow(1.0 - x, y + 1.0));
    }
  }
  return t.done();
}

// As printed: Gamma(x + y) on the right.
inline Outcome gamma_shift_row_as_printed(Rng&) {
  NumericTally t;
  for (double y : {0.5, 1.5}) {
    SeriesSource src = shifted_gamma_samples(y);
    for (double x : {0.2, 0.5}) {
      t.compare_scaled(ifft_fn(src, x, tight()).value, std::tgamma(y + 1.0) * std::exp(-x) / std::pow(1.0 - x, y + 1.0));
    }
  }
  t.note("samples Gamma(n + y) do not reproduce Gamma(y+1) e^-x / (1-x)^(y+1); Gamma(n + y + 1) does");
  return t.done();
}

// FFT(e^((a-1)x)) = a^x, both directions.
inline Outcome exp_row(Rng&) {
  NumericTally t;
  for (double a : {0.5, 1.5, 2.0, 3.0}) {
    SeriesSource taylor = builtin::exp(a - 1.0).taylor.value();
    for (double s : {0.5, 1.0, 2.3, 3.0}) t.compare_scaled(fft_fn(taylor, s, tight()).value, std::pow(a, s));
    SeriesSource samples = builtin::geometric(a).samples.value();
    for (double x : {0.5, 1.0}) t.compare_scaled(ifft_fn(samples, x, tight()).value, std::exp((a - 1.0) * x));
  }
  return t.done();
}

inline std::complex<double> trig_closed_form(double omega, double s) {
  return std::polar(std::pow(omega * omega + 1.0, s / 2.0), s * std::atan(omega));
}

// FFT(e^(i w x)) = (w^2+1)^(x/2) e^(i x atan w), real and imaginary parts.
inline Outcome exp_i_omega_row(Rng&) {
  NumericTally t;
  for (double w : {0.5, 1.0}) {
    SeriesSource c = builtin::cos(w).taylor.value(), s = builtin::sin(w).taylor.value();
    for (double x : {0.5, 1.0, 2.3}) {
      std::complex<double> value(fft_fn(c, x, tight()).value, fft_fn(s, x, tight()).value);
      t.compare(std::abs(value - trig_closed_form(w, x)), 0.0);
    }
  }
  return t.done();
}

inline Outcome sin_row(Rng&) {
  NumericTally t;
  for (double w : {0.5, 1.0}) {
    SeriesSource src = builtin::sin(w).taylor.value();
    for (double x : {0.5, 1.0, 2.3}) t.compare(fft_fn(src, x, tight()).value, trig_closed_form(w, x).imag());
  }
  return t.done();
}

inline Outcome cos_row(Rng&) {
  NumericTally t;
  for (double w : {0.5, 1.0}) {
    SeriesSource src = builtin::cos(w).taylor.value();
    for (double x : {0.5, 1.0, 2.3}) t.compare(fft_fn(src, x, tight()).value, trig_closed_form(w, x).real());
  }
  return t.done();
}

// FFT(sin(x tan w)) = sin(w x) / cos^x(w), |tan w| <= 1.
inline Outcome sin_tan_row(Rng&) {
  NumericTally t;
  for (double w : {0.3, 0.6, std::numbers::pi / 4}) {
    SeriesSource src = builtin::sin(std::tan(w)).taylor.value();
    for (double x : {0.5, 1.0, 2.3}) {
      t.compare(fft_fn(src, x, tight()).value, std::sin(w * x) / std::pow(std::cos(w), x));
    }
  }
  return t.done();
}

inline Outcome cos_tan_row(Rng&) {
  NumericTally t;
  for (double w : {0.3, 0.6, std::numbers::pi / 4}) {
    SeriesSource src = builtin::cos(std::tan(w)).taylor.value();
    for (double x : {0.5, 1.0, 2.3}) {
      t.compare(fft_fn(src, x, tight()).value, std::cos(w * x) / std::pow(std::cos(w), x));
    }
  }
  return t.done();
}

}  // namespace ft::verify::numeric_checks
