#pragma once

// Function-level transforms in floating point: the exponential-generating
// series for the inverse transforms, Newton sums for the falling transform,
// Gauss-Laguerre quadrature for the rising transform, and the fractional
// derivative and difference built from them.

#include "factorial_transforms/combinatorics.hpp"
#include "factorial_transforms/numeric/gamma.hpp"
#include "factorial_transforms/numeric/quadrature.hpp"
#include "factorial_transforms/numeric/series_summation.hpp"
#include "factorial_transforms/numeric/sources.hpp"
#include "factorial_transforms/numeric/wide_real.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <type_traits>
#include <vector>

namespace ft {

enum class QuadratureScheme { gauss_laguerre, adaptive_fallback };

struct QuadratureSpec {
  std::size_t nodes = 80;
  /// gauss_laguerre: fail when doubling the nodes moves the result by more
  /// than `tolerance`; adaptive_fallback: switch to double-exponential
  /// quadrature instead.
  QuadratureScheme scheme = QuadratureScheme::adaptive_fallback;
  double tolerance = 1e-10;

  void validate() const {
    if (nodes < 2) throw std::invalid_argument("QuadratureSpec: nodes must be at least 2");
    if (!(tolerance > 0.0)) throw std::invalid_argument("QuadratureSpec: tolerance must be positive");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t nodes_used = 0;
  bool fallback = false;
};

namespace detail {

inline void require_kind(const SeriesSource& src, SeriesSource::Kind kind, const char* op) {
  if (src.kind != kind) throw std::invalid_argument(std::string(op) + ": source '" + src.name + "' has the wrong kind");
}

// Evaluates f at a double argument, preferring the wide overload.
template <class F>
double call_real(const F& f, double t) {
  if constexpr (std::is_invocable_v<const F&, const WideReal&>) {
    return to_double(WideReal(f(WideReal(t))));
  } else {
    return static_cast<double>(f(t));
  }
}

template <class F>
WideReal call_wide(const F& f, const WideReal& t) {
  if constexpr (std::is_invocable_v<const F&, const WideReal&>) {
    return WideReal(f(t));
  } else {
    return WideReal(f(to_double(t)));
  }
}

// sum_n (s)_n c_n with the tail policy.
inline WideSeriesResult newton_sum(const std::vector<WideReal>& c, const WideReal& s, const NumericConfig& cfg,
                                   const char* what) {
  std::vector<WideReal> terms(c.size());
  WideReal falling = 1;
  for (std::size_t n = 0; n < c.size(); ++n) {
    terms[n] = falling * c[n];
    falling *= s - WideReal(n);
  }
  return sum_series(terms, cfg, what);
}

// Cauchy product of e^(sign x) with c, truncated to c.size() terms.
inline std::vector<WideReal> times_exp(const std::vector<WideReal>& c, int sign) {
  const std::size_t n = c.size();
  std::vector<WideReal> e(n);
  WideReal f = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) f *= WideReal(sign) / WideReal(k);
    e[k] = f;
  }
  std::vector<WideReal> out(n, WideReal(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) out[k] += c[j] * e[k - j];
  }
  return out;
}

}  // namespace detail

/// FFT^-1 at x from integer samples: e^-x sum f(n) x^n / n!.
inline SeriesResult ifft_fn(const SeriesSource& src, double x, const NumericConfig& cfg = {}) {
  cfg.validate();
  detail::require_kind(src, SeriesSource::Kind::integer_samples, "ifft_fn");
  const WideReal wx(x);
  const WideReal damp = exp(-wx);
  std::vector<WideReal> terms(cfg.truncation);
  WideReal power = 1;  // x^n / n!
  for (std::size_t n = 0; n < cfg.truncation; ++n) {
    terms[n] = damp * src.at(n) * power;
    power *= wx / WideReal(n + 1);
  }
  return sum_series(terms, cfg, "ifft_fn").narrow();
}

/// RFT^-1 at x from a callable: e^x sum (-1)^n f(-n) x^n / n!.
inline SeriesResult irft_fn(const SeriesSource& src, double x, const NumericConfig& cfg = {}) {
  cfg.validate();
  detail::require_kind(src, SeriesSource::Kind::callable, "irft_fn");
  const WideReal wx(x);
  const WideReal grow = exp(wx);
  std::vector<WideReal> terms(cfg.truncation);
  WideReal power = 1;  // (-x)^n / n!
  for (std::size_t n = 0; n < cfg.truncation; ++n) {
    terms[n] = grow * src(WideReal(-static_cast<long>(n))) * power;
    power *= -wx / WideReal(n + 1);
  }
  return sum_series(terms, cfg, "irft_fn").narrow();
}

/// FFT at s from Taylor coefficients: sum (s)_n a_n.
inline SeriesResult fft_fn(const SeriesSource& src, double s, const NumericConfig& cfg = {}) {
  cfg.validate();
  detail::require_kind(src, SeriesSource::Kind::taylor, "fft_fn");
  std::vector<WideReal> c(cfg.truncation);
  for (std::size_t n = 0; n < cfg.truncation; ++n) c[n] = src.at(n);
  return detail::newton_sum(c, WideReal(s), cfg, "fft_fn").narrow();
}

/// int_0^inf h(t) t^(s-1) dt.
template <class H>
QuadratureResult mellin_fn(const H& h, double s, double tolerance = 1e-12) {
  auto r = quad::mellin_de([&h](double t) { return detail::call_real(h, t); }, s, tolerance);
  return {r.value, r.error_estimate, 0, true};
}

/// RFT at s: (1/Gamma(s)) int_0^inf f(t) t^(s-1) e^-t dt by generalized
/// Gauss-Laguerre quadrature, checked against the rule with twice the nodes.
template <class F>
QuadratureResult rft_fn(const F& f, double s, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (!(s > 0.0)) throw DomainError("rft_fn: s must be positive");
  auto apply = [&](std::size_t n) {
    auto rule = quad::gauss_laguerre(n, s - 1.0);
    long double sum = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      sum += rule->weights[i] * static_cast<long double>(detail::call_real(f, static_cast<double>(rule->nodes[i])));
    }
    return static_cast<double>(sum);
  };
  const double coarse = apply(spec.nodes);
  const double fine = apply(2 * spec.nodes);
  const double diff = std::fabs(coarse - fine);
  if (std::isfinite(coarse) && std::isfinite(fine) && diff <= spec.tolerance * std::max(1.0, std::fabs(fine))) {
    return {coarse, diff, spec.nodes, false};
  }
  if (spec.scheme == QuadratureScheme::gauss_laguerre) {
    std::ostringstream msg;
    msg << "rft_fn: Gauss-Laguerre with " << spec.nodes << " and " << 2 * spec.nodes << " nodes disagree (" << coarse
        << " vs " << fine << ")";
    throw QuadratureFailure(msg.str(), coarse, fine);
  }
  auto mellin = quad::mellin_de(
      [&f](double t) { return detail::call_real(f, t) * std::exp(-t); }, s, spec.tolerance * 1e-2);
  return {mellin.value / gamma_support(s), mellin.error_estimate / gamma_support(s), 0, true};
}

/// RFT at s of t -> e^(c t) g(t), c <= 1, with the exponential kept out of the
/// sampled function so that it never overflows.
template <class G>
QuadratureResult rft_fn_exp_tilted(const G& g, double c, double s, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (!(s > 0.0)) throw DomainError("rft_fn: s must be positive");
  if (c > 1.0) throw DomainError("rft_fn_exp_tilted: the tilt must not exceed 1");
  if (c < 1.0) {
    const double rate = 1.0 - c;
    auto scaled = [&g, rate](double t) { return detail::call_real(g, t / rate); };
    auto r = rft_fn(scaled, s, spec);
    const double factor = std::pow(rate, -s);
    return {r.value * factor, r.error_estimate * factor, r.nodes_used, r.fallback};
  }
  auto mellin = quad::mellin_de([&g](double t) { return detail::call_real(g, t); }, s, spec.tolerance * 1e-2);
  return {mellin.value / gamma_support(s), mellin.error_estimate / gamma_support(s), 0, true};
}

/// Taylor source of the k-th derivative: a_n -> a_(n+k) (n+k)!/n!.
inline SeriesSource derivative_source(const SeriesSource& src, std::size_t k) {
  detail::require_kind(src, SeriesSource::Kind::taylor, "derivative_source");
  if (k == 0) return src;
  auto inner = src.sequence;
  return taylor_source(
      [inner, k](std::size_t n) {
        WideReal factor = 1;
        for (std::size_t i = n + 1; i <= n + k; ++i) factor *= WideReal(i);
        return inner(n + k) * factor;
      },
      src.radius, src.name + "'");
}

/// First `count` Taylor coefficients of x -> f(x + t).
inline std::vector<WideReal> recenter(const SeriesSource& src, double t, std::size_t count, const NumericConfig& cfg) {
  detail::require_kind(src, SeriesSource::Kind::taylor, "recenter");
  std::vector<WideReal> b(count);
  if (t == 0.0) {
    for (std::size_t n = 0; n < count; ++n) b[n] = src.at(n);
    return b;
  }
  if (std::fabs(t) >= src.radius) throw DomainError("recenter: shift outside the radius of validity");
  NumericConfig inner = cfg;
  inner.truncation = std::max<std::size_t>(4 * cfg.truncation, 256);
  inner.tolerance = std::min(cfg.tolerance, 1e-14);
  inner.acceleration = Acceleration::none;
  const WideReal wt(t);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<WideReal> terms(inner.truncation);
    WideReal binom_power = 1;  // binom(m, n) t^(m-n)
    for (std::size_t j = 0; j < inner.truncation; ++j) {
      const std::size_t m = n + j;
      terms[j] = src.at(m) * binom_power;
      binom_power *= WideReal(m + 1) / WideReal(j + 1) * wt;
    }
    b[n] = sum_series(terms, inner, "recenter").value;
  }
  return b;
}

/// Fractional derivative of order `order` at t: FFT_order(e^-x f(x + t)).
inline SeriesResult fractional_derivative(const SeriesSource& src, double order, double t,
                                          const NumericConfig& cfg = {}) {
  cfg.validate();
  detail::require_kind(src, SeriesSource::Kind::taylor, "fractional_derivative");
  auto c = detail::times_exp(recenter(src, t, cfg.truncation, cfg), -1);
  return detail::newton_sum(c, WideReal(order), cfg, "fractional_derivative").narrow();
}

/// Taylor source (about 0) of t -> fractional derivative of f at t. The n-th
/// coefficient is the fractional derivative of f^(n) at 0 over n!; values are
/// memoized.
inline SeriesSource fractional_derivative_source(const SeriesSource& src, double order, const NumericConfig& cfg = {}) {
  detail::require_kind(src, SeriesSource::Kind::taylor, "fractional_derivative_source");
  struct Memo {
    std::mutex mutex;
    std::map<std::size_t, WideReal> values;
  };
  auto memo = std::make_shared<Memo>();
  return taylor_source(
      [src, order, cfg, memo](std::size_t n) {
        {
          std::lock_guard lock(memo->mutex);
          auto it = memo->values.find(n);
          if (it != memo->values.end()) return it->second;
        }
        auto d = derivative_source(src, n);
        auto c = detail::times_exp(recenter(d, 0.0, cfg.truncation, cfg), -1);
        WideReal value = detail::newton_sum(c, WideReal(order), cfg, "fractional_derivative_source").value;
        for (std::size_t k = 2; k <= n; ++k) value /= WideReal(k);
        std::lock_guard lock(memo->mutex);
        memo->values.emplace(n, value);
        return value;
      },
      src.radius, "D^" + std::to_string(order) + " " + src.name);
}

/// Fractional difference of order `order` at t through the chain
/// FFT_order(e^-x FFT^-1(f(x + t))), each stage truncated at cfg.truncation.
template <class F>
SeriesResult fractional_difference(const F& f, double order, double t, const NumericConfig& cfg = {}) {
  cfg.validate();
  const std::size_t n = cfg.truncation;
  // Stage 1: Taylor coefficients of e^-x sum f(k + t) x^k / k!.
  std::vector<WideReal> egf(n);
  WideReal inv_fact = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) inv_fact /= WideReal(k);
    egf[k] = detail::call_wide(f, WideReal(t) + WideReal(k)) * inv_fact;
  }
  auto g = detail::times_exp(egf, -1);
  // Stage 2: multiply by e^-x.
  auto h = detail::times_exp(g, -1);
  // Stage 3: Newton sum at s = order.
  return detail::newton_sum(h, WideReal(order), cfg, "fractional_difference").narrow();
}

inline SeriesResult fractional_difference(const SeriesSource& src, double order, double t,
                                          const NumericConfig& cfg = {}) {
  detail::require_kind(src, SeriesSource::Kind::callable, "fractional_difference");
  return fractional_difference([&src](const WideReal& x) { return src(x); }, order, t, cfg);
}

struct ZetaSeries {
  double leading = 0.0;
  double partial_sum = 0.0;
  std::vector<double> terms;
  std::vector<double> partial_sums;
};

/// Partial sums of (delta[s-1] - 1)/(s-1) + sum_n B_(n+1) (-1)^(n+1) s^(n) / (n+1)!
/// for n < N. No convergence is implied.
inline ZetaSeries zeta_formal_series(double s, std::size_t n_terms) {
  if (s == 1.0) throw DomainError("zeta_formal_series: pole at s = 1");
  if (n_terms < 1) throw std::invalid_argument("zeta_formal_series: at least one term required");
  ZetaSeries out;
  const WideReal ws(s);
  WideReal leading = WideReal(-1) / (ws - 1);
  WideReal sum = leading;
  WideReal rising = 1;
  WideReal inv_fact = 1;  // 1/(n+1)!
  out.leading = to_double(leading);
  for (std::size_t n = 0; n < n_terms; ++n) {
    inv_fact /= WideReal(n + 1);
    WideReal term = to_wide(bernoulli(n + 1)) * rising * inv_fact;
    if ((n + 1) % 2 == 1) term = -term;
    sum += term;
    out.terms.push_back(to_double(term));
    out.partial_sums.push_back(to_double(sum));
    rising *= ws + WideReal(n);
  }
  out.partial_sum = to_double(sum);
  return out;
}

}  // namespace ft
