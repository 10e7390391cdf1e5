#pragma once

// Truncated summation with a tail policy, plus Levin-type and Wynn epsilon
// acceleration for the slowly convergent (or formally divergent but
// summable) alternating Newton series that fractional orders produce.

#include "factorial_transforms/numeric/wide_real.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ft {

enum class TailPolicy { fixed_n, stop_when_small };
enum class Acceleration { none, levin_u, wynn_epsilon };

struct NumericConfig {
  std::size_t truncation = 64;
  double tolerance = 1e-10;
  TailPolicy tail_policy = TailPolicy::stop_when_small;
  Acceleration acceleration = Acceleration::levin_u;

  void validate() const {
    if (truncation < 1) throw std::invalid_argument("NumericConfig: truncation must be at least 1");
    if (!(tolerance > 0.0)) throw std::invalid_argument("NumericConfig: tolerance must be positive");
  }
};

struct SeriesResult {
  double value = 0.0;
  /// Magnitude of the first omitted term, or the spread between the last two
  /// accelerated estimates.
  double error_estimate = 0.0;
  std::size_t terms_used = 0;
  bool accelerated = false;
};

struct WideSeriesResult {
  WideReal value = 0;
  WideReal error_estimate = 0;
  std::size_t terms_used = 0;
  bool accelerated = false;

  SeriesResult narrow() const { return {to_double(value), to_double(error_estimate), terms_used, accelerated}; }
};

namespace accel {

struct Estimate {
  WideReal value;
  WideReal error;
};

/// Levin u-transform over partial sums of `terms` (all nonzero), with
/// remainder estimates (n + 1) a_n. Returns the order whose difference to
/// its predecessor is smallest.
inline std::optional<Estimate> levin_u(const std::vector<WideReal>& terms) {
  const std::size_t m = terms.size();
  if (m < 3) return std::nullopt;
  std::vector<WideReal> partial(m);
  WideReal s = 0;
  for (std::size_t i = 0; i < m; ++i) partial[i] = s += terms[i];

  const WideReal beta = 1;
  std::optional<Estimate> best;
  std::optional<WideReal> previous;
  for (std::size_t k = 1; k < m; ++k) {
    WideReal num = 0, den = 0;
    WideReal binom = 1;  // C(k, j)
    for (std::size_t j = 0; j <= k; ++j) {
      if (j > 0) binom = binom * WideReal(k - j + 1) / WideReal(j);
      WideReal ratio = (beta + WideReal(j)) / (beta + WideReal(k));
      WideReal c = binom * pow(ratio, static_cast<int>(k) - 1);
      if (j % 2 == 1) c = -c;
      WideReal omega = (beta + WideReal(j)) * terms[j];
      num += c * partial[j] / omega;
      den += c / omega;
    }
    if (den == 0) continue;
    WideReal value = num / den;
    if (previous) {
      WideReal err = abs(value - *previous);
      if (!best || err < best->error) best = Estimate{value, err};
    }
    previous = value;
  }
  return best;
}

/// Wynn's epsilon algorithm on the partial sums of `terms`.
inline std::optional<Estimate> wynn_epsilon(const std::vector<WideReal>& terms) {
  const std::size_t m = terms.size();
  if (m < 3) return std::nullopt;
  std::vector<WideReal> partial(m);
  WideReal s = 0;
  for (std::size_t i = 0; i < m; ++i) partial[i] = s += terms[i];

  // Columns eps_{-1} = 0, eps_0 = S_n; even columns approximate the limit.
  std::vector<WideReal> prev(m, WideReal(0));
  std::vector<WideReal> cur = partial;
  std::optional<Estimate> best;
  for (std::size_t col = 1; cur.size() > 1; ++col) {
    std::vector<WideReal> next(cur.size() - 1);
    bool broken = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      WideReal diff = cur[i + 1] - cur[i];
      if (diff == 0) {
        broken = true;
        break;
      }
      next[i] = prev[i + 1] + WideReal(1) / diff;
    }
    if (broken) break;
    if (col % 2 == 0 && next.size() >= 2) {
      WideReal value = next.back();
      WideReal err = abs(next.back() - next[next.size() - 2]);
      if (!best || err < best->error) best = Estimate{value, err};
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return best;
}

}  // namespace accel

/// Sums `terms` under the tail policy of `cfg`; falls back to acceleration
/// when plain truncation does not meet the tolerance.
inline WideSeriesResult sum_series(const std::vector<WideReal>& terms, const NumericConfig& cfg,
                                   const char* what = "series") {
  cfg.validate();
  WideSeriesResult out;
  const WideReal tol(cfg.tolerance);
  WideReal sum = 0;
  if (cfg.tail_policy == TailPolicy::fixed_n) {
    for (const auto& t : terms) sum += t;
    out.value = sum;
    out.error_estimate = terms.empty() ? WideReal(0) : abs(terms.back());
    out.terms_used = terms.size();
    return out;
  }

  std::size_t last_nonzero = terms.size();
  for (std::size_t n = 0; n < terms.size(); ++n) {
    if (terms[n] != 0) last_nonzero = n;
  }
  if (last_nonzero == terms.size()) {
    out.terms_used = terms.size();
    return out;
  }

  // Exact zeros (sparse or terminating series) never trigger the stop rule.
  WideReal last_abs = -1;
  for (std::size_t n = 0; n <= last_nonzero; ++n) {
    if (terms[n] == 0) continue;
    sum += terms[n];
    WideReal cur_abs = abs(terms[n]);
    WideReal bound = tol * abs(sum);
    if (last_abs >= 0 && cur_abs <= bound && last_abs <= bound) {
      out.value = sum;
      out.error_estimate = cur_abs + last_abs;
      out.terms_used = n + 1;
      return out;
    }
    last_abs = cur_abs;
  }
  // A window whose second half is exactly zero holds a terminating series.
  const std::size_t trailing_zeros = terms.size() - 1 - last_nonzero;
  if (trailing_zeros >= 2 && trailing_zeros >= std::min<std::size_t>(8, terms.size() / 2)) {
    out.value = sum;
    out.terms_used = last_nonzero + 1;
    return out;
  }

  if (cfg.acceleration != Acceleration::none) {
    std::vector<WideReal> nonzero;
    for (const auto& t : terms) {
      if (t != 0) nonzero.push_back(t);
    }
    auto estimate = cfg.acceleration == Acceleration::levin_u ? accel::levin_u(nonzero) : accel::wynn_epsilon(nonzero);
    if (estimate && estimate->error <= tol * std::max(abs(estimate->value), WideReal(1))) {
      out.value = estimate->value;
      out.error_estimate = estimate->error;
      out.terms_used = terms.size();
      out.accelerated = true;
      return out;
    }
    if (estimate) {
      std::ostringstream msg;
      msg << what << ": no convergence within " << terms.size() << " terms (accelerated estimate "
          << to_double(estimate->value) << ", spread " << to_double(estimate->error) << ")";
      throw NonConvergence(msg.str(), to_double(estimate->value), to_double(estimate->error));
    }
  }
  std::ostringstream msg;
  msg << what << ": tail policy not met within " << terms.size() << " terms (partial sum " << to_double(sum)
      << ", last term " << (terms.empty() ? 0.0 : to_double(abs(terms.back()))) << ")";
  throw NonConvergence(msg.str(), to_double(sum), terms.empty() ? 0.0 : to_double(abs(terms.back())));
}

}  // namespace ft
