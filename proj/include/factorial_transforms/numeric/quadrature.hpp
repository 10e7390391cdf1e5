#pragma once

// Generalized Gauss-Laguerre rules for the weight t^alpha e^-t, plus
// double-exponential rules on (0, inf) and on finite intervals.

#include "factorial_transforms/rational.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ft {

/// Raised when a quadrature rule does not stabilize.
class QuadratureFailure : public std::runtime_error {
 public:
  QuadratureFailure(const std::string& what, double coarse, double fine)
      : std::runtime_error(what), coarse_(coarse), fine_(fine) {}
  double coarse() const { return coarse_; }
  double fine() const { return fine_; }

 private:
  double coarse_;
  double fine_;
};

namespace quad {

/// Nodes and weights normalized so that the weights sum to one, i.e. the rule
/// approximates (1/Gamma(alpha+1)) int_0^inf g(t) t^alpha e^-t dt.
struct LaguerreRule {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};

namespace detail {

// L_n^(alpha)(x) and L_{n-1}^(alpha)(x) by the three-term recurrence.
inline std::pair<long double, long double> laguerre_pair(std::size_t n, long double alpha, long double x) {
  long double prev = 1.0L;
  long double cur = 1.0L + alpha - x;
  if (n == 0) return {prev, 0.0L};
  for (std::size_t k = 1; k < n; ++k) {
    long double kk = static_cast<long double>(k);
    long double next = ((2.0L * kk + 1.0L + alpha - x) * cur - (kk + alpha) * prev) / (kk + 1.0L);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

inline LaguerreRule build_rule(std::size_t n, double alpha) {
  Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
  Eigen::VectorXd off(static_cast<Eigen::Index>(n > 1 ? n - 1 : 0));
  for (std::size_t i = 0; i < n; ++i) diag[static_cast<Eigen::Index>(i)] = 2.0 * static_cast<double>(i) + alpha + 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    double di = static_cast<double>(i);
    off[static_cast<Eigen::Index>(i - 1)] = std::sqrt(di * (di + alpha));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Gauss-Laguerre: eigen-solve failed");

  const long double a = alpha;
  const long double nn = static_cast<long double>(n);
  const long double log_norm =
      std::lgamma(nn + a + 1.0L) - std::lgamma(a + 1.0L) - std::lgamma(nn + 1.0L);
  LaguerreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    long double x = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
    long double deriv = 0.0L;
    for (int iter = 0; iter < 8; ++iter) {
      auto [ln, lm] = laguerre_pair(n, a, x);
      deriv = (nn * ln - (nn + a) * lm) / x;
      long double step = ln / deriv;
      x -= step;
      if (std::fabs(step) <= 4 * std::numeric_limits<long double>::epsilon() * std::fabs(x)) break;
    }
    auto [ln, lm] = laguerre_pair(n, a, x);
    deriv = (nn * ln - (nn + a) * lm) / x;
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_norm - std::log(x) - 2.0L * std::log(std::fabs(deriv)));
  }
  return rule;
}

}  // namespace detail

/// Cached rule for (n, alpha); concurrent readers share the immutable table.
inline std::shared_ptr<const LaguerreRule> gauss_laguerre(std::size_t n, double alpha) {
  if (n < 2) throw std::invalid_argument("Gauss-Laguerre: at least two nodes required");
  if (!(alpha > -1.0)) throw DomainError("Gauss-Laguerre: alpha must exceed -1");
  static std::shared_mutex mutex;
  static std::map<std::pair<std::size_t, double>, std::shared_ptr<const LaguerreRule>> cache;
  const auto key = std::make_pair(n, alpha);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const LaguerreRule>(detail::build_rule(n, alpha));
  std::unique_lock lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

struct DEResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels = 0;
};

namespace detail {

// Trapezoid sums in u with step halving; `point(u)` returns the transformed
// integrand including the Jacobian.
template <class Point>
DEResult trapezoid_levels(Point point, double u_max, double tol, const char* what) {
  constexpr int max_levels = 9;
  double h = 0.5;
  long double sum = point(0.0);
  for (double u = h; u <= u_max; u += h) sum += point(u) + point(-u);
  long double estimate = h * sum;
  if (!std::isfinite(static_cast<double>(estimate))) throw QuadratureFailure(std::string(what) + ": integrand not finite", 0, 0);
  for (int level = 1; level <= max_levels; ++level) {
    h /= 2;
    for (double u = h; u <= u_max; u += 2 * h) sum += point(u) + point(-u);
    long double next = h * sum;
    if (!std::isfinite(static_cast<double>(next))) throw QuadratureFailure(std::string(what) + ": integrand not finite", 0, 0);
    long double diff = std::fabs(next - estimate);
    estimate = next;
    if (level >= 3 && diff <= tol * std::max(1.0L, std::fabs(next))) {
      return {static_cast<double>(next), static_cast<double>(diff), level};
    }
  }
  std::ostringstream msg;
  msg << what << ": step halving did not stabilize (last estimate " << static_cast<double>(estimate) << ")";
  throw QuadratureFailure(msg.str(), static_cast<double>(estimate), static_cast<double>(estimate));
}

}  // namespace detail

/// int_0^inf h(t) t^(s-1) dt by the exp-sinh substitution t = exp(pi/2 sinh u).
inline DEResult mellin_de(const std::function<double(double)>& h, double s, double tol = 1e-12) {
  if (!(s > 0.0)) throw DomainError("Mellin quadrature: s must be positive");
  const long double half_pi = std::numbers::pi_v<long double> / 2;
  auto point = [&](double u) -> long double {
    long double log_t = half_pi * std::sinh(static_cast<long double>(u));
    long double t = std::exp(log_t);
    if (t == 0.0L || !std::isfinite(static_cast<double>(t))) return 0.0L;
    long double hv = h(static_cast<double>(t));
    // Far-tail overflow (e.g. t^n e^-t as inf * 0) is where the integrand has decayed.
    if (!std::isfinite(static_cast<double>(hv)) && log_t > 40.0L) return 0.0L;
    if (hv == 0.0L) return 0.0L;
    return hv * std::exp(static_cast<long double>(s) * log_t) * half_pi * std::cosh(static_cast<long double>(u));
  };
  return detail::trapezoid_levels(point, 6.5, tol, "Mellin quadrature");
}

/// int_a^b g(x) dx by the tanh-sinh substitution.
inline DEResult tanh_sinh(const std::function<double(double)>& g, double a, double b, double tol = 1e-12) {
  const long double half = (static_cast<long double>(b) - a) / 2;
  const long double half_pi = std::numbers::pi_v<long double> / 2;
  auto point = [&](double u) -> long double {
    long double v = half_pi * std::sinh(static_cast<long double>(u));
    long double c = std::cosh(v);
    long double w = half * half_pi * std::cosh(static_cast<long double>(u)) / (c * c);
    if (w < 1e-300L) return 0.0L;
    // Distance to the nearer endpoint, computed without cancellation.
    long double d = 2 * half / (std::exp(2 * std::fabs(v)) + 1);
    double x = static_cast<double>(v > 0 ? b - d : a + d);
    if (x <= a || x >= b) return 0.0L;
    return w * g(x);
  };
  return detail::trapezoid_levels(point, 3.5, tol, "tanh-sinh quadrature");
}

}  // namespace quad
}  // namespace ft
