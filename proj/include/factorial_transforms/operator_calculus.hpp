#pragma once

// Finite operator calculus on exact polynomials. Every formal series in D
// (derivative) or Delta (forward difference) terminates on a polynomial,
// because both operators are nilpotent there.

#include "factorial_transforms/formal_series.hpp"
#include "factorial_transforms/polynomial.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace ft {

enum class OperatorKind {
  derivative,           // D^k
  forward_difference,   // Delta^k
  backward_difference,  // nabla^k = (Delta / E)^k
  shift,                // E^a
  log1p_derivative,     // (log(1 + D))^k
  expdiff_minus1,       // (e^Delta - 1)^k
  binom_shift,          // (1 + D)^a
  exp_shift,            // e^(a Delta)
  scale_op,             // a^(x nabla)
};

class OperatorExpr {
 public:
  static OperatorExpr derivative(std::size_t k = 1) { return {OperatorKind::derivative, k, 0}; }
  static OperatorExpr forward_difference(std::size_t k = 1) { return {OperatorKind::forward_difference, k, 0}; }
  static OperatorExpr backward_difference(std::size_t k = 1) { return {OperatorKind::backward_difference, k, 0}; }
  static OperatorExpr shift(Rational a) { return {OperatorKind::shift, 0, std::move(a)}; }
  static OperatorExpr log1p_derivative(std::size_t k = 1) { return {OperatorKind::log1p_derivative, k, 0}; }
  static OperatorExpr expdiff_minus1(std::size_t k = 1) { return {OperatorKind::expdiff_minus1, k, 0}; }
  static OperatorExpr binom_shift(Rational a) { return {OperatorKind::binom_shift, 0, std::move(a)}; }
  static OperatorExpr exp_shift(Rational a) { return {OperatorKind::exp_shift, 0, std::move(a)}; }
  static OperatorExpr scale_op(Rational a) { return {OperatorKind::scale_op, 0, std::move(a)}; }

  OperatorKind kind() const { return kind_; }
  std::size_t order() const { return order_; }
  const Rational& parameter() const { return parameter_; }

 private:
  OperatorExpr(OperatorKind kind, std::size_t order, Rational parameter)
      : kind_(kind), order_(order), parameter_(std::move(parameter)) {}

  OperatorKind kind_;
  std::size_t order_;
  Rational parameter_;
};

namespace detail {

/// sum_j c_j N^j p, with N = D when `basis` is monomial and N = Delta when it
/// is falling (both act by lowering index n to n-1 with weight n there).
inline BasisPolynomial apply_lowering_series(const BasisPolynomial& p, const series::Series& c, Basis basis) {
  auto work = convert_basis(p, basis).coeffs();
  std::vector<Rational> out(work.size(), Rational(0));
  for (std::size_t j = 0; j < c.size() && !work.empty(); ++j) {
    if (c[j] != 0) {
      for (std::size_t n = 0; n < work.size(); ++n) out[n] += c[j] * work[n];
    }
    for (std::size_t n = 1; n < work.size(); ++n) work[n - 1] = work[n] * Rational(n);
    work.pop_back();
  }
  return convert_basis(BasisPolynomial(basis, std::move(out)), p.basis());
}

inline std::size_t series_order(const BasisPolynomial& p) { return p.size() + 1; }

}  // namespace detail

/// Exact action of `op` on `p`; the result is in the basis of `p`.
inline BasisPolynomial apply_operator(const OperatorExpr& op, const BasisPolynomial& p) {
  if (p.is_zero()) return p;
  const std::size_t order = detail::series_order(p);
  switch (op.kind()) {
    case OperatorKind::derivative: return derivative(p, op.order());
    case OperatorKind::forward_difference: return forward_difference(p, op.order());
    case OperatorKind::backward_difference: return backward_difference(p, op.order());
    case OperatorKind::shift: return shift(p, op.parameter());
    case OperatorKind::log1p_derivative:
      return detail::apply_lowering_series(p, series::power(series::log1p(order), op.order(), order), Basis::monomial);
    case OperatorKind::expdiff_minus1:
      return detail::apply_lowering_series(p, series::power(series::expm1(order), op.order(), order), Basis::falling);
    case OperatorKind::binom_shift:
      return detail::apply_lowering_series(p, series::binomial_series(op.parameter(), order), Basis::monomial);
    case OperatorKind::exp_shift:
      return detail::apply_lowering_series(p, series::exponential(op.parameter(), order), Basis::falling);
    case OperatorKind::scale_op: {
      // a^(x nabla) = sum_k (a-1)^k / k! (x)_k nabla^k, the resummation of
      // sum_n sum_k {n k} (log a)^n / n! (x)_k nabla^k over n.
      BasisPolynomial q = convert_basis(p, Basis::falling);
      BasisPolynomial out(Basis::falling);
      BasisPolynomial diff = q;
      Rational weight = 1;
      for (std::size_t k = 0; !diff.is_zero(); ++k) {
        if (k > 0) {
          diff = backward_difference(diff, 1);
          weight *= (op.parameter() - 1) / Rational(k);
        }
        if (weight != 0) out += multiply(BasisPolynomial::element(Basis::falling, k), diff) * weight;
      }
      return convert_basis(out, p.basis());
    }
  }
  return p;
}

/// (log(1 + D))^(-1) p = D^(-1) (D / log(1 + D)) p, fixed up to an additive
/// constant by the zero-constant antiderivative.
inline BasisPolynomial inverse_log1p_derivative(const BasisPolynomial& p) {
  const std::size_t order = detail::series_order(p);
  series::Series log_over_t(order, Rational(0));
  auto log = series::log1p(order + 1);
  for (std::size_t i = 0; i < order; ++i) log_over_t[i] = log[i + 1];
  series::Series ratio = series::divide(series::Series{Rational(1)}, log_over_t, order);
  return antiderivative(detail::apply_lowering_series(p, ratio, Basis::monomial));
}

/// (e^Delta - 1)^(-1) p = Delta^(-1) (Delta / (e^Delta - 1)) p, up to an
/// additive constant. The series coefficients are B_j / j!.
inline BasisPolynomial inverse_expdiff_minus1(const BasisPolynomial& p) {
  const std::size_t order = detail::series_order(p);
  series::Series ratio(order, Rational(0));
  BigInt jfact = 1;
  for (std::size_t j = 0; j < order; ++j) {
    if (j > 0) jfact *= j;
    ratio[j] = bernoulli(j) / Rational(jfact);
  }
  return indefinite_sum(detail::apply_lowering_series(p, ratio, Basis::falling));
}

}  // namespace ft
