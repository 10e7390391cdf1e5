#pragma once

// Exact-layer identity checks. Everything here is rational arithmetic.

#include "factorial_transforms/combinatorics.hpp"
#include "factorial_transforms/formal_series.hpp"
#include "factorial_transforms/operator_calculus.hpp"
#include "factorial_transforms/special_polynomials.hpp"
#include "factorial_transforms/transforms_exact.hpp"
#include "factorial_transforms/verify/check_support.hpp"

#include <cstddef>
#include <vector>

namespace ft::verify {

namespace exact_helpers {

inline BasisPolynomial falling_element(std::size_t n) { return BasisPolynomial::element(Basis::falling, n); }
inline BasisPolynomial monomial_element(std::size_t n) { return BasisPolynomial::element(Basis::monomial, n); }

template <class F>
BasisPolynomial repeat(BasisPolynomial p, std::size_t k, F step) {
  for (std::size_t i = 0; i < k; ++i) p = step(p);
  return p;
}

/// FFT of a power series evaluated at the nonnegative integer k; the sum is
/// finite because (k)_n vanishes for n > k.
inline Rational fft_series_at(const series::Series& c, std::size_t k) {
  if (c.size() <= k) throw std::logic_error("fft_series_at: series too short");
  Rational sum = 0;
  Rational falling = 1;
  for (std::size_t n = 0; n <= k; ++n) {
    sum += c[n] * falling;
    falling *= Rational(static_cast<long>(k) - static_cast<long>(n));
  }
  return sum;
}

/// sum_n f(n) x^n / n! to `order` terms.
inline series::Series egf(const ExactSequence& f, std::size_t order) {
  series::Series out(order);
  BigInt nfact = 1;
  for (std::size_t n = 0; n < order; ++n) {
    if (n > 0) nfact *= n;
    out[n] = f(n) / Rational(nfact);
  }
  return out;
}

/// FFT^-1 of a sequence as a power series: e^-x sum f(n) x^n / n!.
inline series::Series ifft_series(const ExactSequence& f, std::size_t order) {
  return series::multiply(series::exponential(-1, order), egf(f, order), order);
}

inline series::Series times_exp(const series::Series& s, const Rational& c) {
  return series::multiply(series::exponential(c, s.size()), s, s.size());
}

inline ExactSequence table(std::vector<Rational> values) {
  return [v = std::move(values)](std::size_t n) { return v.at(n); };
}

inline void compare_series(ExactTally& tally, const series::Series& a, const series::Series& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) tally.compare(a[i], b[i]);
}

}  // namespace exact_helpers

namespace exact_checks {

using namespace exact_helpers;

inline Outcome fft_roundtrip(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 300; ++trial) {
    BasisPolynomial p = rng.polynomial(20);
    BasisPolynomial image = fft_poly(p);
    t.compare(ifft_poly(image).coeffs() == p.coeffs() ? Rational(0) : Rational(1), Rational(0));
    Rational x = rng.rational();
    Rational direct = 0;
    for (std::size_t n = 0; n < p.size(); ++n) direct += p.coeffs()[n] * falling_factorial(x, static_cast<long>(n));
    t.compare(eval(image, x), direct);
  }
  return t.done();
}

inline Outcome rft_roundtrip(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 300; ++trial) {
    BasisPolynomial p = rng.polynomial(20);
    BasisPolynomial image = rft_poly(p);
    t.compare(irft_poly(image).coeffs() == p.coeffs() ? Rational(0) : Rational(1), Rational(0));
    Rational x = rng.rational();
    Rational direct = 0;
    for (std::size_t n = 0; n < p.size(); ++n) direct += p.coeffs()[n] * rising_factorial(x, static_cast<long>(n));
    t.compare(eval(image, x), direct);
  }
  return t.done();
}

inline Outcome reflection(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 100; ++trial) {
    BasisPolynomial p = rng.polynomial(12);
    BasisPolynomial lhs = rft_poly(p);
    BasisPolynomial rhs = fft_poly(reflect(p));
    for (int i = 0; i < 10; ++i) {
      Rational x = rng.rational();
      t.compare(eval(lhs, x), eval(rhs, Rational(-x)));
    }
  }
  return t.done();
}

inline Outcome linearity(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 100; ++trial) {
    BasisPolynomial f = rng.polynomial(12), g = rng.polynomial(12);
    Rational a = rng.rational(), b = rng.rational();
    t.compare(fft_poly(f * a + g * b), fft_poly(f) * a + fft_poly(g) * b);
    BasisPolynomial F = rng.polynomial(12, Basis::falling), G = rng.polynomial(12, Basis::falling);
    t.compare(ifft_poly(F * a + G * b), ifft_poly(F) * a + ifft_poly(G) * b);
  }
  return t.done();
}

inline Outcome falling_power_rules(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      Rational nk = falling_factorial(Rational(n), static_cast<long>(k));
      // FFT(D^k x^n) = (n)_k (x)_(n-k) = Delta^k (x)_n.
      BasisPolynomial lhs = fft_poly(derivative(monomial_element(n), k));
      t.compare(lhs, BasisPolynomial::element(Basis::falling, n - k, nk));
      t.compare(lhs, forward_difference(fft_poly(monomial_element(n)), k));
      // FFT^-1(Delta^k (x)_n) = (n)_k x^(n-k) = D^k x^n.
      BasisPolynomial inv = ifft_poly(forward_difference(falling_element(n), k));
      t.compare(inv, BasisPolynomial::element(Basis::monomial, n - k, nk));
      t.compare(inv, derivative(ifft_poly(falling_element(n)), k));
    }
  }
  return t.done();
}

inline Outcome fft_derivative_commutation(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 100; ++trial) {
    BasisPolynomial p = rng.polynomial(10);
    for (std::size_t k = 1; k <= 3; ++k) t.compare(fft_poly(derivative(p, k)), forward_difference(fft_poly(p), k));
  }
  return t.done();
}

inline Outcome ifft_difference_commutation(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 100; ++trial) {
    BasisPolynomial p = rng.polynomial(10, Basis::falling);
    for (std::size_t k = 1; k <= 3; ++k) t.compare(ifft_poly(forward_difference(p, k)), derivative(ifft_poly(p), k));
  }
  return t.done();
}

inline Outcome ifft_log1p_derivative(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 100; ++trial) {
    BasisPolynomial p = rng.polynomial(10, Basis::falling);
    for (std::size_t k = 1; k <= 3; ++k) {
      t.compare(ifft_poly(derivative(p, k)), apply_operator(OperatorExpr::log1p_derivative(k), ifft_poly(p)));
    }
  }
  return t.done();
}

inline Outcome fft_expdiff(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 100; ++trial) {
    BasisPolynomial p = rng.polynomial(10);
    for (std::size_t k = 1; k <= 3; ++k) {
      t.compare(fft_poly(forward_difference(p, k)), apply_operator(OperatorExpr::expdiff_minus1(k), fft_poly(p)));
    }
  }
  return t.done();
}

// Negative orders: the two sides agree up to the kernel of the k-th order
// operator, i.e. up to a polynomial of degree < k. The forward operator
// applied to either side must also recover the transformed input.
inline Outcome antiderivative_kernel_relative(Rng& rng) {
  ExactTally t;
  auto kernel_ok = [&t](const BasisPolynomial& a, const BasisPolynomial& b, std::size_t k) {
    BasisPolynomial d = convert_basis(a, Basis::monomial) - convert_basis(b, Basis::monomial);
    t.expect(d.degree() < static_cast<long>(k), to_double(max_coefficient_difference(d, BasisPolynomial(Basis::monomial))));
  };
  for (int trial = 0; trial < 50; ++trial) {
    BasisPolynomial p = rng.polynomial(8);
    BasisPolynomial pf = convert_basis(p, Basis::falling);
    for (std::size_t k = 1; k <= 3; ++k) {
      auto integ = [](const BasisPolynomial& q) { return antiderivative(q); };
      auto sum = [](const BasisPolynomial& q) { return indefinite_sum(q); };
      auto inv_log = [](const BasisPolynomial& q) { return inverse_log1p_derivative(q); };
      auto inv_exp = [](const BasisPolynomial& q) { return inverse_expdiff_minus1(q); };

      // FFT(D^-k f) = Delta^-k FFT(f)
      BasisPolynomial a20 = fft_poly(repeat(p, k, integ)), b20 = repeat(fft_poly(p), k, sum);
      kernel_ok(a20, b20, k);
      t.compare(forward_difference(a20, k), fft_poly(p));
      // FFT^-1(Delta^-k f) = D^-k FFT^-1(f)
      BasisPolynomial a21 = ifft_poly(repeat(pf, k, sum)), b21 = repeat(ifft_poly(pf), k, integ);
      kernel_ok(a21, b21, k);
      t.compare(derivative(a21, k), ifft_poly(pf));
      // FFT^-1(D^-k f) = (log(1+D))^-k FFT^-1(f)
      BasisPolynomial a22 = ifft_poly(convert_basis(repeat(pf, k, integ), Basis::falling));
      BasisPolynomial b22 = repeat(ifft_poly(pf), k, inv_log);
      kernel_ok(a22, b22, k);
      t.compare(apply_operator(OperatorExpr::log1p_derivative(k), b22), ifft_poly(pf));
      // FFT(Delta^-k f) = (e^Delta - 1)^-k FFT(f)
      BasisPolynomial a23 = fft_poly(convert_basis(repeat(p, k, sum), Basis::monomial));
      BasisPolynomial b23 = repeat(fft_poly(p), k, inv_exp);
      kernel_ok(a23, b23, k);
      t.compare(apply_operator(OperatorExpr::expdiff_minus1(k), b23), fft_poly(p));
    }
  }
  return t.done();
}

inline Outcome fft_operator_expansion(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 60; ++trial) {
    // FFT(f) = sum_k (log(1+D))^k f(0) / k! x^k
    BasisPolynomial p = rng.polynomial(10);
    std::vector<Rational> c;
    BigInt kfact = 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) kfact *= k;
      c.push_back(eval(apply_operator(OperatorExpr::log1p_derivative(k), p), Rational(0)) / Rational(kfact));
    }
    t.compare(BasisPolynomial(Basis::monomial, c), convert_basis(fft_poly(p), Basis::monomial));
    // FFT^-1(f) = sum_k (e^Delta - 1)^k f(0) / k! (x)_k
    BasisPolynomial q = rng.polynomial(10, Basis::falling);
    std::vector<Rational> d;
    kfact = 1;
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (k > 0) kfact *= k;
      d.push_back(eval(apply_operator(OperatorExpr::expdiff_minus1(k), q), Rational(0)) / Rational(kfact));
    }
    t.compare(BasisPolynomial(Basis::falling, d), ifft_poly(q));
  }
  return t.done();
}

inline Outcome touchard_ladder(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      t.compare(apply_operator(OperatorExpr::log1p_derivative(k), touchard(n)),
                touchard(n - k) * falling_factorial(Rational(n), static_cast<long>(k)));
    }
  }
  return t.done();
}

inline Outcome z_ladder(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      t.compare(apply_operator(OperatorExpr::expdiff_minus1(k), z_poly(n)),
                z_poly(n - k) * falling_factorial(Rational(n), static_cast<long>(k)));
    }
  }
  return t.done();
}

// f(x) = sum_k (log(1+D))^k f(x0) / k! T_k(x - x0)
inline Outcome touchard_series_expansion(Rng& rng) {
  ExactTally t;
  const Rational centers[] = {0, 1, -2, Rational(1, 2)};
  for (int trial = 0; trial < 25; ++trial) {
    BasisPolynomial p = rng.polynomial(10);
    for (const auto& x0 : centers) {
      BasisPolynomial sum(Basis::monomial);
      BigInt kfact = 1;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (k > 0) kfact *= k;
        Rational c = eval(apply_operator(OperatorExpr::log1p_derivative(k), p), x0) / Rational(kfact);
        sum += shift(touchard(k), -x0) * c;
      }
      t.compare(sum, p);
    }
  }
  return t.done();
}

// f(x) = sum_k (e^Delta - 1)^k f(x0) / k! Z_k(x - x0)
inline Outcome z_series_expansion(Rng& rng) {
  ExactTally t;
  const Rational centers[] = {0, 1, -2, Rational(1, 2)};
  for (int trial = 0; trial < 25; ++trial) {
    BasisPolynomial p = rng.polynomial(10);
    for (const auto& x0 : centers) {
      BasisPolynomial sum(Basis::monomial);
      BigInt kfact = 1;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (k > 0) kfact *= k;
        Rational c = eval(apply_operator(OperatorExpr::expdiff_minus1(k), p), x0) / Rational(kfact);
        sum += convert_basis(shift(z_poly(k), -x0), Basis::monomial) * c;
      }
      t.compare(sum, p);
    }
  }
  return t.done();
}

inline const std::vector<Rational>& shift_parameters() {
  static const std::vector<Rational> a = {2, -1, Rational(1, 2), Rational(3, 4)};
  return a;
}

inline Outcome fft_shift_exp_difference(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 25; ++trial) {
    BasisPolynomial p = rng.polynomial(8);
    for (const auto& a : shift_parameters()) {
      t.compare(fft_poly(shift(p, a)), apply_operator(OperatorExpr::exp_shift(a), fft_poly(p)));
    }
  }
  return t.done();
}

inline Outcome ifft_shift_binomial_derivative(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 25; ++trial) {
    BasisPolynomial p = rng.polynomial(8, Basis::falling);
    for (const auto& a : shift_parameters()) {
      t.compare(ifft_poly(shift(p, a)), apply_operator(OperatorExpr::binom_shift(a), ifft_poly(p)));
    }
  }
  return t.done();
}

// h(a) = T_x(f(x + a)) at a fixed rational x is a polynomial in a; it is
// rebuilt from integer samples and then transformed in a.
template <class Inner, class Outer>
Outcome shift_in_parameter(Rng& rng, Inner inner, Outer outer, Basis input_basis) {
  ExactTally t;
  for (int trial = 0; trial < 20; ++trial) {
    BasisPolynomial f = rng.polynomial(8, input_basis);
    for (int point = 0; point < 3; ++point) {
      Rational x = rng.rational();
      std::vector<Rational> samples;
      for (long a = 0; a <= f.degree(); ++a) samples.push_back(eval(inner(shift(f, Rational(a))), x));
      BasisPolynomial h = interpolate_integer_samples(samples);
      BasisPolynomial transformed = outer(h);
      BasisPolynomial target = inner(f);
      for (const auto& a : shift_parameters()) t.compare(eval(transformed, a), eval(target, Rational(x + a)));
    }
  }
  return t.done();
}

// FFT_a(FFT_x(f(x + a))) = FFT(f)(x + a)
inline Outcome fft_outer_shift(Rng& rng) {
  return shift_in_parameter(
      rng, [](const BasisPolynomial& q) { return fft_poly(q); }, [](const BasisPolynomial& q) { return fft_poly(q); },
      Basis::monomial);
}

// FFT_a^-1(FFT_x^-1(f(x + a))) = FFT^-1(f)(x + a)
inline Outcome ifft_inner_shift(Rng& rng) {
  return shift_in_parameter(
      rng, [](const BasisPolynomial& q) { return ifft_poly(q); }, [](const BasisPolynomial& q) { return ifft_poly(q); },
      Basis::falling);
}

// FFT((x+a)^n) = sum_k C(n,k) (x)_k a^(n-k) = n! L_n^(x-n)(-a) = a^n c_n(x,-a)
inline Outcome fft_shifted_power(Rng& rng) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      Rational a = rng.nonzero_rational(), x = rng.rational();
      Rational lhs = eval(fft_poly(shift(monomial_element(n), a)), x);
      Rational sum = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        sum += Rational(binomial(n, k)) * falling_factorial(x, static_cast<long>(k)) * pow(a, static_cast<long>(n - k));
      }
      t.compare(lhs, sum);
      t.compare(lhs, Rational(factorial(n)) * eval(laguerre(n, x - Rational(n)), Rational(-a)));
      t.compare(lhs, pow(a, static_cast<long>(n)) * charlier(n, x, -a));
    }
  }
  return t.done();
}

// FFT^-1((x+a)_n) = sum_k C(n,k) x^k (a)_(n-k) = n! L_n^(a-n)(-x) = x^n c_n(a,-x)
inline Outcome ifft_shifted_falling(Rng& rng) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      Rational a = rng.rational(), x = rng.nonzero_rational();
      Rational lhs = eval(ifft_poly(shift(falling_element(n), a)), x);
      Rational sum = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        sum += Rational(binomial(n, k)) * pow(x, static_cast<long>(k)) * falling_factorial(a, static_cast<long>(n - k));
      }
      t.compare(lhs, sum);
      t.compare(lhs, Rational(factorial(n)) * eval(laguerre(n, a - Rational(n)), Rational(-x)));
      t.compare(lhs, pow(x, static_cast<long>(n)) * charlier(n, a, -x));
    }
  }
  return t.done();
}

// The printed Charlier forms carry (-a)^n and (-x)^n.
inline Outcome charlier_printed_sign(Rng& rng) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      Rational a = rng.nonzero_rational(), x = rng.nonzero_rational();
      Rational lhs = eval(fft_poly(shift(monomial_element(n), a)), x);
      t.compare(lhs, pow(Rational(-a), static_cast<long>(n)) * charlier(n, x, -a));
      Rational lhs2 = eval(ifft_poly(shift(falling_element(n), a)), x);
      t.compare(lhs2, pow(Rational(-x), static_cast<long>(n)) * charlier(n, a, -x));
    }
  }
  auto out = t.done();
  out.note = std::to_string(out.mismatches) + " of " + std::to_string(out.trials) +
             " comparisons differ from the printed (-a)^n c_n(x,-a) and (-x)^n c_n(a,-x) forms";
  return out;
}

// FFT^-1((x)_n f(x)) = x^n FFT^-1(f(x + n))
inline Outcome ifft_basis_shift(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 40; ++trial) {
    BasisPolynomial f = rng.polynomial(8, rng.basis());
    for (std::size_t n = 0; n <= 5; ++n) {
      BasisPolynomial lhs = ifft_poly(multiply(falling_element(n), convert_basis(f, Basis::falling)));
      BasisPolynomial rhs = multiply(monomial_element(n), ifft_poly(convert_basis(shift(f, Rational(n)), Basis::falling)));
      t.compare(lhs, rhs);
    }
  }
  return t.done();
}

// FFT(t^n g(t))(x) = (x)_n FFT(g)(x - n)
inline Outcome fft_basis_shift(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 40; ++trial) {
    BasisPolynomial g = rng.polynomial(8);
    for (std::size_t n = 0; n <= 5; ++n) {
      BasisPolynomial lhs = fft_poly(multiply(monomial_element(n), g));
      BasisPolynomial rhs = multiply(falling_element(n), shift(fft_poly(g), Rational(-static_cast<long>(n))));
      t.compare(lhs, rhs);
    }
  }
  return t.done();
}

// BT(f) = FFT(e^x FFT^-1(f)) and f = FFT(e^x FFT^-1(BT^-1(f))) at integers.
inline Outcome binomial_transform_chain(Rng& rng) {
  ExactTally t;
  const std::size_t kmax = 15;
  for (int trial = 0; trial < 20; ++trial) {
    ExactSequence f = sequence_of(rng.polynomial(6, rng.basis()));
    auto via_series = times_exp(ifft_series(f, kmax + 1), 1);
    std::vector<Rational> inv(kmax + 1);
    for (std::size_t k = 0; k <= kmax; ++k) inv[k] = inverse_binomial_transform(f, k);
    auto back = times_exp(ifft_series(table(inv), kmax + 1), 1);
    for (std::size_t k = 0; k <= kmax; ++k) {
      t.compare(binomial_transform(f, k), fft_series_at(via_series, k));
      t.compare(f(k), fft_series_at(back, k));
    }
  }
  return t.done();
}

// BT^-1(f) = FFT(e^-x FFT^-1(f)) at integers.
inline Outcome inverse_binomial_transform_chain(Rng& rng) {
  ExactTally t;
  const std::size_t kmax = 15;
  for (int trial = 0; trial < 20; ++trial) {
    ExactSequence f = sequence_of(rng.polynomial(6, rng.basis()));
    auto via_series = times_exp(ifft_series(f, kmax + 1), -1);
    for (std::size_t k = 0; k <= kmax; ++k) t.compare(inverse_binomial_transform(f, k), fft_series_at(via_series, k));
  }
  return t.done();
}

// conv(f,g)(k) = k! [x^k] EGF(f) EGF(g) = FFT(e^x FFT^-1(f) FFT^-1(g))(k).
inline Outcome binomial_convolution_egf(Rng& rng) {
  ExactTally t;
  const std::size_t kmax = 30;
  for (int trial = 0; trial < 10; ++trial) {
    ExactSequence f = sequence_of(rng.polynomial(5, rng.basis()));
    ExactSequence g = sequence_of(rng.polynomial(5, rng.basis()));
    auto egf_coeffs = egf_product_coeffs(f, g, kmax + 1);
    auto chain = times_exp(series::multiply(ifft_series(f, kmax + 1), ifft_series(g, kmax + 1), kmax + 1), 1);
    for (std::size_t k = 0; k <= kmax; ++k) {
      Rational c = binomial_convolution(f, g, k);
      t.compare(c, egf_coeffs[k]);
      t.compare(c, fft_series_at(chain, k));
    }
  }
  return t.done();
}

inline Outcome conv_one_is_bt(Rng& rng) {
  ExactTally t;
  ExactSequence one = [](std::size_t) { return Rational(1); };
  for (int trial = 0; trial < 20; ++trial) {
    ExactSequence g = sequence_of(rng.polynomial(6, rng.basis()));
    for (std::size_t k = 0; k <= 20; ++k) t.compare(binomial_convolution(one, g, k), binomial_transform(g, k));
  }
  return t.done();
}

// FFT^-1(conv^(n) F) = e^(nx) (FFT^-1 F)^(n+1); (EGF F)^(n+1) = EGF(conv^(n) F);
// f^n = e^x FFT^-1(conv^(n-1)(FFT(e^-x f))).
inline Outcome iterated_convolution_check(Rng& rng) {
  ExactTally t;
  const std::size_t order = 13;
  for (int trial = 0; trial < 10; ++trial) {
    ExactSequence F = sequence_of(rng.polynomial(4, rng.basis()));
    for (std::size_t n = 0; n <= 3; ++n) {
      auto conv = iterated_convolution(F, n, order);
      auto lhs = ifft_series(table(conv), order);
      auto rhs = times_exp(series::power(ifft_series(F, order), n + 1, order), Rational(static_cast<long>(n)));
      compare_series(t, lhs, rhs);
      compare_series(t, egf(table(conv), order), series::power(egf(F, order), n + 1, order));
    }
    BasisPolynomial f = rng.polynomial(4);
    series::Series fs(order, Rational(0));
    for (std::size_t i = 0; i < f.size() && i < order; ++i) fs[i] = f.coeffs()[i];
    auto damped = times_exp(fs, -1);
    std::vector<Rational> samples(order);
    for (std::size_t k = 0; k < order; ++k) samples[k] = fft_series_at(damped, k);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto conv = iterated_convolution(table(samples), n - 1, order);
      auto rebuilt = times_exp(ifft_series(table(conv), order), 1);
      compare_series(t, rebuilt, series::power(fs, n, order));
    }
  }
  return t.done();
}

inline Outcome scaling_operator(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 25; ++trial) {
    BasisPolynomial p = rng.polynomial(8);
    for (const auto& a : shift_parameters()) {
      t.compare(fft_poly(scale_argument(p, a)), apply_operator(OperatorExpr::scale_op(a), fft_poly(p)));
    }
  }
  return t.done();
}

// FFT^-1((x)_n (x)_m) = x^n m! L_m^(n-m)(-x) and
// (x)_n (x)_m = sum_k C(n,k) C(m,k) k! (x)_(n+m-k).
inline Outcome falling_linearization(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t m = 0; m <= 8; ++m) {
      BasisPolynomial product = multiply(convert_basis(falling_element(n), Basis::monomial),
                                         convert_basis(falling_element(m), Basis::monomial));
      BasisPolynomial lag = multiply(monomial_element(n), reflect(laguerre(m, Rational(static_cast<long>(n) - static_cast<long>(m))))) *
                            Rational(factorial(m));
      t.compare(ifft_poly(convert_basis(product, Basis::falling)), lag);
      BasisPolynomial expansion(Basis::falling);
      BigInt kfact = 1;
      for (std::size_t k = 0; k <= std::min(n, m); ++k) {
        if (k > 0) kfact *= k;
        expansion += BasisPolynomial::element(Basis::falling, n + m - k, Rational(binomial(n, k) * binomial(m, k) * kfact));
      }
      t.compare(product, expansion);
      t.compare(fft_poly(lag), expansion);
    }
  }
  return t.done();
}

inline Outcome hadamard_ifft_check(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 100; ++trial) {
    BasisPolynomial f = rng.polynomial(8, Basis::falling), g = rng.polynomial(8, Basis::falling);
    t.compare(hadamard_ifft(f, g), ifft_poly(multiply(f, g)));
  }
  return t.done();
}

// FFT(F) FFT(G) = FFT(sum_k D^k F D^k G x^k / k!)
inline Outcome fft_product(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 50; ++trial) {
    BasisPolynomial F = rng.polynomial(8), G = rng.polynomial(8);
    BasisPolynomial sum(Basis::monomial);
    BigInt kfact = 1;
    for (std::size_t k = 0; k < std::min(F.size(), G.size()); ++k) {
      if (k > 0) kfact *= k;
      sum += multiply(multiply(derivative(F, k), derivative(G, k)), BasisPolynomial::element(Basis::monomial, k, Rational(1) / Rational(kfact)));
    }
    t.compare(multiply(fft_poly(F), fft_poly(G)), fft_poly(sum));
  }
  return t.done();
}

// FFT^-1(BT^-1(conv(f,g))) = FFT^-1(f) FFT^-1(g) as series, and
// FFT(F G)(k) = BT^-1(conv(FFT F, FFT G))(k).
inline Outcome product_chain(Rng& rng) {
  ExactTally t;
  const std::size_t kmax = 12;
  for (int trial = 0; trial < 20; ++trial) {
    BasisPolynomial F = rng.polynomial(5), G = rng.polynomial(5);
    ExactSequence f = sequence_of(fft_poly(F)), g = sequence_of(fft_poly(G));
    std::vector<Rational> conv(kmax + 1);
    for (std::size_t k = 0; k <= kmax; ++k) conv[k] = binomial_convolution(f, g, k);
    ExactSequence c = table(conv);
    std::vector<Rational> inv(kmax + 1);
    for (std::size_t k = 0; k <= kmax; ++k) inv[k] = inverse_binomial_transform(c, k);
    compare_series(t, ifft_series(table(inv), kmax + 1),
                   series::multiply(ifft_series(f, kmax + 1), ifft_series(g, kmax + 1), kmax + 1));
    ExactSequence fg = sequence_of(fft_poly(multiply(F, G)));
    for (std::size_t k = 0; k <= kmax; ++k) t.compare(fg(k), inv[k]);
  }
  return t.done();
}

// FFT^-1(BT(n! a_n)) = sum a_n x^n and a_n = FFT(e^-x f)(n) / n!.
inline Outcome coefficient_extraction(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 40; ++trial) {
    BasisPolynomial f = rng.polynomial(10);
    ExactSequence scaled = [&f](std::size_t n) { return Rational(factorial(n)) * f.coeff(n); };
    std::vector<Rational> bt;
    for (std::size_t k = 0; k < f.size(); ++k) bt.push_back(binomial_transform(scaled, k));
    t.compare(ifft_poly(interpolate_integer_samples(bt)), f);
    for (std::size_t n = 0; n < f.size() + 2; ++n) t.compare(coefficient_extract(f, n), f.coeff(n));
  }
  return t.done();
}

// FFT^-1(f) = e^-x f(theta){e^x} with theta = x d/dx, and
// f = FFT(e^-x f(theta){e^x}).
inline Outcome theta_representation(Rng& rng) {
  ExactTally t;
  for (int trial = 0; trial < 30; ++trial) {
    BasisPolynomial f = rng.polynomial(8, rng.basis());
    BasisPolynomial mono = convert_basis(f, Basis::monomial);
    const std::size_t order = mono.size() + 12;
    series::Series e = series::exponential(1, order);
    series::Series acc(order, Rational(0)), theta_power = e;
    for (std::size_t j = 0; j < mono.size(); ++j) {
      if (j > 0) {
        for (std::size_t n = 0; n < order; ++n) theta_power[n] *= Rational(n);
      }
      for (std::size_t n = 0; n < order; ++n) acc[n] += mono.coeffs()[j] * theta_power[n];
    }
    auto lhs = series::multiply(series::exponential(-1, order), acc, order);
    BasisPolynomial expected = ifft_poly(convert_basis(f, Basis::falling));
    for (std::size_t n = 0; n < order; ++n) t.compare(lhs[n], expected.coeff(n));
    BasisPolynomial truncated(Basis::monomial, std::vector<Rational>(lhs.begin(), lhs.end()));
    t.compare(fft_poly(truncated), f);
  }
  return t.done();
}

// Coefficients of x e^x / (e^x - 1) by series division against
// B_(n+1) (-1)^(n+1) / (n+1)!, n = -1 .. 12.
inline Outcome bernoulli_structure(Rng&) {
  ExactTally t;
  const std::size_t order = 14;
  // (1 - e^-x) / x = sum_j (-1)^j x^j / (j+1)!
  series::Series denom(order);
  BigInt fact = 1;
  for (std::size_t j = 0; j < order; ++j) {
    fact *= (j + 1);
    denom[j] = Rational((j % 2 == 0) ? 1 : -1) / Rational(fact);
  }
  auto q = series::divide(series::Series{Rational(1)}, denom, order);
  fact = 1;
  for (std::size_t m = 0; m < order; ++m) {
    if (m > 0) fact *= m;
    Rational expected = bernoulli(m) / Rational(fact);
    if (m % 2 == 1) expected = -expected;
    t.compare(q[m], expected);
  }
  return t.done();
}

// FFT(x^s e^-x)(k) = Gamma(s+1) delta[k - s] at nonnegative integers.
inline Outcome power_exp_delta_row(Rng&) {
  ExactTally t;
  for (std::size_t s = 0; s <= 8; ++s) {
    const std::size_t order = 16;
    series::Series c(order, Rational(0));
    auto e = series::exponential(-1, order);
    for (std::size_t n = s; n < order; ++n) c[n] = e[n - s];
    for (std::size_t k = 0; k + 1 < order; ++k) {
      t.compare(fft_series_at(c, k), k == s ? Rational(factorial(s)) : Rational(0));
    }
  }
  return t.done();
}

inline Outcome power_row(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) t.compare(fft_poly(monomial_element(n)), falling_element(n));
  return t.done();
}

inline Outcome falling_row(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) t.compare(fft_poly(convert_basis(falling_element(n), Basis::monomial)), z_poly(n));
  return t.done();
}

// FFT(Z_n) = sum_k s(n,k) Z_k with signed s(n,k) = [n k] (-1)^(n-k).
inline Outcome z_row(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    BasisPolynomial rhs(Basis::falling);
    for (std::size_t k = 0; k <= n; ++k) rhs += z_poly(k) * Rational(stirling_first_signed(n, k));
    t.compare(fft_poly(convert_basis(z_poly(n), Basis::monomial)), rhs);
  }
  return t.done();
}

inline Outcome touchard_row(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) t.compare(fft_poly(touchard(n)), monomial_element(n));
  return t.done();
}

inline Outcome stirling_touchard_row(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    BasisPolynomial lhs(Basis::monomial);
    for (std::size_t k = 0; k <= n; ++k) lhs += touchard(k) * Rational(stirling_second(n, k));
    t.compare(fft_poly(lhs), touchard(n));
  }
  return t.done();
}

inline BasisPolynomial laguerre_row_input(std::size_t n, std::size_t m) {
  return multiply(monomial_element(n + m), reflect(laguerre(n, Rational(static_cast<long>(m)))));
}

// FFT(x^(n+m) L_n^(m)(-x)) = (x)_(n+m) (x)_n / n!
inline Outcome laguerre_row(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t m = 0; m <= 8; ++m) {
      t.compare(fft_poly(laguerre_row_input(n, m)),
                multiply(falling_element(n + m), falling_element(n)) * (Rational(1) / Rational(factorial(n))));
    }
  }
  return t.done();
}

// As printed: (x)_(n+m) (x)_m / m!.
inline Outcome laguerre_row_as_printed(Rng&) {
  ExactTally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t m = 0; m <= 8; ++m) {
      t.compare(fft_poly(laguerre_row_input(n, m)),
                multiply(falling_element(n + m), falling_element(m)) * (Rational(1) / Rational(factorial(m))));
    }
  }
  auto out = t.done();
  out.note = std::to_string(out.mismatches) + " of " + std::to_string(out.trials) +
             " (n, m) pairs differ; agreement holds only for n = m";
  return out;
}

}  // namespace exact_checks
}  // namespace ft::verify
