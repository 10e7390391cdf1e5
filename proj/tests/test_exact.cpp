// Exact layer: combinatorics, polynomial bases, operator calculus, special
// polynomials and exact transforms.

#include "factorial_transforms/combinatorics.hpp"
#include "factorial_transforms/formal_series.hpp"
#include "factorial_transforms/operator_calculus.hpp"
#include "factorial_transforms/polynomial.hpp"
#include "factorial_transforms/polynomial_json.hpp"
#include "factorial_transforms/special_polynomials.hpp"
#include "factorial_transforms/transforms_exact.hpp"
#include "factorial_transforms/verify/check_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace ft;
using verify::Rng;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

BasisPolynomial mono(std::vector<Rational> c) { return BasisPolynomial(Basis::monomial, std::move(c)); }
BasisPolynomial fall(std::vector<Rational> c) { return BasisPolynomial(Basis::falling, std::move(c)); }

// Oracle: expand prod_{i<n} (x - i) by repeated multiplication of coefficient vectors.
std::vector<BigInt> falling_expansion(std::size_t n) {
  std::vector<BigInt> c{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * static_cast<long>(i);
    }
    c = next;
  }
  return c;
}

// Oracle: S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n.
BigInt stirling2_explicit(std::size_t n, std::size_t k) {
  BigInt sum = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    BigInt term = binomial(k, j) * mp::pow(BigInt(k - j), static_cast<unsigned>(n));
    sum += (j % 2 == 0) ? term : BigInt(-term);
  }
  return sum / factorial(k);
}

// Oracle: direct evaluation in the stated basis via explicit products.
Rational eval_direct(const BasisPolynomial& p, const Rational& x) {
  Rational sum = 0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    Rational e = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (p.basis() == Basis::monomial) e *= x;
      if (p.basis() == Basis::falling) e *= x - Rational(static_cast<long>(i));
      if (p.basis() == Basis::rising) e *= x + Rational(static_cast<long>(i));
    }
    sum += p.coeff(n) * e;
  }
  return sum;
}

bool same_function(const BasisPolynomial& a, const BasisPolynomial& b) {
  return convert_basis(a, Basis::monomial) == convert_basis(b, Basis::monomial);
}

}  // namespace

// ---------------------------------------------------------------- combinatorics

TEST(Combinatorics, StirlingFirstExamples) {
  EXPECT_EQ(stirling_first_unsigned(0, 0), 1);
  EXPECT_EQ(stirling_first_unsigned(3, 2), 3);
  EXPECT_EQ(stirling_first_unsigned(3, 1), 2);
  EXPECT_EQ(stirling_first_signed(3, 2), -3);
}

TEST(Combinatorics, StirlingFirstMatchesProductExpansion) {
  for (std::size_t n = 0; n <= 25; ++n) {
    auto c = falling_expansion(n);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(stirling_first_signed(n, k), c[k]) << n << "," << k;
    EXPECT_EQ(stirling_first_unsigned(n, n + 1), 0);
  }
}

TEST(Combinatorics, StirlingSecondExamplesAndOracle) {
  EXPECT_EQ(stirling_second(3, 2), 3);
  EXPECT_EQ(stirling_second(4, 2), 7);
  for (std::size_t n = 0; n <= 25; ++n) {
    EXPECT_EQ(stirling_second(n, n), 1);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(stirling_second(n, k), stirling2_explicit(n, k)) << n << "," << k;
  }
}

TEST(Combinatorics, StirlingInverseMatrices) {
  // sum_k S(n,k) s(k,m) = delta_{n,m}
  for (std::size_t n = 0; n <= 15; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      BigInt sum = 0;
      for (std::size_t k = m; k <= n; ++k) sum += stirling_second(n, k) * stirling_first_signed(k, m);
      EXPECT_EQ(sum, n == m ? 1 : 0);
    }
  }
}

TEST(Combinatorics, RowsMatchEntries) {
  auto row = stirling_second_row(6);
  ASSERT_EQ(row.size(), 7u);
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(row[k], stirling_second(6, k));
  auto first = stirling_first_row(6);
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(first[k], stirling_first_unsigned(6, k));
}

TEST(Combinatorics, BinomialGeneral) {
  EXPECT_EQ(binomial_general(R(5), 2), R(10));
  EXPECT_EQ(binomial_general(R(1, 2), 2), R(-1, 8));
  EXPECT_EQ(binomial_general(R(3), 5), R(0));
  for (std::size_t n = 0; n <= 20; ++n) {
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(binomial_general(R(static_cast<long>(n)), k), Rational(binomial(n, k)));
  }
}

TEST(Combinatorics, FallingAndRisingFactorials) {
  EXPECT_EQ(falling_factorial(R(5), 3), R(60));
  EXPECT_EQ(falling_factorial(R(7, 3), 0), R(1));
  EXPECT_EQ(falling_factorial(R(1), -1), R(1, 2));
  EXPECT_EQ(rising_factorial(R(2), 3), R(24));
  EXPECT_EQ(rising_factorial(R(7, 3), 0), R(1));
  EXPECT_DOUBLE_EQ(rising_factorial(1.5, 2), 3.75);
  EXPECT_THROW(falling_factorial(R(-1), -1), DivisionByZero);
  EXPECT_THROW(rising_factorial(R(2), -3), DivisionByZero);
}

TEST(Combinatorics, FactorialIndexLaw) {
  // (x)_n (x-n)_m = (x)_{n+m} for all integer n, m.
  Rational x = R(17, 5);
  for (long n = -4; n <= 4; ++n) {
    for (long m = -4; m <= 4; ++m) {
      EXPECT_EQ(falling_factorial(x, n) * falling_factorial(Rational(x - n), m), falling_factorial(x, n + m));
      EXPECT_EQ(rising_factorial(x, n) * rising_factorial(Rational(x + n), m), rising_factorial(x, n + m));
    }
  }
}

TEST(Combinatorics, Bernoulli) {
  EXPECT_EQ(bernoulli(0), R(1));
  EXPECT_EQ(bernoulli(1), R(-1, 2));
  EXPECT_EQ(bernoulli(2), R(1, 6));
  EXPECT_EQ(bernoulli(3), R(0));
  EXPECT_EQ(bernoulli(12), R(-691, 2730));
  // Oracle: coefficients of x/(e^x - 1) by series division.
  const std::size_t order = 20;
  series::Series num(order, Rational(0));
  num[0] = 1;
  series::Series den = series::expm1(order + 1);
  den.erase(den.begin());  // (e^x - 1)/x
  auto q = series::divide(num, den, order);
  for (std::size_t n = 0; n < order; ++n) EXPECT_EQ(bernoulli(n), q[n] * Rational(factorial(n))) << n;
}

TEST(Combinatorics, RationalParsing) {
  EXPECT_EQ(parse_rational("3/4"), R(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), R(-3, 4));
  EXPECT_EQ(parse_rational("0.25"), R(1, 4));
  EXPECT_EQ(parse_rational("-1.05"), R(-21, 20));
  EXPECT_EQ(parse_rational("010/03"), R(10, 3));  // leading zeros are decimal
  EXPECT_EQ(parse_rational("+0"), R(0));
  EXPECT_EQ(to_string(R(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(R(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

// ---------------------------------------------------------------- polynomial

TEST(Polynomial, ConvertExamples) {
  EXPECT_EQ(convert_basis(mono({0, 0, 1}), Basis::falling), fall({0, 1, 1}));
  EXPECT_EQ(convert_basis(fall({0, 0, 1}), Basis::monomial), mono({0, -1, 1}));
  EXPECT_TRUE(convert_basis(BasisPolynomial(Basis::rising), Basis::falling).is_zero());
}

TEST(Polynomial, CanonicalForm) {
  BasisPolynomial p = mono({1, 2, 0, 0});
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(BasisPolynomial(Basis::falling, {0, 0}).degree(), -1);
}

TEST(Polynomial, EvalExamples) {
  EXPECT_EQ(eval(fall({0, 0, 1}), R(3)), R(6));
  EXPECT_EQ(eval(BasisPolynomial(Basis::monomial), R(7)), R(0));
  EXPECT_EQ(eval(mono({0, 1, 1}), R(1, 2)), R(3, 4));
  EXPECT_DOUBLE_EQ(eval(fall({0, 0, 1}), 3.0), 6.0);
}

TEST(Polynomial, BasisRoundTripAllPairs) {
  Rng rng(7);
  const Basis all[] = {Basis::monomial, Basis::falling, Basis::rising};
  for (int trial = 0; trial < 200; ++trial) {
    BasisPolynomial p = rng.polynomial(20, all[trial % 3]);
    for (Basis target : all) {
      BasisPolynomial q = convert_basis(p, target);
      EXPECT_EQ(convert_basis(q, p.basis()), p);
      Rational x = rng.rational();
      EXPECT_EQ(eval_direct(q, x), eval_direct(p, x));
    }
  }
}

TEST(Polynomial, EvalMatchesDirectProducts) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    BasisPolynomial p = rng.polynomial(12, rng.basis());
    Rational x = rng.rational();
    EXPECT_EQ(eval(p, x), eval_direct(p, x));
  }
}

TEST(Polynomial, ShiftExamplesAndComposition) {
  EXPECT_TRUE(same_function(shift(mono({0, 0, 1}), R(1)), mono({1, 2, 1})));
  EXPECT_TRUE(same_function(shift(fall({0, 0, 1}), R(1)), fall({0, 2, 1})));
  EXPECT_EQ(shift(fall({0, 0, 1}), R(1)).basis(), Basis::falling);
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    BasisPolynomial p = rng.polynomial(10, rng.basis());
    Rational a = rng.rational(), b = rng.rational();
    EXPECT_TRUE(same_function(shift(p, R(0)), p));
    EXPECT_TRUE(same_function(shift(shift(p, a), b), shift(p, a + b)));
    Rational x = rng.rational();
    EXPECT_EQ(eval(shift(p, a), x), eval(p, Rational(x + a)));
  }
}

TEST(Polynomial, ScaleArgument) {
  EXPECT_TRUE(same_function(scale_argument(mono({0, 0, 1}), R(2)), mono({0, 0, 4})));
  EXPECT_TRUE(same_function(scale_argument(mono({1, 1}), R(-1)), mono({1, -1})));
  EXPECT_TRUE(same_function(scale_argument(fall({0, 0, 1}), R(2)), fall({0, 2, 4})));
  EXPECT_TRUE(same_function(reflect(mono({1, 2, 3})), mono({1, -2, 3})));
}

TEST(Polynomial, MultiplyExamples) {
  EXPECT_EQ(multiply(fall({0, 1}), fall({0, 1})), fall({0, 1, 1}));
  EXPECT_TRUE(multiply(fall({0, 1}), BasisPolynomial(Basis::falling)).is_zero());
  EXPECT_EQ(multiply(fall({0, 0, 1}), fall({0, 1})), fall({0, 0, 2, 1}));
  EXPECT_THROW(multiply(fall({1}), mono({1})), BasisMismatch);
}

TEST(Polynomial, ProductConsistencyAcrossBases) {
  Rng rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    BasisPolynomial p = rng.polynomial(10), q = rng.polynomial(10);
    BasisPolynomial expected = multiply(p, q);
    for (Basis b : {Basis::falling, Basis::rising}) {
      BasisPolynomial got = multiply(convert_basis(p, b), convert_basis(q, b));
      EXPECT_EQ(got.basis(), b);
      EXPECT_EQ(convert_basis(got, Basis::monomial), expected);
    }
  }
}

TEST(Polynomial, DifferencesAndNilpotency) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    BasisPolynomial p = rng.polynomial(10, rng.basis());
    auto d = static_cast<std::size_t>(p.degree() + 1);
    EXPECT_TRUE(derivative(p, d).is_zero());
    EXPECT_TRUE(forward_difference(p, d).is_zero());
    Rational x = rng.rational();
    EXPECT_EQ(eval(forward_difference(p), x), eval(p, Rational(x + 1)) - eval(p, x));
    EXPECT_EQ(eval(backward_difference(p), x), eval(p, x) - eval(p, Rational(x - 1)));
    EXPECT_TRUE(same_function(derivative(antiderivative(p)), p));
    EXPECT_TRUE(same_function(forward_difference(indefinite_sum(p)), p));
    EXPECT_EQ(eval(antiderivative(p), R(0)), R(0));
    EXPECT_EQ(eval(indefinite_sum(p), R(0)), R(0));
  }
}

TEST(Polynomial, InterpolateIntegerSamples) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    BasisPolynomial p = rng.polynomial(10);
    std::vector<Rational> samples;
    for (long k = 0; k <= p.degree(); ++k) samples.push_back(eval(p, R(k)));
    BasisPolynomial q = interpolate_integer_samples(samples);
    EXPECT_EQ(q.basis(), Basis::falling);
    EXPECT_TRUE(same_function(q, p));
  }
}

TEST(Polynomial, JsonRoundTrip) {
  BasisPolynomial p = fall({0, R(1, 2), R(-3)});
  EXPECT_EQ(dump_polynomial(p), R"({"basis":"falling","coeffs":["0","1/2","-3"]})");
  EXPECT_EQ(parse_polynomial(dump_polynomial(p)), p);
  EXPECT_THROW(parse_polynomial(R"({"basis":"weird","coeffs":[]})"), ParseError);
  EXPECT_THROW(parse_polynomial(R"({"basis":"falling","coeffs":[0.5]})"), ParseError);
  EXPECT_THROW(parse_polynomial(R"({"basis":"falling","coeffs":[],"x":1})"), ParseError);
  EXPECT_THROW(parse_polynomial("{"), ParseError);
}

// ---------------------------------------------------------------- operators

TEST(Operators, Examples) {
  EXPECT_EQ(apply_operator(OperatorExpr::forward_difference(1), fall({0, 0, 1})), fall({0, 2}));
  EXPECT_TRUE(same_function(apply_operator(OperatorExpr::log1p_derivative(1), mono({0, 1, 1})), mono({0, 2})));
  EXPECT_TRUE(same_function(apply_operator(OperatorExpr::scale_op(R(2)), fall({0, 0, 1})), fall({0, 0, 4})));
}

TEST(Operators, ShiftFamiliesAgreeWithShift) {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    BasisPolynomial p = rng.polynomial(8, rng.basis());
    Rational a = rng.rational();
    // E^a = e^(a D) = (1 + Delta)^a; on polynomials binom_shift(a) = (1 + D)^a.
    EXPECT_TRUE(same_function(apply_operator(OperatorExpr::shift(a), p), shift(p, a)));
    // Operators act on functions, not on a particular basis.
    BasisPolynomial f = convert_basis(p, Basis::falling);
    EXPECT_TRUE(same_function(apply_operator(OperatorExpr::exp_shift(a), p),
                              apply_operator(OperatorExpr::exp_shift(a), f)));
    // (1 + D)^a = sum_k C(a,k) D^k.
    BasisPolynomial expected(Basis::monomial);
    for (std::size_t k = 0; k <= p.size(); ++k) expected += convert_basis(derivative(p, k), Basis::monomial) * binomial_general(a, k);
    EXPECT_TRUE(same_function(apply_operator(OperatorExpr::binom_shift(a), p), expected));
    // e^(a Delta) = sum_k a^k Delta^k / k!.
    BasisPolynomial expected_exp(Basis::falling);
    for (std::size_t k = 0; k <= p.size(); ++k) {
      expected_exp += forward_difference(f, k) * (pow(a, static_cast<long>(k)) / Rational(factorial(k)));
    }
    EXPECT_TRUE(same_function(apply_operator(OperatorExpr::exp_shift(a), p), expected_exp));
  }
}

TEST(Operators, LogAndExpInverses) {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    BasisPolynomial p = rng.polynomial(10);
    // Inverses up to the kernel: the forward operator recovers the input.
    EXPECT_TRUE(same_function(apply_operator(OperatorExpr::log1p_derivative(1), inverse_log1p_derivative(p)), p));
    EXPECT_TRUE(same_function(apply_operator(OperatorExpr::expdiff_minus1(1), inverse_expdiff_minus1(p)), p));
  }
}

TEST(Operators, FftCommutationK4) {
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    BasisPolynomial p = rng.polynomial(12);
    for (std::size_t k = 0; k <= 4; ++k) {
      EXPECT_TRUE(same_function(fft_poly(derivative(p, k)), forward_difference(fft_poly(p), k)));
    }
  }
}

TEST(Operators, LaddersOnSpecialPolynomials) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const Rational nn(static_cast<long>(n));
    EXPECT_TRUE(same_function(apply_operator(OperatorExpr::log1p_derivative(1), touchard(n)), touchard(n - 1) * nn));
    EXPECT_TRUE(same_function(apply_operator(OperatorExpr::expdiff_minus1(1), z_poly(n)), z_poly(n - 1) * nn));
  }
}

TEST(Operators, OuterInnerShiftCoincidence) {
  Rng rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    BasisPolynomial p = rng.polynomial(10);
    Rational a = rng.rational();
    // FFT carries D to Delta, so FFT(E^a p) = e^(a Delta) FFT(p).
    EXPECT_TRUE(same_function(apply_operator(OperatorExpr::exp_shift(a), fft_poly(p)), fft_poly(shift(p, a))));
  }
}

TEST(Operators, ScaleOperatorMatchesScaling) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    BasisPolynomial p = rng.polynomial(8);
    Rational a = rng.nonzero_rational();
    EXPECT_TRUE(same_function(fft_poly(scale_argument(p, a)), apply_operator(OperatorExpr::scale_op(a), fft_poly(p))));
  }
}

// ---------------------------------------------------------------- special polynomials

TEST(Special, Touchard) {
  EXPECT_EQ(touchard(0), mono({1}));
  EXPECT_EQ(touchard(2), mono({0, 1, 1}));
  EXPECT_EQ(touchard(3), mono({0, 1, 3, 1}));
  // T_{n+1}(x) = x sum_k C(n,k) T_k(x)
  for (std::size_t n = 0; n <= 10; ++n) {
    BasisPolynomial sum(Basis::monomial);
    for (std::size_t k = 0; k <= n; ++k) sum += touchard(k) * Rational(binomial(n, k));
    EXPECT_EQ(touchard(n + 1), multiply(sum, mono({0, 1})));
  }
}

TEST(Special, ZPolynomial) {
  EXPECT_EQ(z_poly(0), fall({1}));
  EXPECT_EQ(z_poly(2), fall({0, -1, 1}));
  EXPECT_EQ(z_poly(3), fall({0, 2, -3, 1}));
}

TEST(Special, Laguerre) {
  const Rational alpha = R(3, 7);
  EXPECT_EQ(laguerre(0, alpha), mono({1}));
  EXPECT_EQ(laguerre(1, alpha), mono({alpha + 1, -1}));
  EXPECT_EQ(laguerre(2, R(0)), mono({1, -2, R(1, 2)}));
  // Three-term recurrence (n+1) L_{n+1} = (2n + 1 + a - y) L_n - (n + a) L_{n-1}.
  for (std::size_t n = 1; n <= 8; ++n) {
    const Rational nn(static_cast<long>(n));
    BasisPolynomial lhs = laguerre(n + 1, alpha) * (nn + 1);
    BasisPolynomial rhs = multiply(mono({2 * nn + 1 + alpha, -1}), laguerre(n, alpha)) +
                          laguerre(n - 1, alpha) * Rational(-(nn + alpha));
    EXPECT_EQ(lhs, rhs) << n;
  }
}

TEST(Special, Charlier) {
  const Rational x = R(5, 3), a = R(2, 7);
  EXPECT_EQ(charlier(0, x, a), R(1));
  EXPECT_EQ(charlier(1, x, a), R(1) - x / a);
  EXPECT_EQ(pow(R(-1), 2) * charlier(2, R(3), R(-1)), R(13));
  EXPECT_THROW(charlier(1, x, R(0)), DomainError);
  EXPECT_NEAR(charlier_value(3, 2.5, 1.5), to_double(charlier(3, R(5, 2), R(3, 2))), 1e-12);
}

TEST(Special, CharlierShiftedPowerIdentity) {
  // a^n c_n(x,-a) = sum_k C(n,k) (x)_k a^(n-k)
  Rng rng(18);
  for (std::size_t n = 0; n <= 8; ++n) {
    Rational x = rng.rational(), a = rng.nonzero_rational();
    Rational rhs = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      rhs += Rational(binomial(n, k)) * falling_factorial(x, static_cast<long>(k)) * pow(a, static_cast<long>(n - k));
    }
    EXPECT_EQ(pow(a, static_cast<long>(n)) * charlier(n, x, Rational(-a)), rhs);
  }
}

TEST(Special, CharlierOrthogonality) {
  const double e = std::exp(1.0);
  EXPECT_NEAR(charlier_orthogonality_sum(0, 0, 1.0, 60), e, 1e-10);
  EXPECT_NEAR(charlier_orthogonality_sum(1, 2, 1.0, 60), 0.0, 1e-8);
  EXPECT_NEAR(charlier_orthogonality_sum(2, 2, 1.0, 60), 2 * e, 1e-8);
}

TEST(Special, DualExpansions) {
  for (std::size_t n = 0; n <= 15; ++n) {
    BasisPolynomial xn = BasisPolynomial::element(Basis::monomial, n);
    BasisPolynomial fn = BasisPolynomial::element(Basis::falling, n);
    EXPECT_TRUE(same_function(fft_poly(xn), fn));
    EXPECT_TRUE(same_function(ifft_poly(xn), touchard(n)));
    EXPECT_TRUE(same_function(fft_poly(fn), z_poly(n)));
  }
}

TEST(Special, LaguerreTableRowCorrected) {
  // FFT(x^(n+m) L_n^(m)(-x)) = (x)_(n+m) (x)_n / n!
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::size_t m = 0; m <= 5; ++m) {
      BasisPolynomial lag = scale_argument(laguerre(n, Rational(static_cast<long>(m))), R(-1));
      BasisPolynomial input = multiply(lag, BasisPolynomial::element(Basis::monomial, n + m));
      BasisPolynomial rhs = multiply(BasisPolynomial::element(Basis::falling, n + m),
                                     BasisPolynomial::element(Basis::falling, n)) *
                            (Rational(1) / Rational(factorial(n)));
      EXPECT_TRUE(same_function(fft_poly(input), rhs)) << n << "," << m;
    }
  }
}

// ---------------------------------------------------------------- exact transforms

TEST(Transforms, Examples) {
  EXPECT_EQ(fft_poly(mono({0, 0, 1})), fall({0, 0, 1}));
  EXPECT_EQ(fft_poly(mono({1})), fall({1}));
  EXPECT_TRUE(same_function(fft_poly(touchard(2)), mono({0, 0, 1})));
  EXPECT_EQ(ifft_poly(fall({0, 0, 1})), mono({0, 0, 1}));
  EXPECT_EQ(ifft_poly(mono({0, 0, 0, 1})), touchard(3));
  EXPECT_TRUE(ifft_poly(BasisPolynomial(Basis::falling)).is_zero());
  EXPECT_TRUE(same_function(rft_poly(mono({0, 0, 1})), mono({0, 1, 1})));
  EXPECT_EQ(rft_poly(mono({1})).basis(), Basis::rising);
  EXPECT_TRUE(same_function(irft_poly(BasisPolynomial(Basis::rising, {0, 1})), mono({0, 1})));
}

TEST(Transforms, RoundTripsAndReflection) {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    BasisPolynomial p = rng.polynomial(20, rng.basis());
    EXPECT_TRUE(same_function(ifft_poly(fft_poly(p)), p));
    EXPECT_TRUE(same_function(irft_poly(rft_poly(p)), p));
    Rational x = rng.rational();
    EXPECT_EQ(eval(rft_poly(p), x), eval(fft_poly(reflect(p)), Rational(-x)));
  }
}

TEST(Transforms, FftAtIntegersIsDerivativeOfExpProduct) {
  // FFT(f)(k) = D^k (f e^t)|_0 = sum_j C(k,j) f^(j)(0): independent path.
  Rng rng(20);
  for (int trial = 0; trial < 30; ++trial) {
    BasisPolynomial p = rng.polynomial(10);
    for (std::size_t k = 0; k <= 12; ++k) {
      Rational expected = 0;
      for (std::size_t j = 0; j <= k; ++j) expected += Rational(binomial(k, j)) * eval(derivative(p, j), R(0));
      EXPECT_EQ(eval(fft_poly(p), Rational(static_cast<long>(k))), expected);
    }
  }
}

TEST(Transforms, BinomialTransformExamples) {
  ExactSequence one = [](std::size_t) { return R(1); };
  ExactSequence ident = [](std::size_t n) { return Rational(static_cast<long>(n)); };
  ExactSequence delta = [](std::size_t n) { return n == 0 ? R(1) : R(0); };
  ExactSequence two = [](std::size_t n) { return pow(R(2), static_cast<long>(n)); };
  EXPECT_EQ(binomial_transform(one, 3), R(8));
  EXPECT_EQ(binomial_transform(ident, 3), R(12));
  EXPECT_EQ(binomial_transform(delta, 5), R(1));
  EXPECT_EQ(inverse_binomial_transform(two, 3), R(1));
  EXPECT_EQ(inverse_binomial_transform(one, 4), R(0));
  ExactSequence sq = [](std::size_t n) { return Rational(static_cast<long>(n * n)); };
  ExactSequence bt = [&](std::size_t x) { return binomial_transform(sq, x); };
  for (std::size_t x = 0; x <= 10; ++x) EXPECT_EQ(inverse_binomial_transform(bt, x), sq(x));
}

TEST(Transforms, ConvolutionExamples) {
  ExactSequence one = [](std::size_t) { return R(1); };
  ExactSequence two = [](std::size_t n) { return pow(R(2), static_cast<long>(n)); };
  ExactSequence delta = [](std::size_t n) { return n == 0 ? R(1) : R(0); };
  ExactSequence sq = [](std::size_t n) { return Rational(static_cast<long>(n * n + 1)); };
  EXPECT_EQ(binomial_convolution(one, one, 3), R(8));
  EXPECT_EQ(binomial_convolution(one, two, 4), R(81));
  for (std::size_t x = 0; x <= 6; ++x) EXPECT_EQ(binomial_convolution(sq, delta, x), sq(x));
}

TEST(Transforms, EgfProducts) {
  ExactSequence one = [](std::size_t) { return R(1); };
  ExactSequence ident = [](std::size_t n) { return Rational(static_cast<long>(n)); };
  EXPECT_EQ(egf_product_coeffs(one, one, 4), (std::vector<Rational>{1, 2, 4, 8}));
  EXPECT_EQ(egf_product_coeffs(ident, one, 4), (std::vector<Rational>{0, 1, 4, 12}));
  EXPECT_EQ(iterated_convolution(one, 2, 4)[3], R(27));
}

TEST(Transforms, HadamardIfft) {
  EXPECT_TRUE(same_function(hadamard_ifft(mono({0, 1}), mono({0, 1})), mono({0, 1, 1})));
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    BasisPolynomial f = rng.polynomial(8, Basis::falling), g = rng.polynomial(8, Basis::falling);
    EXPECT_TRUE(same_function(hadamard_ifft(f, fall({1})), ifft_poly(f)));
    EXPECT_TRUE(same_function(hadamard_ifft(f, g), ifft_poly(multiply(f, g))));
  }
}

TEST(Transforms, CoefficientExtraction) {
  ExactSequence exp_taylor = [](std::size_t n) { return Rational(1) / Rational(factorial(n)); };
  ExactSequence geometric = [](std::size_t) { return R(1); };
  EXPECT_EQ(coefficient_extract(exp_taylor, 2), R(1, 2));
  EXPECT_EQ(coefficient_extract(mono({3, 0, 1}), 0), R(3));
  EXPECT_EQ(coefficient_extract(geometric, 5), R(1));
}
