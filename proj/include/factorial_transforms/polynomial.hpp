#pragma once

// Exact univariate polynomials over the rationals, expressed in one of three
// bases: monomials x^n, falling factorials (x)_n, rising factorials x^(n).

#include "factorial_transforms/combinatorics.hpp"
#include "factorial_transforms/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace ft {

enum class Basis { monomial, falling, rising };

inline std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::falling: return "falling";
    case Basis::rising: return "rising";
  }
  return "monomial";
}

inline Basis parse_basis(std::string_view name) {
  if (name == "monomial") return Basis::monomial;
  if (name == "falling") return Basis::falling;
  if (name == "rising") return Basis::rising;
  throw ParseError("unknown basis '" + std::string(name) + "'");
}

class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficient vector tagged with its basis. Trailing zeros are always
/// stripped, so equality is structural; the zero polynomial has no
/// coefficients.
class BasisPolynomial {
 public:
  BasisPolynomial() = default;
  explicit BasisPolynomial(Basis basis) : basis_(basis) {}
  BasisPolynomial(Basis basis, std::vector<Rational> coeffs) : basis_(basis), coeffs_(std::move(coeffs)) {
    canonicalize();
  }
  BasisPolynomial(Basis basis, std::initializer_list<long> coeffs) : basis_(basis) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    canonicalize();
  }

  static BasisPolynomial constant(const Rational& c, Basis basis = Basis::monomial) {
    return BasisPolynomial(basis, std::vector<Rational>{c});
  }

  /// c times the n-th basis element.
  static BasisPolynomial element(Basis basis, std::size_t n, const Rational& c = 1) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = c;
    return BasisPolynomial(basis, std::move(coeffs));
  }

  Basis basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  Rational coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }

  friend bool operator==(const BasisPolynomial& a, const BasisPolynomial& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }

  BasisPolynomial& operator+=(const BasisPolynomial& other) {
    require_same_basis(other);
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    canonicalize();
    return *this;
  }
  BasisPolynomial& operator-=(const BasisPolynomial& other) {
    require_same_basis(other);
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    canonicalize();
    return *this;
  }
  BasisPolynomial& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    canonicalize();
    return *this;
  }

  friend BasisPolynomial operator+(BasisPolynomial a, const BasisPolynomial& b) { return a += b; }
  friend BasisPolynomial operator-(BasisPolynomial a, const BasisPolynomial& b) { return a -= b; }
  friend BasisPolynomial operator*(BasisPolynomial a, const Rational& c) { return a *= c; }
  friend BasisPolynomial operator*(const Rational& c, BasisPolynomial a) { return a *= c; }
  friend BasisPolynomial operator-(BasisPolynomial a) { return a *= Rational(-1); }

 private:
  void canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  void require_same_basis(const BasisPolynomial& other) const {
    if (other.basis_ != basis_) {
      throw BasisMismatch("basis mismatch: " + std::string(to_string(basis_)) + " vs " +
                          std::string(to_string(other.basis_)));
    }
  }

  Basis basis_ = Basis::monomial;
  std::vector<Rational> coeffs_;
};

namespace detail {

inline std::vector<Rational> monomial_to_falling(const std::vector<Rational>& a) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0) continue;
    auto row = stirling_second_row(n);
    for (std::size_t k = 0; k <= n; ++k) {
      if (row[k] != 0) out[k] += a[n] * Rational(row[k]);
    }
  }
  return out;
}

inline std::vector<Rational> falling_to_monomial(const std::vector<Rational>& a) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0) continue;
    auto row = stirling_first_row(n);
    for (std::size_t k = 0; k <= n; ++k) {
      if (row[k] == 0) continue;
      Rational c(row[k]);
      out[k] += ((n - k) % 2 == 0) ? a[n] * c : Rational(-(a[n] * c));
    }
  }
  return out;
}

inline std::vector<Rational> monomial_to_rising(const std::vector<Rational>& a) {
  // x^n = sum_k (-1)^(n-k) {n k} x^(k)
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0) continue;
    auto row = stirling_second_row(n);
    for (std::size_t k = 0; k <= n; ++k) {
      if (row[k] == 0) continue;
      Rational c(row[k]);
      out[k] += ((n - k) % 2 == 0) ? a[n] * c : Rational(-(a[n] * c));
    }
  }
  return out;
}

inline std::vector<Rational> rising_to_monomial(const std::vector<Rational>& a) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0) continue;
    auto row = stirling_first_row(n);
    for (std::size_t k = 0; k <= n; ++k) {
      if (row[k] != 0) out[k] += a[n] * Rational(row[k]);
    }
  }
  return out;
}

template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else if constexpr (std::is_floating_point_v<T>) {
    return r.convert_to<T>();
  } else if constexpr (mp::is_number<T>::value) {
    return T(numerator_of(r)) / T(denominator_of(r));
  } else {
    return static_cast<T>(r);
  }
}

}  // namespace detail

/// Same polynomial function, expressed in `target`.
inline BasisPolynomial convert_basis(const BasisPolynomial& p, Basis target) {
  if (p.basis() == target) return p;
  std::vector<Rational> mono;
  switch (p.basis()) {
    case Basis::monomial: mono = p.coeffs(); break;
    case Basis::falling: mono = detail::falling_to_monomial(p.coeffs()); break;
    case Basis::rising: mono = detail::rising_to_monomial(p.coeffs()); break;
  }
  switch (target) {
    case Basis::monomial: return BasisPolynomial(target, std::move(mono));
    case Basis::falling: return BasisPolynomial(target, detail::monomial_to_falling(mono));
    case Basis::rising: return BasisPolynomial(target, detail::monomial_to_rising(mono));
  }
  return p;
}

/// Value at x; exact when T is Rational. Uses nested (Newton-Horner) forms
/// for the factorial bases.
template <class T>
T eval(const BasisPolynomial& p, const T& x) {
  const auto& c = p.coeffs();
  T acc(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    T node = x;
    if (p.basis() == Basis::falling) node = x - T(static_cast<long>(i));
    if (p.basis() == Basis::rising) node = x + T(static_cast<long>(i));
    acc = detail::from_rational<T>(c[i]) + node * acc;
  }
  return acc;
}

/// q(x) = p(x + a), in the basis of p.
inline BasisPolynomial shift(const BasisPolynomial& p, const Rational& a) {
  if (a == 0 || p.is_zero()) return p;
  auto mono = convert_basis(p, Basis::monomial).coeffs();
  std::size_t n = mono.size();
  // Repeated synthetic division (Taylor shift).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) mono[j - 1] += a * mono[j];
  }
  return convert_basis(BasisPolynomial(Basis::monomial, std::move(mono)), p.basis());
}

/// q(x) = p(a x), in the basis of p.
inline BasisPolynomial scale_argument(const BasisPolynomial& p, const Rational& a) {
  auto mono = convert_basis(p, Basis::monomial).coeffs();
  Rational power = 1;
  for (auto& c : mono) {
    c *= power;
    power *= a;
  }
  return convert_basis(BasisPolynomial(Basis::monomial, std::move(mono)), p.basis());
}

/// q(x) = p(-x), in the basis of p.
inline BasisPolynomial reflect(const BasisPolynomial& p) { return scale_argument(p, -1); }

namespace detail {

inline std::vector<Rational> multiply_falling(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                              bool rising) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0) continue;
    for (std::size_t m = 0; m < b.size(); ++m) {
      if (b[m] == 0) continue;
      Rational ab = a[n] * b[m];
      // (x)_n (x)_m = sum_k C(n,k) C(m,k) k! (x)_{n+m-k}; the rising basis
      // picks up (-1)^k through x^(n) = (-1)^n (-x)_n.
      BigInt kfact = 1;
      for (std::size_t k = 0; k <= std::min(n, m); ++k) {
        if (k > 0) kfact *= k;
        Rational c(binomial(n, k) * binomial(m, k) * kfact);
        if (rising && k % 2 == 1) c = -c;
        out[n + m - k] += ab * c;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Exact product; both factors must share a basis.
inline BasisPolynomial multiply(const BasisPolynomial& p, const BasisPolynomial& q) {
  if (p.basis() != q.basis()) {
    throw BasisMismatch("multiply: basis mismatch: " + std::string(to_string(p.basis())) + " vs " +
                        std::string(to_string(q.basis())));
  }
  if (p.is_zero() || q.is_zero()) return BasisPolynomial(p.basis());
  switch (p.basis()) {
    case Basis::monomial: {
      std::vector<Rational> out(p.size() + q.size() - 1, Rational(0));
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p.coeffs()[i] * q.coeffs()[j];
      }
      return BasisPolynomial(Basis::monomial, std::move(out));
    }
    case Basis::falling: return BasisPolynomial(Basis::falling, detail::multiply_falling(p.coeffs(), q.coeffs(), false));
    case Basis::rising: return BasisPolynomial(Basis::rising, detail::multiply_falling(p.coeffs(), q.coeffs(), true));
  }
  return p;
}

/// k-th derivative, in the basis of p.
inline BasisPolynomial derivative(const BasisPolynomial& p, std::size_t k = 1) {
  auto mono = convert_basis(p, Basis::monomial).coeffs();
  for (std::size_t step = 0; step < k && !mono.empty(); ++step) {
    for (std::size_t n = 1; n < mono.size(); ++n) mono[n - 1] = mono[n] * Rational(n);
    mono.pop_back();
  }
  return convert_basis(BasisPolynomial(Basis::monomial, std::move(mono)), p.basis());
}

/// k-th forward difference, f(x+1) - f(x) iterated; uses D (x)_n = n (x)_{n-1}.
inline BasisPolynomial forward_difference(const BasisPolynomial& p, std::size_t k = 1) {
  auto fall = convert_basis(p, Basis::falling).coeffs();
  for (std::size_t step = 0; step < k && !fall.empty(); ++step) {
    for (std::size_t n = 1; n < fall.size(); ++n) fall[n - 1] = fall[n] * Rational(n);
    fall.pop_back();
  }
  return convert_basis(BasisPolynomial(Basis::falling, std::move(fall)), p.basis());
}

/// k-th backward difference, f(x) - f(x-1) iterated.
inline BasisPolynomial backward_difference(const BasisPolynomial& p, std::size_t k = 1) {
  BasisPolynomial q = p;
  for (std::size_t step = 0; step < k && !q.is_zero(); ++step) q = q - shift(q, -1);
  return q;
}

/// Antiderivative with zero constant term.
inline BasisPolynomial antiderivative(const BasisPolynomial& p) {
  auto mono = convert_basis(p, Basis::monomial).coeffs();
  std::vector<Rational> out(mono.size() + 1, Rational(0));
  for (std::size_t n = 0; n < mono.size(); ++n) out[n + 1] = mono[n] / Rational(n + 1);
  return convert_basis(BasisPolynomial(Basis::monomial, std::move(out)), p.basis());
}

/// Indefinite sum F with F(x+1) - F(x) = p(x) and F(0) = 0.
inline BasisPolynomial indefinite_sum(const BasisPolynomial& p) {
  auto fall = convert_basis(p, Basis::falling).coeffs();
  std::vector<Rational> out(fall.size() + 1, Rational(0));
  for (std::size_t n = 0; n < fall.size(); ++n) out[n + 1] = fall[n] / Rational(n + 1);
  return convert_basis(BasisPolynomial(Basis::falling, std::move(out)), p.basis());
}

/// Newton forward interpolation through (0, v_0), ..., (d, v_d); the result
/// is in the falling basis with coefficients D^n f(0) / n!.
inline BasisPolynomial interpolate_integer_samples(std::vector<Rational> values) {
  std::vector<Rational> coeffs;
  coeffs.reserve(values.size());
  BigInt nfact = 1;
  for (std::size_t n = 0; !values.empty(); ++n) {
    if (n > 0) nfact *= n;
    coeffs.push_back(values.front() / Rational(nfact));
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return BasisPolynomial(Basis::falling, std::move(coeffs));
}

/// Largest absolute coefficient difference after bringing q into p's basis.
inline Rational max_coefficient_difference(const BasisPolynomial& p, const BasisPolynomial& q) {
  BasisPolynomial d = p - convert_basis(q, p.basis());
  Rational worst = 0;
  for (const auto& c : d.coeffs()) worst = std::max(worst, abs(c));
  return worst;
}

}  // namespace ft
