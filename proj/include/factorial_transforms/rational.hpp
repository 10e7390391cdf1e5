#pragma once

// Exact number types shared by the exact layer.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ft {

namespace mp = boost::multiprecision;

/// Arbitrary-precision signed integer.
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

/// Base class for mathematical domain violations (poles, zero parameters,
/// vanishing factors).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline BigInt numerator_of(const Rational& r) { return BigInt(mp::numerator(r)); }
inline BigInt denominator_of(const Rational& r) { return BigInt(mp::denominator(r)); }

/// "p/q" or "p"; denominators of 1 are omitted.
inline std::string to_string(const Rational& r) {
  BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

namespace detail {

inline BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("malformed rational: '" + std::string(whole) + "'");
  }
  // Leading zeros would select octal in the BigInt string constructor.
  std::string s(digits.substr(std::min(digits.find_first_not_of('0'), digits.size() - 1)));
  BigInt value(s);
  return text.front() == '-' ? BigInt(-value) : value;
}

}  // namespace detail

/// Parses "p/q", "p", or a plain decimal such as "-1.25" (taken exactly).
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("malformed rational: empty string");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = detail::parse_integer(text.substr(0, slash), text);
    BigInt den = detail::parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    bool negative = text.front() == '-';
    std::string_view body = text;
    if (body.front() == '-' || body.front() == '+') body.remove_prefix(1);
    dot = body.find('.');
    std::string digits = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
    if (digits.empty()) throw ParseError("malformed rational: '" + std::string(text) + "'");
    BigInt scaled = detail::parse_integer(digits, text);
    if (digits.front() == '-' || digits.front() == '+')
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(body.size() - dot - 1));
    Rational value(scaled, scale);
    return negative ? Rational(-value) : value;
  }
  return Rational(detail::parse_integer(text, text));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// r^e for a (possibly negative) integer exponent.
inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

}  // namespace ft
