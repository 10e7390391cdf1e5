#pragma once

// Extended-precision real used for series work. The Newton sums behind the
// numeric transforms and fractional operators cancel heavily (binomial
// alternating sums whose absolute mass grows like c^n), so they run with
// ~80 significant digits and only the final value is rounded to double.

#include "factorial_transforms/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <string>

namespace ft {

using WideReal = mp::number<mp::cpp_bin_float<80>, mp::et_off>;

inline double to_double(const WideReal& x) { return x.convert_to<double>(); }

inline WideReal to_wide(const Rational& r) { return WideReal(numerator_of(r)) / WideReal(denominator_of(r)); }

/// A series failed its tail policy and could not be accelerated to the
/// requested tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double partial_value, double error_estimate)
      : std::runtime_error(what), partial_value_(partial_value), error_estimate_(error_estimate) {}

  double partial_value() const { return partial_value_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double partial_value_;
  double error_estimate_;
};

}  // namespace ft
