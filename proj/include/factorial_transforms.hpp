#pragma once

// Umbrella header.

#include "factorial_transforms/combinatorics.hpp"
#include "factorial_transforms/formal_series.hpp"
#include "factorial_transforms/numeric/gamma.hpp"
#include "factorial_transforms/numeric/quadrature.hpp"
#include "factorial_transforms/numeric/series_summation.hpp"
#include "factorial_transforms/numeric/sources.hpp"
#include "factorial_transforms/numeric/transforms_numeric.hpp"
#include "factorial_transforms/operator_calculus.hpp"
#include "factorial_transforms/polynomial.hpp"
#include "factorial_transforms/polynomial_json.hpp"
#include "factorial_transforms/rational.hpp"
#include "factorial_transforms/special_polynomials.hpp"
#include "factorial_transforms/transforms_exact.hpp"
#include "factorial_transforms/verify/registry.hpp"
#include "factorial_transforms/verify/report.hpp"
