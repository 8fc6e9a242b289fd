#pragma once

#include <vector>

#include "ncalg/growth.hpp"
#include "ncalg/rational.hpp"

namespace ncalg {

/// Truncated formal power series with exact integer coefficients.
struct PowerSeries {
  std::vector<BigInt> coeff;

  long long truncation() const { return static_cast<long long>(coeff.size()) - 1; }
  const BigInt& at(std::size_t n) const { return coeff.at(n); }

  bool operator==(const PowerSeries&) const = default;
};

/// Dimension series of the universal enveloping algebra of a graded Lie
/// algebra with graded dimensions a: the coefficients of
///   prod_{n>=1} (1 - t^n)^(-a_n)
/// through degree max_degree. Requires a graded series with a_0 = 0 and all
/// values nonnegative, defined through max_degree.
PowerSeries enveloping_series(const DimensionSeries& lie_dims, long long max_degree);

struct CrossCheck {
  long long degrees_compared = 0;
  std::vector<long long> mismatch_degrees;
  bool ok() const { return mismatch_degrees.empty(); }
};

/// Coefficient-by-coefficient comparison of the product formula applied to
/// lie_dims against independently obtained algebra dimensions.
CrossCheck pbw_cross_check(const DimensionSeries& lie_dims,
                           const DimensionSeries& algebra_counts, long long max_degree);

struct ExponentFit {
  double alpha = 0;          // slope of log log B(n) vs log n, B cumulative
  double alpha_graded = 0;   // same fit on the graded coefficients b_n
  double expected = 0;       // (d + 1) / (d + 2)
  double rms_residual = 0;
  int points = 0;
};

/// For a_n = (n+1)^d, expands the product formula to max_degree and fits the
/// slope of log log B(n) against log n over the top half of the range, where
/// B is the cumulative sum of the coefficients; the expected slope is
/// (d+1)/(d+2). Requires d in {0, 1, 2} and max_degree >= 100.
ExponentFit exponent_fit(int d, long long max_degree);

}  // namespace ncalg
