#pragma once

#include <vector>

#include "ncalg/rational.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg {

enum class SeriesFlavor { graded, cumulative };

/// Dimension counts indexed by degree, values[n] = dimension at degree n
/// (graded) or through degree n (cumulative). Values are exact integers.
struct DimensionSeries {
  SeriesFlavor flavor = SeriesFlavor::graded;
  std::vector<BigInt> values;

  std::size_t size() const { return values.size(); }
  long long max_degree() const { return static_cast<long long>(values.size()) - 1; }
  const BigInt& at(std::size_t n) const { return values.at(n); }

  bool operator==(const DimensionSeries&) const = default;
};

/// Counts words irreducible under the system, graded by weighted degree, for
/// degrees 0..max_degree. Uses a failure-link automaton over the forbidden
/// factors (the rule left-hand sides), so runtime is polynomial in
/// max_degree. Requires sys.completed_to() >= max_degree so the counts are
/// actual algebra dimensions; throws std::invalid_argument otherwise.
DimensionSeries normal_word_counts(const RewriteSystem& sys, long long max_degree);

/// Same counts by explicit enumeration of all words; exponential and
/// independent of the automaton, for cross-checks only. Guards:
/// alphabet size <= 4 and max_degree <= 14 (std::domain_error beyond).
DimensionSeries brute_force_counts(const RewriteSystem& sys, long long max_degree);
DimensionSeries brute_force_counts_serial(const RewriteSystem& sys, long long max_degree);

/// Number of partitions of n, by the pentagonal-number recurrence.
BigInt partition_p(long long n);
std::vector<BigInt> partition_table(long long max_n);

/// The closed-form count sum_{j=0..n} (2j+1) p(n-j) attached to the
/// normal-form parameterization of the algebra A; compared against the
/// automaton count, which is the ground truth, it overshoots by at most 1.
BigInt kobayashi_closed_form(long long n);

/// Partial sums of a graded series.
DimensionSeries cumulative(const DimensionSeries& graded);

enum class GrowthLabel { polynomial, intermediate, exponential };

struct GrowthClass {
  GrowthLabel label = GrowthLabel::polynomial;
  /// Intermediate growth exponent: slope of log log gamma(n) against log n
  /// over the top half of the sampled range. Meaningful only for label ==
  /// intermediate.
  double alpha = 0.0;
  /// Least-squares slope of log gamma(n) against log n over the top half;
  /// the degree estimate when label == polynomial.
  double degree = 0.0;
  // Diagnostics (the only floating-point outputs in the library).
  double median_ratio = 0.0;
  double max_ratio_drop = 0.0;
  double max_second_difference = 0.0;
};

const char* to_string(GrowthLabel label);

/// Classifies a cumulative series gamma(first_degree..) as polynomial,
/// intermediate or exponential:
///  - exponential if the ratios gamma(n+1)/gamma(n) over the top quarter of
///    the range have median > 1.05 and are non-decreasing within 1e-9;
///  - else polynomial if the log-log slope over the top half is < 8 and the
///    second differences of log gamma are below 1e-2 in absolute value;
///  - else intermediate, with alpha fitted as above.
/// Requires a cumulative series with at least 16 positive entries from
/// first_degree on; throws std::invalid_argument otherwise.
GrowthClass classify_growth(const DimensionSeries& series, long long first_degree = 0);

}  // namespace ncalg
