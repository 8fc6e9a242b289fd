#include "ncalg/pbw.hpp"

#include <cmath>
#include <stdexcept>

#include "fit.hpp"

namespace ncalg {

PowerSeries enveloping_series(const DimensionSeries& lie_dims, long long max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  if (lie_dims.flavor != SeriesFlavor::graded)
    throw std::invalid_argument("enveloping_series expects graded Lie dimensions");
  if (lie_dims.max_degree() < max_degree)
    throw std::invalid_argument("Lie dimensions are not known through max_degree");
  if (lie_dims.values[0] != 0)
    throw std::invalid_argument("a graded Lie algebra has no degree-0 component");
  for (const BigInt& v : lie_dims.values)
    if (v < 0) throw std::invalid_argument("negative Lie dimension");

  // Multiply the factors (1 - t^n)^(-a_n) one degree at a time; the expansion
  // of a single factor has coefficients binom(a_n - 1 + j, j) at t^(n j).
  std::vector<BigInt> c(max_degree + 1, BigInt(0));
  c[0] = 1;
  for (long long n = 1; n <= max_degree; ++n) {
    const BigInt& a = lie_dims.values[n];
    if (a == 0) continue;
    std::vector<BigInt> nc(max_degree + 1, BigInt(0));
    for (long long k = 0; k <= max_degree; ++k) {
      if (c[k] == 0) continue;
      BigInt binom = 1;
      for (long long j = 0; k + j * n <= max_degree; ++j) {
        if (j > 0) binom = binom * (a - 1 + j) / j;  // exact at every step
        nc[k + j * n] += binom * c[k];
      }
    }
    c = std::move(nc);
  }

  PowerSeries out;
  out.coeff = std::move(c);
  return out;
}

CrossCheck pbw_cross_check(const DimensionSeries& lie_dims,
                           const DimensionSeries& algebra_counts, long long max_degree) {
  if (algebra_counts.flavor != SeriesFlavor::graded)
    throw std::invalid_argument("pbw_cross_check expects graded algebra counts");
  if (algebra_counts.max_degree() < max_degree)
    throw std::invalid_argument("algebra counts are not known through max_degree");
  PowerSeries predicted = enveloping_series(lie_dims, max_degree);

  CrossCheck out;
  for (long long n = 0; n <= max_degree; ++n) {
    ++out.degrees_compared;
    if (predicted.coeff[n] != algebra_counts.values[n]) out.mismatch_degrees.push_back(n);
  }
  return out;
}

ExponentFit exponent_fit(int d, long long max_degree) {
  if (d < 0 || d > 2) throw std::invalid_argument("exponent_fit supports d in {0, 1, 2}");
  if (max_degree < 100) throw std::invalid_argument("exponent_fit needs max_degree >= 100");

  DimensionSeries a;
  a.flavor = SeriesFlavor::graded;
  a.values.resize(max_degree + 1);
  a.values[0] = 0;
  for (long long n = 1; n <= max_degree; ++n) {
    BigInt v = 1;
    for (int k = 0; k < d; ++k) v *= n + 1;
    a.values[n] = v;
  }
  PowerSeries b = enveloping_series(a, max_degree);

  std::vector<BigInt> cum(b.coeff.size());
  BigInt acc = 0;
  for (std::size_t n = 0; n < b.coeff.size(); ++n) {
    acc += b.coeff[n];
    cum[n] = acc;
  }

  std::vector<double> xs, ys, ys_graded;
  for (long long n = max_degree / 2; n <= max_degree; ++n) {
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(log_value(cum[n])));
    ys_graded.push_back(std::log(log_value(b.coeff[n])));
  }
  detail::LineFit fit = detail::fit_line(xs, ys);

  ExponentFit out;
  out.alpha = fit.slope;
  out.alpha_graded = detail::fit_line(xs, ys_graded).slope;
  out.expected = (d + 1.0) / (d + 2.0);
  out.rms_residual = fit.rms_residual;
  out.points = static_cast<int>(xs.size());
  return out;
}

}  // namespace ncalg
