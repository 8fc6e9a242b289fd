#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/growth.hpp"
#include "ncalg/rational.hpp"

namespace ncalg {

enum class LieFamily : std::uint8_t { X, Y, Z };

/// Basis element of the graded Lie algebra L: x_k, y_k of degree 2k-1 and
/// z_k of degree 2k, k >= 1.
struct BasisLabel {
  LieFamily family = LieFamily::X;
  int index = 1;

  long long degree() const {
    return family == LieFamily::Z ? 2LL * index : 2LL * index - 1;
  }
  auto operator<=>(const BasisLabel&) const = default;
};

std::string to_string(const BasisLabel& b);

using LieElement = std::map<BasisLabel, Rational>;

/// L truncated at a degree bound, with the full structure-constant table
///   [x_i, y_j] = z_{i+j-1}, [x_i, z_j] = -2 x_{i+j}, [y_i, z_j] = 2 y_{i+j},
/// and all brackets within a family zero.
class GradedLie {
 public:
  static GradedLie build_L(long long max_degree);

  long long max_degree() const { return max_degree_; }
  const std::vector<BasisLabel>& basis() const { return basis_; }

  /// Structure constants for a basis pair. Throws std::domain_error when the
  /// degrees sum beyond the truncation (the table cannot certify a value).
  const std::vector<std::pair<BasisLabel, Rational>>& bracket_basis(const BasisLabel& a,
                                                                    const BasisLabel& b) const;

  /// Bilinear extension of the table. Throws std::domain_error if any pair
  /// of terms with nonzero coefficients exceeds the truncation.
  LieElement bracket(const LieElement& u, const LieElement& v) const;

  /// Number of basis elements in each degree 0..max_degree (2 in odd
  /// degrees, 1 in even positive degrees, 0 in degree 0).
  DimensionSeries graded_dims(long long max_degree) const;

 private:
  long long max_degree_ = 0;
  std::vector<BasisLabel> basis_;
  std::map<std::pair<BasisLabel, BasisLabel>, std::vector<std::pair<BasisLabel, Rational>>>
      table_;
};

struct JacobiReport {
  long long triples_checked = 0;
  std::vector<std::array<BasisLabel, 3>> violations;
  bool ok() const { return violations.empty(); }
};

/// Verifies the Jacobi identity on all basis triples whose degrees sum to at
/// most max_degree. The parallel version sweeps the triple list with OpenMP;
/// the serial version is the reference.
JacobiReport jacobi_check(const GradedLie& g, long long max_degree);
JacobiReport jacobi_check_serial(const GradedLie& g, long long max_degree);

/// Polynomial 2x2 matrices over Q[t], used to realize L concretely:
///   x_i = t^(i-1) E12, y_i = t^i E21, z_i = t^i (E11 - E22).
struct PolyMatrix {
  // entry[r][c] holds the coefficient list of t^0, t^1, ...
  std::array<std::array<std::vector<Rational>, 2>, 2> entry;

  static PolyMatrix x(int i);
  static PolyMatrix y(int i);
  static PolyMatrix z(int i);
  static PolyMatrix zero();

  PolyMatrix mul(const PolyMatrix& other) const;
  PolyMatrix add(const PolyMatrix& other) const;
  PolyMatrix sub(const PolyMatrix& other) const;
  PolyMatrix scale(const Rational& c) const;
  std::vector<Rational> trace() const;
  bool is_zero() const;
  bool operator==(const PolyMatrix& other) const;
};

struct MatrixModelReport {
  int max_index = 0;
  long long pairs_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Compares every bracket of generators with index <= max_index against the
/// commutator of their matrix realizations, and checks that all matrices lie
/// in the expected subalgebra (zero trace, off-diagonal shapes).
MatrixModelReport matrix_model_check(int max_index);

}  // namespace ncalg
